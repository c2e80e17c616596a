// Copyright 2026 The lmono Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to lmono. Functions return LMONO_OK or an error status; the
 * message for the last failure on the calling thread is available from
 * lmono_last_error(). Strings returned through char** are heap-allocated and
 * released with lmono_string_free(). Reports are JSON documents. */

#ifndef LMONO_LMONO_H
#define LMONO_LMONO_H

#include <stddef.h>

#if defined(_WIN32)
#define LMONO_API __declspec(dllexport)
#else
#define LMONO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum lmono_status {
  LMONO_OK = 0,
  LMONO_E_DOMAIN = 1,
  LMONO_E_POLE = 2,
  LMONO_E_PRECISION = 3,
  LMONO_E_PHASE = 4,
  LMONO_E_CONTOUR = 5,
  LMONO_E_EMPTY_LIST = 6,
  LMONO_E_TAIL = 7,
  LMONO_E_FORMAT = 8,
  LMONO_E_CONVERGENCE = 9,
  LMONO_E_OVERFLOW = 10,
  LMONO_E_TIE = 11,
  LMONO_E_NO_FINDINGS = 12,
  LMONO_E_DOMINANCE = 13,
  LMONO_E_SEARCH = 14,
  LMONO_E_GEOMETRY = 15,
  LMONO_E_IO = 16,
  LMONO_E_ARGUMENT = 98,
  LMONO_E_INTERNAL = 99
};

typedef struct lmono_zeros lmono_zeros;
typedef struct lmono_source lmono_source;

LMONO_API const char* lmono_version(void);
LMONO_API const char* lmono_last_error(void);
LMONO_API const char* lmono_status_name(int status);
LMONO_API void lmono_string_free(char* text);

/* Characters and L-values. */
LMONO_API int lmono_is_fundamental_discriminant(long long d);
LMONO_API int lmono_kronecker(long long d, unsigned long long n, int* out);
LMONO_API int lmono_character_info(long long d, long long* modulus, int* parity);
LMONO_API int lmono_l_value(long long d, double re, double im, double* out_re, double* out_im,
                            double* out_error);
LMONO_API int lmono_z_function(long long d, double t, double* out);

/* Zero lists. */
LMONO_API double lmono_max_scan_step(long long modulus, double height);
LMONO_API int lmono_zeros_scan(long long d, double height, double step, lmono_zeros** out);
LMONO_API int lmono_zeros_load(const char* path, lmono_zeros** out);
LMONO_API int lmono_zeros_ingest(const char* path, lmono_zeros** out);
LMONO_API int lmono_zeros_store(const lmono_zeros* zeros, const char* path);
/* Runs count_check and marks the list complete when it passes. */
LMONO_API int lmono_zeros_verify(lmono_zeros* zeros, char** report_json);
LMONO_API int lmono_zeros_summary_json(const lmono_zeros* zeros, char** json);
LMONO_API int lmono_zeros_csv(const lmono_zeros* zeros, char** text);
LMONO_API size_t lmono_zeros_count(const lmono_zeros* zeros);
LMONO_API double lmono_zeros_ordinate(const lmono_zeros* zeros, size_t index);
LMONO_API double lmono_zeros_height(const lmono_zeros* zeros);
LMONO_API int lmono_zeros_complete(const lmono_zeros* zeros);
LMONO_API void lmono_zeros_free(lmono_zeros* zeros);

/* Zero sources for the zero-sum formulas. Synthetic sets take points with
 * nonnegative imaginary part; conjugates are implied. */
LMONO_API int lmono_source_from_zeros(const lmono_zeros* zeros, lmono_source** out);
LMONO_API int lmono_source_synthetic(const double* re, const double* im, size_t n, lmono_source** out);
LMONO_API void lmono_source_free(lmono_source* source);

/* Derivatives of log L. */
LMONO_API int lmono_deriv_series_json(long long d, double s, int k, double eps, char** json);
LMONO_API int lmono_deriv_zerosum_json(const lmono_source* source, double s, int k, char** json);
LMONO_API int lmono_g_normalized_json(const lmono_source* source, double s, int k, char** json);
LMONO_API int lmono_eta_json(const lmono_source* source, double s, char** json);

/* Monotonicity reports. */
LMONO_API int lmono_constants_json(const lmono_source* source, char** json);
/* Predicted onset K* = ceil(2 pi / (theta_a - theta_b)) for [a, b]. */
LMONO_API int lmono_scan_onset(const lmono_source* source, double a, double b, long long* k_star);
LMONO_API int lmono_scan_json(const lmono_source* source, double a, double b, int k_max, double tolerance,
                              char** json);
LMONO_API int lmono_fingerprint_json(const lmono_source* source, double s, int k_min, int k_max,
                                     double tolerance, char** json);
/* Line records: k=<int> trit=<-1|0|1|?> g=<float> fbound=<float> gerr=<float> */
LMONO_API int lmono_fingerprint_records(const lmono_source* source, double s, int k_min, int k_max,
                                        double tolerance, char** text);
LMONO_API int lmono_compare_json(const lmono_source* source, double s1, double s2, int k_max,
                                 double tolerance, char** json);
LMONO_API int lmono_siegel_json(const double* re, const double* im, size_t n, const double* s_values,
                                size_t n_s, int k_start, int k_span, char** json);
LMONO_API int lmono_offline_pair_json(double rho0_re, double rho0_im, double rho1_re, double rho1_im,
                                      double delta, int window, char** json);

#ifdef __cplusplus
}
#endif

#endif
