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

#include "lmono/lmono.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lmono/error.hpp"
#include "lmono/monotonicity.hpp"
#include "lmono/version.hpp"

struct lmono_zeros {
  lmono::ZeroList list;
};

struct lmono_source {
  explicit lmono_source(const lmono::ZeroList& zeros) : source(zeros) {}
  explicit lmono_source(const lmono::SyntheticZeroSet& zeros) : source(zeros) {}
  lmono::ZeroSource source;
};

namespace {

using nlohmann::json;
using lmono::complex;

thread_local std::string last_error;

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json complex_json(complex z) { return json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

template <typename F>
int guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return LMONO_OK;
  } catch (const lmono::Error& e) {
    last_error = std::string(lmono::error_name(e.code())) + ": " + e.what();
    return static_cast<int>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LMONO_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LMONO_E_INTERNAL;
  }
}

int argument_error(const char* what) {
  last_error = std::string("ArgumentError: ") + what;
  return LMONO_E_ARGUMENT;
}

char* duplicate(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void emit(const json& j, char** out) { *out = duplicate(j.dump()); }

json constants_json(const lmono::Constants& c) {
  return json{{"gamma0_tilde", number(c.gamma0_tilde)}, {"c_chi", number(c.c_chi)},
              {"c_chi_scan", number(c.c_chi_scan)},     {"b_chi", number(c.b_chi)},
              {"C_chi", number(c.C_chi)},               {"D_chi", number(c.D_chi)}};
}

json derivative_json(const lmono::DerivativeValue& v) {
  json j{{"k", v.k}, {"s", number(v.s)}, {"method", lmono::method_name(v.method)},
         {"log_form", v.log_form}, {"error_bound", number(v.error_bound)}};
  if (v.log_form) {
    j["sign"] = v.sign;
    j["log_magnitude"] = number(v.log_magnitude);
  } else {
    j["value"] = number(v.value);
  }
  return j;
}

json trit_json(const lmono::TritEntry& e) {
  return json{{"k", e.k}, {"trit", lmono::trit_symbol(e.trit)}, {"g", number(e.g)},
              {"fbound", number(e.f_bound)}, {"gerr", number(e.g_error)}};
}

json compare_json(const lmono::CompareReport& r) {
  json j{{"s1", number(r.s1)},         {"s2", number(r.s2)},
         {"k_min", r.k_min},           {"k_max", r.k_max},
         {"examined", r.examined},     {"definite_agree", r.definite_agree},
         {"uncertain", r.uncertain},   {"first_separating_k", nullptr}};
  if (r.first_separating_k) {
    j["first_separating_k"] = *r.first_separating_k;
    j["at_s1"] = trit_json(*r.at_s1);
    j["at_s2"] = trit_json(*r.at_s2);
  }
  return j;
}

lmono::SyntheticZeroSet synthetic(const double* re, const double* im, size_t n) {
  lmono::SyntheticZeroSet set;
  for (size_t i = 0; i < n; ++i) set.zeros.emplace_back(re[i], im[i]);
  set.validate();
  return set;
}

}  // namespace

extern "C" {

const char* lmono_version(void) { return lmono::kVersion; }

const char* lmono_last_error(void) { return last_error.c_str(); }

const char* lmono_status_name(int status) {
  if (status == LMONO_OK) return "Ok";
  if (status == LMONO_E_ARGUMENT) return "ArgumentError";
  if (status == LMONO_E_INTERNAL) return "InternalError";
  if (status >= LMONO_E_DOMAIN && status <= LMONO_E_IO) {
    return lmono::error_name(static_cast<lmono::ErrorCode>(status));
  }
  return "UnknownStatus";
}

void lmono_string_free(char* text) { std::free(text); }

int lmono_is_fundamental_discriminant(long long d) { return lmono::is_fundamental_discriminant(d) ? 1 : 0; }

int lmono_kronecker(long long d, unsigned long long n, int* out) {
  if (out == nullptr) return argument_error("null output");
  return guarded([&] { *out = lmono::kronecker_symbol(d, n); });
}

int lmono_character_info(long long d, long long* modulus, int* parity) {
  if (modulus == nullptr || parity == nullptr) return argument_error("null output");
  return guarded([&] {
    const lmono::RealCharacter chi(d);
    *modulus = chi.modulus();
    *parity = chi.parity();
  });
}

int lmono_l_value(long long d, double re, double im, double* out_re, double* out_im, double* out_error) {
  if (out_re == nullptr || out_im == nullptr || out_error == nullptr) return argument_error("null output");
  return guarded([&] {
    const lmono::LPoint p = lmono::LFunction(d).evaluate(complex(re, im));
    *out_re = p.value.real();
    *out_im = p.value.imag();
    *out_error = p.error_bound;
  });
}

int lmono_z_function(long long d, double t, double* out) {
  if (out == nullptr) return argument_error("null output");
  return guarded([&] { *out = lmono::LFunction(d).z_function(t); });
}

double lmono_max_scan_step(long long modulus, double height) { return lmono::max_scan_step(modulus, height); }

int lmono_zeros_scan(long long d, double height, double step, lmono_zeros** out) {
  if (out == nullptr) return argument_error("null output");
  return guarded([&] {
    const lmono::LFunction l(d);
    auto holder = std::make_unique<lmono_zeros>();
    holder->list = lmono::scan_zeros(l, height, step);
    *out = holder.release();
  });
}

int lmono_zeros_load(const char* path, lmono_zeros** out) {
  if (path == nullptr || out == nullptr) return argument_error("null argument");
  return guarded([&] {
    auto holder = std::make_unique<lmono_zeros>();
    holder->list = lmono::load_zeros(path);
    *out = holder.release();
  });
}

int lmono_zeros_ingest(const char* path, lmono_zeros** out) {
  if (path == nullptr || out == nullptr) return argument_error("null argument");
  return guarded([&] {
    auto holder = std::make_unique<lmono_zeros>();
    holder->list = lmono::ingest_zeros(path);
    *out = holder.release();
  });
}

int lmono_zeros_store(const lmono_zeros* zeros, const char* path) {
  if (zeros == nullptr || path == nullptr) return argument_error("null argument");
  return guarded([&] { lmono::store_zeros(zeros->list, path); });
}

int lmono_zeros_verify(lmono_zeros* zeros, char** report_json) {
  if (zeros == nullptr) return argument_error("null zeros");
  return guarded([&] {
    const lmono::LFunction l(zeros->list.discriminant);
    const lmono::CountReport r = lmono::verify_zero_list(l, zeros->list);
    if (report_json != nullptr) {
      emit(json{{"expected", number(r.expected)},
                {"found", r.found},
                {"pass", r.pass},
                {"contour_height", number(r.contour_height)},
                {"nudged", r.nudged}},
           report_json);
    }
  });
}

int lmono_zeros_summary_json(const lmono_zeros* zeros, char** json_out) {
  if (zeros == nullptr || json_out == nullptr) return argument_error("null argument");
  return guarded([&] {
    const auto& z = zeros->list;
    json j{{"discriminant", z.discriminant},
           {"count", z.ordinates.size()},
           {"covered_height", number(z.covered_height)},
           {"per_zero_error", number(z.per_zero_error)},
           {"source", lmono::origin_name(z.origin)},
           {"complete", z.complete},
           {"gamma0_tilde", nullptr}};
    if (!z.ordinates.empty()) j["gamma0_tilde"] = z.ordinates.front();
    emit(j, json_out);
  });
}

int lmono_zeros_csv(const lmono_zeros* zeros, char** text) {
  if (zeros == nullptr || text == nullptr) return argument_error("null argument");
  return guarded([&] {
    std::ostringstream out;
    out.precision(17);
    out << "d,index,ordinate,error\n";
    const auto& z = zeros->list;
    for (size_t i = 0; i < z.ordinates.size(); ++i) {
      out << z.discriminant << ',' << i + 1 << ',' << z.ordinates[i] << ',' << z.per_zero_error << '\n';
    }
    *text = duplicate(out.str());
  });
}

size_t lmono_zeros_count(const lmono_zeros* zeros) { return zeros == nullptr ? 0 : zeros->list.ordinates.size(); }

double lmono_zeros_ordinate(const lmono_zeros* zeros, size_t index) {
  if (zeros == nullptr || index >= zeros->list.ordinates.size()) return std::nan("");
  return zeros->list.ordinates[index];
}

double lmono_zeros_height(const lmono_zeros* zeros) { return zeros == nullptr ? 0.0 : zeros->list.covered_height; }

int lmono_zeros_complete(const lmono_zeros* zeros) { return zeros != nullptr && zeros->list.complete ? 1 : 0; }

void lmono_zeros_free(lmono_zeros* zeros) { delete zeros; }

int lmono_source_from_zeros(const lmono_zeros* zeros, lmono_source** out) {
  if (zeros == nullptr || out == nullptr) return argument_error("null argument");
  return guarded([&] { *out = new lmono_source(zeros->list); });
}

int lmono_source_synthetic(const double* re, const double* im, size_t n, lmono_source** out) {
  if ((n > 0 && (re == nullptr || im == nullptr)) || out == nullptr) return argument_error("null argument");
  return guarded([&] { *out = new lmono_source(synthetic(re, im, n)); });
}

void lmono_source_free(lmono_source* source) { delete source; }

int lmono_deriv_series_json(long long d, double s, int k, double eps, char** json_out) {
  if (json_out == nullptr) return argument_error("null output");
  return guarded([&] {
    emit(derivative_json(lmono::f_deriv_series(lmono::RealCharacter(d), s, k, eps)), json_out);
  });
}

int lmono_deriv_zerosum_json(const lmono_source* source, double s, int k, char** json_out) {
  if (source == nullptr || json_out == nullptr) return argument_error("null argument");
  return guarded([&] { emit(derivative_json(lmono::f_deriv_zerosum(source->source, s, k)), json_out); });
}

int lmono_g_normalized_json(const lmono_source* source, double s, int k, char** json_out) {
  if (source == nullptr || json_out == nullptr) return argument_error("null argument");
  return guarded([&] {
    const lmono::NormalizedValue v = lmono::g_normalized(source->source, s, k);
    emit(json{{"k", v.k},
              {"s", number(v.s)},
              {"g", number(v.g)},
              {"cos_term", number(v.cos_term)},
              {"f_bound", number(v.f_bound)},
              {"g_error", number(v.g_error)},
              {"r_s", number(v.r_s)},
              {"theta_s", number(v.theta_s)},
              {"rho0", complex_json(v.rho0)}},
         json_out);
  });
}

int lmono_eta_json(const lmono_source* source, double s, char** json_out) {
  if (source == nullptr || json_out == nullptr) return argument_error("null argument");
  return guarded([&] {
    const lmono::EtaReport e = lmono::eta_at(source->source, s);
    emit(json{{"s", number(s)},
              {"rho0", complex_json(e.rho0)},
              {"rho_tilde", complex_json(e.rho_tilde)},
              {"eta", number(e.eta)}},
         json_out);
  });
}

int lmono_constants_json(const lmono_source* source, char** json_out) {
  if (source == nullptr || json_out == nullptr) return argument_error("null argument");
  return guarded([&] { emit(constants_json(lmono::compute_constants(source->source)), json_out); });
}

int lmono_scan_onset(const lmono_source* source, double a, double b, long long* k_star) {
  if (source == nullptr || k_star == nullptr) return argument_error("null argument");
  return guarded([&] {
    *k_star = lmono::scan_onset(source->source, a, b);
  });
}

int lmono_scan_json(const lmono_source* source, double a, double b, int k_max, double tolerance, char** json_out) {
  if (source == nullptr || json_out == nullptr) return argument_error("null argument");
  return guarded([&] {
    const lmono::ScanReport r = lmono::scan_sign_changes(source->source, a, b, k_max, tolerance);
    json crossings = json::array();
    int certified = 0;
    int dominant = 0;
    for (const auto& x : r.crossings) {
      certified += x.certified ? 1 : 0;
      dominant += x.dominant ? 1 : 0;
      crossings.push_back(json{{"k", x.k},
                               {"s_star", number(x.s_star)},
                               {"g_left", number(x.g_left)},
                               {"g_right", number(x.g_right)},
                               {"fbound_left", number(x.bound_left)},
                               {"fbound_right", number(x.bound_right)},
                               {"gerr_left", number(x.error_left)},
                               {"gerr_right", number(x.error_right)},
                               {"certified", x.certified},
                               {"dominant", x.dominant}});
    }
    emit(json{{"a", number(r.a)},
              {"b", number(r.b)},
              {"k_max", r.k_max},
              {"k_star", r.k_star},
              {"crossing_count", r.crossings.size()},
              {"certified_count", certified},
              {"dominant_count", dominant},
              {"distinct_certified_orders", r.distinct_certified_orders()},
              {"crossings", crossings}},
         json_out);
  });
}

int lmono_fingerprint_json(const lmono_source* source, double s, int k_min, int k_max, double tolerance,
                           char** json_out) {
  if (source == nullptr || json_out == nullptr) return argument_error("null argument");
  return guarded([&] {
    const lmono::SignFingerprint fp = lmono::fingerprint(source->source, s, k_min, k_max, tolerance);
    json trits = json::array();
    for (const auto& e : fp.trits) trits.push_back(trit_json(e));
    emit(json{{"s", number(fp.s)},
              {"k_min", fp.k_min},
              {"k_max", fp.k_max},
              {"tolerance", number(fp.tolerance)},
              {"definite_fraction", number(fp.definite_fraction())},
              {"trits", trits}},
         json_out);
  });
}

int lmono_fingerprint_records(const lmono_source* source, double s, int k_min, int k_max, double tolerance,
                              char** text) {
  if (source == nullptr || text == nullptr) return argument_error("null argument");
  return guarded([&] {
    *text = duplicate(lmono::fingerprint(source->source, s, k_min, k_max, tolerance).to_records());
  });
}

int lmono_compare_json(const lmono_source* source, double s1, double s2, int k_max, double tolerance,
                       char** json_out) {
  if (source == nullptr || json_out == nullptr) return argument_error("null argument");
  return guarded([&] {
    emit(compare_json(lmono::compare_fingerprints(source->source, s1, s2, k_max, tolerance)), json_out);
  });
}

int lmono_siegel_json(const double* re, const double* im, size_t n, const double* s_values, size_t n_s,
                      int k_start, int k_span, char** json_out) {
  if ((n > 0 && (re == nullptr || im == nullptr)) || (n_s > 0 && s_values == nullptr) || json_out == nullptr) {
    return argument_error("null argument");
  }
  return guarded([&] {
    const std::vector<double> s(s_values, s_values + n_s);
    const lmono::SiegelReport r = lmono::siegel_stability(synthetic(re, im, n), s, k_start, k_span);
    json j{{"beta", number(r.beta)},         {"M", r.M},
           {"stable", r.stable},             {"analytic_bound", r.analytic_bound},
           {"eta_max", number(r.eta_max)},   {"k_span", k_span},
           {"s_values", s},                  {"failing_k", nullptr}};
    if (r.failing_k) j["failing_k"] = *r.failing_k;
    emit(j, json_out);
  });
}

int lmono_offline_pair_json(double rho0_re, double rho0_im, double rho1_re, double rho1_im, double delta,
                            int window, char** json_out) {
  if (json_out == nullptr) return argument_error("null output");
  return guarded([&] {
    const lmono::OfflineReport r =
        lmono::construct_offline_pair(complex(rho0_re, rho0_im), complex(rho1_re, rho1_im), delta, window);
    emit(json{{"rho0", complex_json(r.rho0)},
              {"rho1", complex_json(r.rho1)},
              {"delta", number(r.delta)},
              {"s0", number(r.s0)},
              {"s1", number(r.s1)},
              {"theta", number(r.theta)},
              {"a", r.a},
              {"b", r.b},
              {"phi", number(r.phi)},
              {"s_prime", number(r.s_prime)},
              {"s_dblprime", number(r.s_dblprime)},
              {"eta", number(r.eta)},
              {"C_ab", number(r.c_ab)},
              {"N", r.N},
              {"window", r.window},
              {"diophantine_ok", r.diophantine_ok},
              {"diophantine_margin", number(r.diophantine_margin)},
              {"comparison", compare_json(r.comparison)},
              {"certificate", r.certificate}},
         json_out);
  });
}

}  // extern "C"
