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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lmono/logderiv.hpp"

namespace lmono {

// Distance from real s > 1/2 to the nearest zero, trivial zeros included.
double l_of_s(const ZeroSource& source, double s);

struct Constants {
  double gamma0_tilde = 0.0;
  double c_chi = 0.0;
  // Crossover of |s| > l(s) found on a grid of step 1e-3.
  double c_chi_scan = 0.0;
  double b_chi = 0.0;
  double C_chi = 0.0;
  double D_chi = 0.0;
};

Constants compute_constants(const ZeroSource& source);

struct Crossing {
  int k = 0;
  double s_star = 0.0;
  // g just left and right of s_star, at s_star -+ h with h = 1e-9 max(1, s_star).
  double g_left = 0.0;
  double g_right = 0.0;
  double bound_left = 0.0;   // f_bound at s_star - h
  double bound_right = 0.0;  // f_bound at s_star + h
  double error_left = 0.0;   // g_error at s_star - h
  double error_right = 0.0;  // g_error at s_star + h
  // Opposite signs with |g| > g_error + tolerance on both sides.
  bool certified = false;
  // Additionally |g| > f_bound on both sides.
  bool dominant = false;
};

struct ScanReport {
  double a = 0.0;
  double b = 0.0;
  int k_max = 0;
  long long k_star = 0;
  std::vector<Crossing> crossings;

  int distinct_certified_orders() const;
};

// K* = ceil(2 pi / sweep), sweep being the angle theta_s traced by the
// nearest zero as s runs over [a, b]; from K* on every order turns fully.
long long scan_onset(const ZeroSource& source, double a, double b);

ScanReport scan_sign_changes(const ZeroSource& source, double a, double b, int k_max,
                             double tolerance = 0.0);

enum class Trit { negative = -1, zero = 0, positive = 1, uncertain = 2 };

std::string trit_symbol(Trit trit);

struct TritEntry {
  int k = 0;
  Trit trit = Trit::uncertain;
  double g = 0.0;
  double f_bound = 0.0;
  double g_error = 0.0;
};

struct SignFingerprint {
  double s = 0.0;
  int k_min = 0;
  int k_max = 0;
  double tolerance = 0.0;
  std::vector<TritEntry> trits;

  double definite_fraction() const;
  // One line per order: k=<int> trit=<-1|0|1|?> g=<float> fbound=<float> gerr=<float>
  std::string to_records() const;
};

SignFingerprint fingerprint(const ZeroSource& source, double s, int k_min, int k_max,
                            double tolerance = 0.0);

struct CompareReport {
  double s1 = 0.0;
  double s2 = 0.0;
  int k_min = 0;
  int k_max = 0;
  std::optional<int> first_separating_k;
  std::optional<TritEntry> at_s1;
  std::optional<TritEntry> at_s2;
  // Orders examined before stopping (all of them when nothing separates).
  int examined = 0;
  int definite_agree = 0;
  int uncertain = 0;
};

// Requires C_chi < s1 <= s2.
CompareReport compare_fingerprints(const ZeroSource& source, double s1, double s2, int k_max,
                                   double tolerance = 0.0);

// Same comparison on orders [k_min, k_max] without the C_chi requirement;
// the nearest zero must still be a complex zero at both points.
CompareReport compare_window(const ZeroSource& source, double s1, double s2, int k_min, int k_max,
                             double tolerance = 0.0);

struct SiegelReport {
  double beta = 0.0;
  int M = 0;
  bool stable = false;
  int analytic_bound = 0;
  double eta_max = 0.0;
  // First (k, s) where 1 + R_k(s) <= 0, if any.
  std::optional<int> failing_k;
};

SiegelReport siegel_stability(const SyntheticZeroSet& zeros, const std::vector<double>& s_values,
                              int k_start, int k_span);

struct OfflineReport {
  complex rho0;
  complex rho1;
  double delta = 0.0;
  double s0 = 0.0;
  double s1 = 0.0;
  double theta = 0.0;
  long long a = 0;
  long long b = 0;
  double phi = 0.0;
  double s_prime = 0.0;
  double s_dblprime = 0.0;
  double eta = 0.0;
  double c_ab = 0.0;
  long long N = 0;
  int window = 0;
  bool diophantine_ok = false;
  // Smallest |4k(a + b sqrt 2) - r| - C_ab / k over the window.
  double diophantine_margin = 0.0;
  CompareReport comparison;
  bool certificate = false;
};

OfflineReport construct_offline_pair(complex rho0, complex rho1, double delta, int window = 1000);

}  // namespace lmono
