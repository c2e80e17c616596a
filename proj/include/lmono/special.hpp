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

#include <complex>

namespace lmono {

using complex = std::complex<double>;

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kPi = 3.14159265358979323846;

struct EulerMaclaurinParams {
  int cutoff = 10;           // N, initial terms summed directly
  int bernoulli_terms = 20;  // J, cap on correction terms
  double target_epsilon = 1e-15;
};

struct HurwitzValue {
  complex value;
  double error_bound = 0.0;
  int cutoff = 0;
  int bernoulli_terms = 0;
};

// B_{2j} / (2j)! for 1 <= j <= 30.
double bernoulli_over_factorial(int j);

/// Hurwitz zeta zeta(s, a) = sum_{n>=0} (n + a)^{-s} for a > 0,
/// continued to s != 1 by Euler-Maclaurin summation. The cutoff is doubled
/// until the first omitted Bernoulli term (Backlund factor included) drops
/// below target_epsilon plus a rounding allowance.
HurwitzValue hurwitz_zeta(complex s, double a, EulerMaclaurinParams params = {});

struct RealSum {
  double value = 0.0;
  double error_bound = 0.0;
};

/// sum_{n>=0} (c / (n + x))^k for integer k >= 2, x > 0, c > 0. Terms are
/// formed as exp(k log(.)) so the sum stays finite where c^k or x^-k would
/// overflow; 2^-k zeta(k, x) is the case c = 1/2.
RealSum scaled_power_sum(int k, double x, double c);

// Principal branch of log Gamma(z) for Re z > 0.
complex log_gamma(complex z);

double digamma(double x);
complex digamma(complex z);

// (1/2) Gamma'/Gamma((s + b)/2) for s > 0, b in {0, 1}.
double digamma_half(double s, int b);

}  // namespace lmono
