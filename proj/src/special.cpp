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

#include "lmono/special.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lmono/error.hpp"
#include "lmono/kahan.hpp"

namespace lmono {

namespace {

constexpr int kMaxBernoulli = 30;
constexpr int kMaxCutoff = 1 << 20;
constexpr double kRoundoff = 4.0 * 2.220446049250313e-16;

// zeta(2j) by direct summation with an Euler-Maclaurin tail at N = 1000.
double zeta_even(int j) {
  const double s = 2.0 * j;
  const int n = 1000;
  KahanSum sum;
  for (int m = n - 1; m >= 1; --m) sum += std::pow(static_cast<double>(m), -s);
  const double nn = n;
  sum += std::pow(nn, 1.0 - s) / (s - 1.0);
  sum += 0.5 * std::pow(nn, -s);
  sum += s / 12.0 * std::pow(nn, -s - 1.0);
  return sum.value();
}

const std::array<double, kMaxBernoulli + 1>& bernoulli_table() {
  static const std::array<double, kMaxBernoulli + 1> table = [] {
    std::array<double, kMaxBernoulli + 1> t{};
    for (int j = 1; j <= kMaxBernoulli; ++j) {
      const double sign = (j % 2 == 1) ? 1.0 : -1.0;
      t[j] = sign * 2.0 * zeta_even(j) / std::pow(2.0 * kPi, 2.0 * j);
    }
    return t;
  }();
  return table;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double bernoulli_over_factorial(int j) {
  if (j < 1 || j > kMaxBernoulli) {
    fail(ErrorCode::domain, "Bernoulli index out of range: " + std::to_string(j));
  }
  return bernoulli_table()[j];
}

HurwitzValue hurwitz_zeta(complex s, double a, EulerMaclaurinParams params) {
  if (!(a > 0.0) || !std::isfinite(a)) fail(ErrorCode::domain, "hurwitz_zeta: a must be positive");
  if (s == complex(1.0, 0.0)) fail(ErrorCode::pole, "hurwitz_zeta: pole at s = 1");
  if (params.cutoff < 10) params.cutoff = 10;
  const int max_terms = std::min(std::max(params.bernoulli_terms, 1), 20);
  const double sigma = s.real();

  int cutoff = std::max(params.cutoff, static_cast<int>(std::ceil(std::abs(s))));
  for (; cutoff <= kMaxCutoff; cutoff *= 2) {
    ComplexKahanSum sum;
    for (int n = cutoff - 1; n >= 0; --n) sum += std::exp(-s * std::log(n + a));
    const double x = cutoff + a;
    const complex xs = std::exp(-s * std::log(x));
    sum += x * xs / (s - 1.0);
    sum += 0.5 * xs;

    complex poch = s;
    complex xpow = xs / x;
    for (int j = 1; j <= max_terms; ++j) {
      sum += bernoulli_over_factorial(j) * poch * xpow;
      poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
      xpow /= x * x;
      const complex next = bernoulli_over_factorial(j + 1) * poch * xpow;
      const double backlund = std::abs(s + (2.0 * j + 1.0)) / (sigma + 2.0 * j + 1.0);
      const double truncation = std::abs(next) * backlund;
      const complex value = sum.value();
      const double tolerance = params.target_epsilon * std::max(1.0, std::abs(value));
      if (sigma + 2.0 * j + 1.0 > 0.0 && truncation < tolerance) {
        return {value, truncation + kRoundoff * sum.magnitude(), cutoff, j};
      }
    }
  }
  fail(ErrorCode::precision, "hurwitz_zeta: target epsilon unreachable within cutoff cap");
}

RealSum scaled_power_sum(int k, double x, double c) {
  if (k < 2 || !(x > 0.0) || !(c > 0.0)) {
    fail(ErrorCode::domain, "scaled_power_sum: need k >= 2, x > 0, c > 0");
  }
  const double lc = std::log(c);
  const double kd = k;
  const int direct = k + 20;
  KahanSum sum;
  for (int n = 0; n < direct; ++n) {
    const double xn = n + x;
    const double term = std::exp(kd * (lc - std::log(xn)));
    sum += term;
    const double remainder = term * xn / (kd - 1.0);
    if (remainder < 1e-30 || remainder < 1e-17 * sum.value()) {
      return {sum.value(), remainder + kRoundoff * sum.magnitude};
    }
  }
  // Euler-Maclaurin tail from X = direct + x.
  const double big_x = direct + x;
  const double base = std::exp(kd * (lc - std::log(big_x)));
  KahanSum tail;
  tail += big_x / (kd - 1.0);
  tail += 0.5;
  double poch = kd;
  double xpow = 1.0 / big_x;
  double truncation = 0.0;
  for (int j = 1; j <= 20; ++j) {
    tail += bernoulli_over_factorial(j) * poch * xpow;
    poch *= (kd + 2.0 * j - 1.0) * (kd + 2.0 * j);
    xpow /= big_x * big_x;
    truncation = std::abs(bernoulli_over_factorial(j + 1) * poch * xpow);
    if (truncation < 1e-17 * tail.value()) break;
  }
  sum += base * tail.value();
  return {sum.value(), base * truncation + kRoundoff * sum.magnitude};
}

complex log_gamma(complex z) {
  if (!(z.real() > 0.0)) fail(ErrorCode::domain, "log_gamma: Re z must be positive");
  complex shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  const complex inv = 1.0 / z;
  const complex inv2 = inv * inv;
  complex series = 0.0;
  complex power = inv;
  for (int j = 1; j <= 10; ++j) {
    series += bernoulli_over_factorial(j) * factorial(2 * j - 2) * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series - shift;
}

complex digamma(complex z) {
  if (!(z.real() > 0.0)) fail(ErrorCode::domain, "digamma: Re z must be positive");
  complex shift = 0.0;
  while (std::abs(z) < 12.0) {
    shift += 1.0 / z;
    z += 1.0;
  }
  const complex inv2 = 1.0 / (z * z);
  complex series = 0.0;
  complex power = inv2;
  for (int j = 1; j <= 10; ++j) {
    series += bernoulli_over_factorial(j) * factorial(2 * j - 1) * power;
    power *= inv2;
  }
  return std::log(z) - 0.5 / z - series - shift;
}

double digamma(double x) {
  if (!(x > 0.0)) fail(ErrorCode::domain, "digamma: argument must be positive");
  return digamma(complex(x, 0.0)).real();
}

double digamma_half(double s, int b) {
  if (b != 0 && b != 1) fail(ErrorCode::domain, "digamma_half: parity must be 0 or 1");
  if (!(s > 0.0)) fail(ErrorCode::domain, "digamma_half: s must be positive");
  return 0.5 * digamma(0.5 * (s + b));
}

}  // namespace lmono
