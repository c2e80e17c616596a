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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <lmono/error.hpp>
#include <lmono/special.hpp>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include <cmath>
#include <complex>
#include <random>

using lmono::complex;
using lmono::kPi;

namespace {

using lcomplex = std::complex<long double>;

// Oracle: Borwein's accelerated alternating series for the Riemann zeta
// function, valid for complex s away from 1.
complex zeta_borwein(complex s_in) {
  const lcomplex s(s_in.real(), s_in.imag());
  const int n = 120;
  std::vector<long double> d(n + 1);
  long double sum = 0.0L;
  long double term = 1.0L / n;  // n (n+i-1)! 4^i / ((n-i)! (2i)!) built incrementally
  for (int i = 0; i <= n; ++i) {
    if (i == 0) {
      term = 1.0L / n;
    } else {
      term *= static_cast<long double>(n + i - 1) * (n - i + 1) * 4.0L /
              (static_cast<long double>(2 * i - 1) * (2 * i));
    }
    sum += term * n;
    d[i] = sum;
  }
  lcomplex acc = 0.0L;
  for (int k = 0; k < n; ++k) {
    const lcomplex t = (d[k] - d[n]) * std::exp(-s * std::log(static_cast<long double>(k + 1)));
    acc += (k % 2 == 0 ? -1.0L : 1.0L) * t;
  }
  const lcomplex eta = acc / d[n];
  const lcomplex z = eta / (1.0L - std::exp((1.0L - s) * std::log(2.0L)));
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

double rel(complex a, complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("Borwein oracle sanity") {
  CHECK(zeta_borwein(2.0).real() == doctest::Approx(kPi * kPi / 6).epsilon(1e-14));
  CHECK(zeta_borwein({0.5, 14.134725141734693}).real() == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("Hurwitz zeta at a = 1 and a = 1/2 against Riemann zeta") {
  for (double s : {1.5, 2.0, 3.0, 7.5, 30.0}) {
    const double z = boost::math::zeta(s);
    CHECK(lmono::hurwitz_zeta(s, 1.0).value.real() == doctest::Approx(z).epsilon(1e-13));
    CHECK(lmono::hurwitz_zeta(s, 0.5).value.real() == doctest::Approx((std::pow(2.0, s) - 1) * z).epsilon(1e-13));
  }
  CHECK(lmono::hurwitz_zeta(2.0, 0.5).value.real() == doctest::Approx(kPi * kPi / 2).epsilon(1e-14));
}

TEST_CASE("Hurwitz zeta at complex s against the Borwein oracle") {
  for (complex s : {complex(0.5, 6.0), complex(0.5, 30.0), complex(0.75, 9.0), complex(2.0, -3.0), complex(0.5, 48.0)}) {
    const auto h = lmono::hurwitz_zeta(s, 1.0);
    CHECK_MESSAGE(rel(h.value, zeta_borwein(s)) < 1e-10, "s = " << s);
    CHECK(h.error_bound < 1e-12);
    const complex half = (std::pow(complex(2.0), s) - 1.0) * zeta_borwein(s);
    CHECK_MESSAGE(rel(lmono::hurwitz_zeta(s, 0.5).value, half) < 1e-10, "s = " << s);
  }
}

TEST_CASE("Catalan constant from quarter-shift Hurwitz values") {
  const double beta2 = (lmono::hurwitz_zeta(2.0, 0.25).value.real() - lmono::hurwitz_zeta(2.0, 0.75).value.real()) / 16.0;
  CHECK(beta2 == doctest::Approx(0.915965594177219015).epsilon(1e-14));
}

TEST_CASE("Hurwitz recurrence zeta(s,a) - zeta(s,a+1) = a^-s") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(0.2, 4.0);
  std::uniform_real_distribution<double> im(-200.0, 200.0);
  std::uniform_real_distribution<double> shift(0.05, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const complex s(re(rng), im(rng));
    const double a = shift(rng);
    if (std::abs(s - 1.0) < 0.1) continue;
    const complex lhs = lmono::hurwitz_zeta(s, a).value - lmono::hurwitz_zeta(s, a + 1.0).value;
    const complex rhs = std::exp(-s * std::log(a));
    worst = std::max(worst, rel(lhs, rhs));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("Hurwitz pole is reported") {
  CHECK_THROWS_AS(lmono::hurwitz_zeta(1.0, 0.5), lmono::Error);
}

TEST_CASE("log gamma against real lgamma and closed forms") {
  for (double x : {0.1, 0.5, 1.0, 2.5, 10.0, 123.4}) {
    CHECK(lmono::log_gamma(x).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
  }
  CHECK(lmono::log_gamma(0.5).real() == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-14));
  CHECK(std::abs(lmono::log_gamma(1.0)) < 1e-15);
  CHECK(lmono::log_gamma(5.0).real() == doctest::Approx(std::log(24.0)).epsilon(1e-15));
  CHECK_THROWS_AS(lmono::log_gamma({-0.5, 1.0}), lmono::Error);
  // |Gamma(1/2 + it)|^2 = pi / cosh(pi t)
  for (double t : {0.3, 2.0, 17.0, 80.0}) {
    const double lhs = 2.0 * lmono::log_gamma({0.5, t}).real();
    CHECK(lhs == doctest::Approx(std::log(kPi) - (kPi * t + std::log1p(std::exp(-2 * kPi * t)) - std::log(2.0))).epsilon(1e-12));
  }
}

TEST_CASE("gamma duplication and reflection identities") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(0.1, 20.0);
  std::uniform_real_distribution<double> im(-500.0, 500.0);
  double worst = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const complex z(re(rng), im(rng));
    const complex lhs = lmono::log_gamma(z) + lmono::log_gamma(z + 0.5);
    const complex rhs = (1.0 - 2.0 * z) * std::log(2.0) + 0.5 * std::log(kPi) + lmono::log_gamma(2.0 * z);
    complex diff = lhs - rhs;
    // equality holds modulo 2 pi i
    diff.imag(std::remainder(diff.imag(), 2 * kPi));
    worst = std::max(worst, std::abs(diff) / std::max(1.0, std::abs(rhs)));
  }
  CHECK(worst < 1e-10);
  for (double y : {0.2, 0.35, 0.7}) {
    const complex z(y, 0.0);
    const double lhs = lmono::log_gamma(z).real() + lmono::log_gamma(1.0 - z).real();
    CHECK(lhs == doctest::Approx(std::log(kPi / std::sin(kPi * y))).epsilon(1e-13));
  }
}

TEST_CASE("digamma against boost") {
  for (double x : {0.05, 0.5, 1.0, 3.7, 50.0, 1e4}) {
    CHECK(lmono::digamma(x) == doctest::Approx(boost::math::digamma(x)).epsilon(1e-13));
  }
  CHECK(lmono::digamma(1.0) == doctest::Approx(-lmono::kEulerGamma).epsilon(1e-15));
  CHECK(lmono::digamma_half(1.0, 0) == doctest::Approx(0.5 * (-lmono::kEulerGamma - 2 * std::log(2.0))).epsilon(1e-14));
  CHECK(lmono::digamma_half(1.0, 1) == doctest::Approx(-0.5 * lmono::kEulerGamma).epsilon(1e-14));
  CHECK(lmono::digamma_half(2.0, 0) == doctest::Approx(-0.5 * lmono::kEulerGamma).epsilon(1e-14));
  // series forms: b = 0 and b = 1, summed to 1e6 terms with the O(1/N) tail added back
  for (double s : {0.7, 2.0, 5.5}) {
    long double even = -0.5L * lmono::kEulerGamma - 1.0L / s;
    long double odd = -std::log(2.0L) - 0.5L * lmono::kEulerGamma;
    const long n_max = 1000000;
    for (long n = n_max; n >= 1; --n) even -= 1.0L / (s + 2.0L * n) - 1.0L / (2.0L * n);
    for (long n = n_max; n >= 0; --n) odd -= 1.0L / (s + 2.0L * n + 1.0L) - 1.0L / (2.0L * n + 1.0L);
    // omitted terms behave like -s/(4n^2) in both series
    even += s / (4.0L * n_max);
    odd += s / (4.0L * n_max);
    CHECK(lmono::digamma_half(s, 0) == doctest::Approx(static_cast<double>(even)).epsilon(1e-9));
    CHECK(lmono::digamma_half(s, 1) == doctest::Approx(static_cast<double>(odd)).epsilon(1e-9));
  }
  // complex digamma: psi(1/2 + it) has real part matching the derivative of log|Gamma|
  const complex z(0.5, 9.0);
  const double h = 1e-5;
  const double fd = (lmono::log_gamma(z + h).real() - lmono::log_gamma(z - h).real()) / (2 * h);
  CHECK(lmono::digamma(z).real() == doctest::Approx(fd).epsilon(1e-8));
  CHECK_THROWS_AS(lmono::digamma_half(1.0, 2), lmono::Error);
}

TEST_CASE("scaled power sums reduce to Hurwitz zeta") {
  for (int k : {2, 5, 40}) {
    for (double x : {0.3, 1.0, 7.0}) {
      const auto sum = lmono::scaled_power_sum(k, x, 0.5);
      const double oracle = std::pow(0.5, k) * boost::math::zeta(static_cast<double>(k)) ;
      if (x == 1.0) CHECK(sum.value == doctest::Approx(oracle).epsilon(1e-13));
      double direct = 0.0;
      for (int n = 0; n < 200000; ++n) direct += std::pow(0.5 / (n + x), k);
      CHECK(sum.value == doctest::Approx(direct).epsilon(k == 2 ? 1e-5 : 1e-12));
    }
  }
  // huge order stays finite
  const auto big = lmono::scaled_power_sum(5000, 0.9, 1.0);
  CHECK(std::isfinite(big.value));
  CHECK(big.value == doctest::Approx(std::exp(5000 * std::log(1 / 0.9))).epsilon(1e-10));
}

TEST_CASE("Bernoulli ratios") {
  CHECK(lmono::bernoulli_over_factorial(1) == doctest::Approx(1.0 / 12));
  CHECK(lmono::bernoulli_over_factorial(2) == doctest::Approx(-1.0 / 720));
  CHECK(lmono::bernoulli_over_factorial(3) == doctest::Approx(1.0 / 30240));
}
