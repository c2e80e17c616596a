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

#include "lmono/lfunction.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "lmono/error.hpp"

namespace lmono {

namespace {

constexpr double kResidueFail = 1e-6;

}  // namespace

LFunction::LFunction(RealCharacter chi) : chi_(std::move(chi)) {
  // Root number of a real primitive character is +1, so the rotation
  // constant is 0 mod pi; it is still fitted from data rather than assumed.
  constexpr std::array<double, 5> samples = {1.3, 2.7, 4.1, 5.9, 7.3};
  complex acc = 0.0;
  for (double t : samples) {
    const complex v = rotated(t);
    acc += v * v;
  }
  double alpha = 0.5 * std::arg(acc);
  if (alpha <= -kPi / 2) alpha += kPi;
  if (alpha > kPi / 2) alpha -= kPi;
  phase_ = alpha;
}

LPoint LFunction::evaluate(complex s, double eps) const {
  if (std::abs(s.imag()) > kMaxHeight) {
    fail(ErrorCode::domain, "evaluate_L: |Im s| exceeds supported height 1000");
  }
  if (s == complex(1.0, 0.0)) fail(ErrorCode::pole, "evaluate_L: s = 1");
  const long long q = chi_.modulus();
  const double qd = static_cast<double>(q);
  EulerMaclaurinParams params;
  params.target_epsilon = eps;
  complex sum = 0.0;
  double err = 0.0;
  for (long long a = 1; a <= q; ++a) {
    const int c = chi_(a);
    if (c == 0) continue;
    const HurwitzValue h = hurwitz_zeta(s, static_cast<double>(a) / qd, params);
    sum += static_cast<double>(c) * h.value;
    err += h.error_bound;
  }
  const complex scale = std::exp(-s * std::log(qd));
  return {s, scale * sum, std::abs(scale) * err};
}

complex LFunction::completed(complex s) const {
  const double qd = static_cast<double>(chi_.modulus());
  const complex half = 0.5 * (s + static_cast<double>(parity()));
  const complex log_factor = half * std::log(qd / kPi) + log_gamma(half);
  return std::exp(log_factor) * evaluate(s).value;
}

double critical_theta(long long modulus, int parity, double t) {
  const complex z(0.5 * (0.5 + parity), 0.5 * t);
  return log_gamma(z).imag() + 0.5 * t * std::log(static_cast<double>(modulus) / kPi);
}

double critical_theta_prime(long long modulus, int parity, double t) {
  const complex z(0.5 * (0.5 + parity), 0.5 * t);
  return 0.5 * digamma(z).real() + 0.5 * std::log(static_cast<double>(modulus) / kPi);
}

complex LFunction::rotated(double t) const {
  const complex l = evaluate(complex(0.5, t)).value;
  return std::polar(1.0, theta(t) - phase_) * l;
}

double LFunction::z_function(double t) const {
  if (std::abs(t) > kMaxHeight) fail(ErrorCode::domain, "z_function: |t| exceeds 1000");
  const complex v = rotated(t);
  const double scale = std::max(1.0, std::abs(v));
  const double residue = std::abs(v.imag()) / scale;
  if (residue > kResidueFail) {
    std::ostringstream msg;
    msg << "z_function: imaginary residue " << residue << " at t = " << t
        << " (root-number convention broken for d = " << chi_.discriminant() << ")";
    fail(ErrorCode::phase, msg.str());
  }
  return v.real();
}

}  // namespace lmono
