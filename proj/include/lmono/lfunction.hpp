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

#include "lmono/characters.hpp"
#include "lmono/special.hpp"

namespace lmono {

inline constexpr double kMaxHeight = 1000.0;

// theta(t) = Im log Gamma((1/2 + b + it)/2) + (t/2) log(q/pi), and its
// derivative in t.
double critical_theta(long long modulus, int parity, double t);
double critical_theta_prime(long long modulus, int parity, double t);

struct LPoint {
  complex s;
  complex value;
  double error_bound = 0.0;
};

/// L(s, chi) for a real primitive character, evaluated as
/// q^-s sum_a chi(a) zeta(s, a/q). The constructor calibrates the rotation
/// that makes the critical-line function real.
class LFunction {
 public:
  explicit LFunction(RealCharacter chi);
  explicit LFunction(long long discriminant) : LFunction(RealCharacter(discriminant)) {}

  const RealCharacter& character() const { return chi_; }
  long long modulus() const { return chi_.modulus(); }
  int parity() const { return chi_.parity(); }

  LPoint evaluate(complex s, double eps = 1e-15) const;

  // (q/pi)^((s+b)/2) Gamma((s+b)/2) L(s, chi); needs Re(s) + b > 0.
  complex completed(complex s) const;

  double theta(double t) const { return critical_theta(modulus(), parity(), t); }
  double theta_prime(double t) const { return critical_theta_prime(modulus(), parity(), t); }

  // Real-valued rotation of L(1/2 + it); |Z(t)| = |L(1/2 + it)|.
  double z_function(double t) const;
  double phase() const { return phase_; }

 private:
  complex rotated(double t) const;

  RealCharacter chi_;
  double phase_ = 0.0;
};

}  // namespace lmono
