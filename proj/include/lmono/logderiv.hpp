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
#include <vector>

#include "lmono/characters.hpp"
#include "lmono/zeros.hpp"

namespace lmono {

// Orders above this use the sign/log-magnitude form; (k-1)! overflows a double.
inline constexpr int kRawOrderLimit = 170;

enum class Method { series, zerosum };

const char* method_name(Method method);

struct DerivativeValue {
  int k = 0;
  double s = 0.0;
  double value = 0.0;
  double error_bound = 0.0;
  Method method = Method::series;
  // When log_form is set, value is 0 and F^(k) = sign * exp(log_magnitude)
  // with relative error at most error_bound.
  bool log_form = false;
  int sign = 0;
  double log_magnitude = 0.0;
};

// Zeros of L(s, chi) as seen by the zero-sum formulas: upper-half nontrivial
// zeros, real zeros in (0, 1), optionally the trivial zeros of a character
// and optionally a counting model for ordinates above the covered height.
class ZeroSource {
 public:
  // Critical-line zeros of a verified list, with trivial zeros and tail.
  explicit ZeroSource(const ZeroList& zeros);
  // Exactly the given zeros and their conjugates; no trivial zeros, no tail.
  explicit ZeroSource(const SyntheticZeroSet& zeros);

  const std::vector<complex>& upper() const { return upper_; }
  const std::vector<double>& real_zeros() const { return real_; }
  bool has_trivial() const { return trivial_; }
  int parity() const { return parity_; }
  // Ordinates above this are not listed; infinity for synthetic sets.
  double height() const { return height_; }
  // Lower bound for |s - rho| over zeros not listed, real s.
  double unlisted_distance(double s) const;
  const ZeroCounting* counting() const { return counting_ ? &*counting_ : nullptr; }
  const ZeroList* list() const { return list_ ? &*list_ : nullptr; }

 private:
  std::vector<complex> upper_;
  std::vector<double> real_;
  bool trivial_ = false;
  int parity_ = 0;
  double height_ = 0.0;
  std::optional<ZeroCounting> counting_;
  std::optional<ZeroList> list_;
};

// (-1)^k F^(k)(s) from the von Mangoldt series; k = 0 gives log L(s).
DerivativeValue f_deriv_series(const RealCharacter& chi, double s, int k, double eps = 1e-10);

DerivativeValue f_prime_formula(const RealCharacter& chi, double s, const ZeroList& zeros);

// k >= 2 from the sum over zeros; k = 1 is delegated to f_prime_formula
// when the source carries a zero list.
DerivativeValue f_deriv_zerosum(const ZeroSource& source, double s, int k, bool force_raw = false);

struct EtaReport {
  complex rho0;
  complex rho_tilde;
  double eta = 0.0;
  double r = 0.0;
};

EtaReport eta_at(const ZeroSource& source, double s);

struct NormalizedValue {
  int k = 0;
  double s = 0.0;
  double g = 0.0;
  double cos_term = 0.0;
  // Majorant of |f|, so |g - cos_term| <= f_bound.
  double f_bound = 0.0;
  // Numerical uncertainty of g itself.
  double g_error = 0.0;
  double r_s = 0.0;
  double theta_s = 0.0;
  complex rho0;
};

// g = 2 cos(k theta_s) + f(s), where F^(k)(s) = (-1)^(k-1) (k-1)! r_s^-k g.
NormalizedValue g_normalized(const ZeroSource& source, double s, int k);

}  // namespace lmono
