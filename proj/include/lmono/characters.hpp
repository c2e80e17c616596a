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

#include <cstdint>
#include <span>
#include <vector>

namespace lmono {

bool is_fundamental_discriminant(long long d);

// Kronecker symbol (d/n) for n >= 0.
int kronecker_symbol(long long d, unsigned long long n);

// log p if n = p^m, else 0.
double von_mangoldt(unsigned long long n);

// Lambda(n) for 0 <= n <= n_max via a linear sieve; entry 0 is 0.
std::vector<double> von_mangoldt_table(std::size_t n_max);

/// Real primitive character n -> (d/n) attached to a fundamental
/// discriminant d. The full period is tabulated on construction.
class RealCharacter {
 public:
  explicit RealCharacter(long long discriminant);

  long long discriminant() const { return d_; }
  long long modulus() const { return q_; }
  // 1 iff chi(-1) = -1.
  int parity() const { return b_; }

  int operator()(long long n) const {
    long long r = n % q_;
    if (r < 0) r += q_;
    return table_[static_cast<std::size_t>(r)];
  }
  std::span<const std::int8_t> period() const { return table_; }

 private:
  long long d_;
  long long q_;
  int b_;
  std::vector<std::int8_t> table_;
};

}  // namespace lmono
