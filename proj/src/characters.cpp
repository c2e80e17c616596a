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

#include "lmono/characters.hpp"

#include <cmath>
#include <string>

#include "lmono/error.hpp"

namespace lmono {

namespace {

bool is_squarefree(unsigned long long m) {
  if (m == 0) return false;
  for (unsigned long long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      m /= p;
      if (m % p == 0) return false;
    }
  }
  return true;
}

// Jacobi symbol (a/n) for odd n > 0 and 0 <= a < n.
int jacobi(unsigned long long a, unsigned long long n) {
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const unsigned long long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

bool is_fundamental_discriminant(long long d) {
  if (d == 0 || d == 1) return false;
  const long long r = ((d % 4) + 4) % 4;
  const unsigned long long ad = static_cast<unsigned long long>(d < 0 ? -d : d);
  if (r == 1) return is_squarefree(ad);
  if (r != 0) return false;
  const long long m = d / 4;
  const long long rm = ((m % 4) + 4) % 4;
  if (rm != 2 && rm != 3) return false;
  return is_squarefree(static_cast<unsigned long long>(m < 0 ? -m : m));
}

int kronecker_symbol(long long d, unsigned long long n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  while (n % 2 == 0) {
    if (d % 2 == 0) return 0;
    const long long r = ((d % 8) + 8) % 8;
    if (r == 3 || r == 5) result = -result;
    n /= 2;
  }
  if (n == 1) return result;
  const long long sn = static_cast<long long>(n);
  const unsigned long long a = static_cast<unsigned long long>(((d % sn) + sn) % sn);
  return result * jacobi(a, n);
}

double von_mangoldt(unsigned long long n) {
  if (n < 2) return 0.0;
  for (unsigned long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
    }
  }
  return std::log(static_cast<double>(n));
}

std::vector<double> von_mangoldt_table(std::size_t n_max) {
  std::vector<double> lambda(n_max + 1, 0.0);
  std::vector<std::uint32_t> least(n_max + 1, 0);
  std::vector<std::uint32_t> primes;
  for (std::size_t i = 2; i <= n_max; ++i) {
    if (least[i] == 0) {
      least[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
      lambda[i] = std::log(static_cast<double>(i));
    } else {
      // i = p * j with p = least[i]; i is a prime power iff j is 1 or a power of p
      const std::size_t p = least[i];
      const std::size_t j = i / p;
      if (least[j] == p && lambda[j] != 0.0) lambda[i] = lambda[j];
    }
    for (std::uint32_t p : primes) {
      const std::size_t ip = i * p;
      if (p > least[i] || ip > n_max) break;
      least[ip] = p;
    }
  }
  return lambda;
}

RealCharacter::RealCharacter(long long discriminant) : d_(discriminant) {
  if (!is_fundamental_discriminant(d_)) {
    fail(ErrorCode::domain, std::to_string(d_) + " is not a fundamental discriminant");
  }
  q_ = d_ < 0 ? -d_ : d_;
  table_.resize(static_cast<std::size_t>(q_));
  for (long long n = 0; n < q_; ++n) {
    table_[static_cast<std::size_t>(n)] =
        static_cast<std::int8_t>(kronecker_symbol(d_, static_cast<unsigned long long>(n)));
  }
  b_ = table_[static_cast<std::size_t>(q_ - 1)] == -1 ? 1 : 0;
}

}  // namespace lmono
