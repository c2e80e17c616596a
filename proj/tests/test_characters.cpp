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

#include <lmono/characters.hpp>
#include <lmono/error.hpp>

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>

namespace {

// Oracle: trial-division squarefreeness and the textbook congruence conditions.
bool squarefree(long long n) {
  n = std::llabs(n);
  for (long long p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) return false;
  }
  return true;
}

bool fundamental_oracle(long long d) {
  if (d == 0 || d == 1) return false;
  const long long r = ((d % 4) + 4) % 4;
  if (r == 1) return squarefree(d);
  if (r != 0) return false;
  const long long m = d / 4;
  const long long rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && squarefree(m);
}

long long mod_pow(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = static_cast<long long>((static_cast<__int128>(r) * b) % m);
    b = static_cast<long long>((static_cast<__int128>(b) * b) % m);
    e >>= 1;
  }
  return r;
}

// Oracle: Kronecker symbol built from Euler's criterion on each prime factor.
int kronecker_oracle(long long d, unsigned long long n_in) {
  long long n = static_cast<long long>(n_in);
  if (n == 0) return std::llabs(d) == 1 ? 1 : 0;
  int result = 1;
  for (long long p = 2; n > 1; ++p) {
    if (p * p > n) p = n;
    while (n % p == 0) {
      n /= p;
      int symbol;
      if (p == 2) {
        const long long r = ((d % 8) + 8) % 8;
        symbol = (d % 2 == 0) ? 0 : (r == 1 || r == 7 ? 1 : -1);
      } else {
        const long long dm = ((d % p) + p) % p;
        if (dm == 0) {
          symbol = 0;
        } else {
          symbol = mod_pow(dm, (p - 1) / 2, p) == 1 ? 1 : -1;
        }
      }
      result *= symbol;
    }
  }
  return result;
}

}  // namespace

TEST_CASE("fundamental discriminants match the congruence definition") {
  for (long long d = -400; d <= 400; ++d) {
    CHECK_MESSAGE(lmono::is_fundamental_discriminant(d) == fundamental_oracle(d), "d = " << d);
  }
  CHECK(lmono::is_fundamental_discriminant(-4));
  CHECK(lmono::is_fundamental_discriminant(-3));
  CHECK(lmono::is_fundamental_discriminant(12));  // 12 = 4 * 3, 3 = 3 mod 4 squarefree
  CHECK_FALSE(lmono::is_fundamental_discriminant(7));
  CHECK_FALSE(lmono::is_fundamental_discriminant(1));
  CHECK_FALSE(lmono::is_fundamental_discriminant(-16));
}

TEST_CASE("kronecker symbol agrees with the Euler criterion oracle") {
  for (long long d : {-4LL, -3LL, -7LL, -8LL, 5LL, 8LL, 12LL, -20LL, 13LL, -163LL, 1001LL}) {
    for (unsigned long long n = 0; n < 600; ++n) {
      CHECK_MESSAGE(lmono::kronecker_symbol(d, n) == kronecker_oracle(d, n), "d = " << d << " n = " << n);
    }
  }
}

TEST_CASE("character table for d = -4 and d = -3") {
  const lmono::RealCharacter chi4(-4);
  CHECK(chi4.modulus() == 4);
  CHECK(chi4.parity() == 1);
  CHECK(chi4(1) == 1);
  CHECK(chi4(2) == 0);
  CHECK(chi4(3) == -1);
  CHECK(chi4(-1) == -1);
  const lmono::RealCharacter chi3(-3);
  CHECK(chi3.parity() == 1);
  CHECK(chi3(2) == -1);
  const lmono::RealCharacter chi5(5);
  CHECK(chi5.parity() == 0);
  CHECK(chi5(-1) == 1);
}

TEST_CASE("non-fundamental input is rejected") {
  CHECK_THROWS_AS(lmono::RealCharacter(7), lmono::Error);
  try {
    lmono::RealCharacter bad(-16);
  } catch (const lmono::Error& e) {
    CHECK(e.code() == lmono::ErrorCode::domain);
  }
}

TEST_CASE("von Mangoldt values") {
  CHECK(lmono::von_mangoldt(1) == 0.0);
  CHECK(lmono::von_mangoldt(6) == 0.0);
  CHECK(lmono::von_mangoldt(8) == doctest::Approx(std::log(2.0)));
  CHECK(lmono::von_mangoldt(49) == doctest::Approx(std::log(7.0)));
  CHECK(lmono::von_mangoldt(97) == doctest::Approx(std::log(97.0)));
  const auto table = lmono::von_mangoldt_table(2000);
  // Chebyshev psi(n) = log lcm(1..n); compare the sum with log of an lcm built by gcd.
  double psi = 0.0;
  double log_lcm = 0.0;
  unsigned long long lcm = 1;
  for (unsigned long long n = 1; n <= 40; ++n) {
    psi += table[n];
    lcm = std::lcm(lcm, n);
  }
  log_lcm = std::log(static_cast<double>(lcm));
  CHECK(psi == doctest::Approx(log_lcm).epsilon(1e-12));
  for (unsigned long long n = 1; n <= 2000; ++n) CHECK(table[n] == lmono::von_mangoldt(n));
}

TEST_CASE("multiplicativity and periodicity on random triples") {
  const long long discs[] = {-4, -3, -7, -8, 5, 8, 12, -23, 40, -84, 1365};
  std::mt19937_64 rng(20261017);
  std::uniform_int_distribution<int> pick(0, std::size(discs) - 1);
  std::uniform_int_distribution<long long> value(-1000000, 1000000);
  long long bad = 0;
  for (int i = 0; i < 200000; ++i) {
    const lmono::RealCharacter chi(discs[pick(rng)]);
    const long long m = value(rng);
    const long long n = value(rng);
    if (chi(m * n) != chi(m) * chi(n)) ++bad;
    if (chi(m + chi.modulus()) != chi(m)) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("period sums vanish and parity follows the sign of d") {
  for (long long d = -300; d <= 300; ++d) {
    if (!lmono::is_fundamental_discriminant(d)) continue;
    const lmono::RealCharacter chi(d);
    long long sum = 0;
    for (long long n = 1; n <= chi.modulus(); ++n) sum += chi(n);
    CHECK_MESSAGE(sum == 0, "d = " << d);
    CHECK(chi.parity() == (d < 0 ? 1 : 0));
    CHECK(chi.parity() == (chi(chi.modulus() - 1) == -1 ? 1 : 0));
    for (long long n = 1; n <= 60; ++n) {
      CHECK((chi(n) == 0) == (std::gcd(n, chi.modulus()) > 1));
    }
  }
}
