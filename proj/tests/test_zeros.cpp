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
#include <lmono/lfunction.hpp>
#include <lmono/special.hpp>
#include <lmono/zeros.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>
#include <unistd.h>

using lmono::complex;
using lmono::kPi;

namespace fs = std::filesystem;

namespace {

lmono::ZeroList scanned(long long d, double height, double step = 0.0) {
  const lmono::LFunction l(d);
  if (step == 0.0) step = 0.5 * lmono::max_scan_step(l.modulus(), height);
  lmono::ZeroList zl = lmono::scan_zeros(l, height, step);
  lmono::verify_zero_list(l, zl);
  return zl;
}

// Oracle: sign changes of Z on a grid much finer than any zero gap seen here.
int brute_sign_changes(const lmono::LFunction& l, double lo, double hi, double h) {
  int changes = 0;
  double prev = l.z_function(lo);
  for (double t = lo + h; t <= hi; t += h) {
    const double z = l.z_function(t);
    if ((z > 0) != (prev > 0)) ++changes;
    prev = z;
  }
  return changes;
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("lmono_zeros_" + std::to_string(::getpid()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST_CASE("scanned zeros of chi_-4 are sign changes of Z and nothing is skipped") {
  const lmono::LFunction l(-4);
  const auto zl = scanned(-4, 50.0);
  REQUIRE(zl.complete);
  CHECK(zl.ordinates.size() == 20);
  CHECK(brute_sign_changes(l, 1e-3, 50.0, 2e-3) == static_cast<int>(zl.ordinates.size()));
  for (double g : zl.ordinates) {
    CHECK(l.z_function(g - 1e-8) * l.z_function(g + 1e-8) < 0.0);
    CHECK(std::abs(l.evaluate({0.5, g}).value) < 1e-7);
  }
  // literature value of the first ordinate
  CHECK(zl.ordinates.front() == doctest::Approx(6.020948904697597).epsilon(1e-9));
}

TEST_CASE("short lists") {
  const auto z4 = scanned(-4, 10.0);
  REQUIRE(z4.ordinates.size() == 1);
  CHECK(z4.ordinates[0] == doctest::Approx(6.0209489).epsilon(1e-8));
  const auto z3 = scanned(-3, 10.0);
  REQUIRE(z3.ordinates.size() == 1);
  CHECK(z3.ordinates[0] == doctest::Approx(8.0397372).epsilon(1e-8));
  const auto none = scanned(-4, 0.5);
  CHECK(none.ordinates.empty());
  CHECK(none.complete);
  const auto report = lmono::count_check(lmono::LFunction(-4), none);
  CHECK(report.found == 0);
  CHECK(std::abs(report.expected) < 0.25);
  CHECK(lmono::lowest_zero(lmono::SyntheticZeroSet{{complex(0.5, 2.0), complex(0.5, 5.0)}}) == 2.0);
}

TEST_CASE("stored ordinates bracket a sign change at twice their error") {
  const lmono::LFunction l(-3);
  const auto zl = scanned(-3, 100.0);
  for (double g : zl.ordinates) {
    const double eps = 2.0 * zl.per_zero_error;
    CHECK(l.z_function(g - eps) * l.z_function(g + eps) < 0.0);
  }
}

TEST_CASE("ingested truncated list passes the count check") {
  TempDir dir;
  const auto full = scanned(-4, 50.0);
  lmono::ZeroList truncated = full;
  truncated.ordinates.erase(std::remove_if(truncated.ordinates.begin(), truncated.ordinates.end(),
                                           [](double g) { return g > 30.0; }),
                            truncated.ordinates.end());
  truncated.covered_height = 30.0;
  const fs::path file = dir.path / "external.csv";
  lmono::store_zeros(truncated, file);
  auto ingested = lmono::ingest_zeros(file);
  CHECK(ingested.origin == lmono::ZeroOrigin::ingested);
  CHECK_FALSE(ingested.complete);
  const auto report = lmono::verify_zero_list(lmono::LFunction(-4), ingested);
  CHECK(report.pass);
  CHECK(ingested.complete);
  const auto own = scanned(-4, 30.0);
  REQUIRE(own.ordinates.size() == ingested.ordinates.size());
  for (std::size_t i = 0; i < own.ordinates.size(); ++i) CHECK(std::abs(own.ordinates[i] - ingested.ordinates[i]) < 1e-6);
}

TEST_CASE("lowest ordinate is stable across step sizes") {
  const double coarse = lmono::lowest_zero(scanned(-4, 50.0, 1e-2));
  const double fine = lmono::lowest_zero(scanned(-4, 50.0, 1e-3));
  CHECK(std::abs(coarse - fine) < 1e-6);
}

TEST_CASE("count check agrees with a brute-force count for several characters") {
  for (long long d : {-3LL, 5LL, 8LL, -7LL, 12LL}) {
    const lmono::LFunction l(d);
    auto zl = scanned(d, 60.0);
    CHECK_MESSAGE(zl.complete, "d = " << d);
    const auto report = lmono::count_check(l, zl);
    CHECK(report.pass);
    CHECK(report.found == static_cast<long long>(zl.ordinates.size()));
    CHECK(std::abs(report.expected - report.found) < 0.25);
    CHECK(brute_sign_changes(l, 1e-3, 60.0, 2e-3) == static_cast<int>(zl.ordinates.size()));
  }
}

TEST_CASE("an incomplete list fails the count check") {
  const lmono::LFunction l(-4);
  auto zl = scanned(-4, 50.0);
  zl.ordinates.erase(zl.ordinates.begin() + 3);
  zl.complete = false;
  const auto report = lmono::verify_zero_list(l, zl);
  CHECK_FALSE(report.pass);
  CHECK_FALSE(zl.complete);
}

TEST_CASE("scan preconditions") {
  const lmono::LFunction l(-4);
  CHECK_THROWS_AS(lmono::scan_zeros(l, 50.0, 2.0), lmono::Error);
  CHECK_THROWS_AS(lmono::scan_zeros(l, 2000.0, 0.01), lmono::Error);
  CHECK(lmono::max_scan_step(4, 50.0) == doctest::Approx(kPi / std::log(4 * 50.0 / (2 * kPi) + 4)));
}

TEST_CASE("no real zero on (0, 1)") {
  for (long long d : {-4LL, -3LL, 5LL, 8LL}) {
    const auto seg = lmono::check_real_segment(lmono::LFunction(d));
    CHECK_MESSAGE(seg.positive, "d = " << d);
    CHECK(seg.min_value > 0.0);
  }
}

TEST_CASE("B constant of a synthetic pair is -2 Re 1/rho") {
  lmono::SyntheticZeroSet set{{complex(0.5, 2.0)}};
  CHECK(lmono::b_constant(set).value == doctest::Approx(-4.0 / 17.0).epsilon(1e-15));
  CHECK(lmono::lowest_zero(set) == 2.0);
}

TEST_CASE("B constant of chi_-4 against the Gamma(1/4) closed form") {
  // B = -(L'/L(1) + log(q/pi)/2 + psi(1)/2) with
  // L'/L(1, chi_-4) = gamma + 2 log 2 + 3 log pi - 4 log Gamma(1/4).
  const double eg = lmono::kEulerGamma;
  const double ldl = eg + 2 * std::log(2.0) + 3 * std::log(kPi) - 4 * std::log(std::tgamma(0.25));
  const double oracle = -(ldl + 0.5 * std::log(4.0 / kPi) - 0.5 * eg);
  for (double height : {50.0, 100.0, 200.0}) {
    const auto b = lmono::b_constant(scanned(-4, height));
    CHECK(b.value < 0.0);
    CHECK_MESSAGE(std::abs(b.value - oracle) <= b.error_bound + 1e-12, "T = " << height << " B = " << b.value
                                                                         << " oracle = " << oracle
                                                                         << " bound = " << b.error_bound);
  }
  CHECK_THROWS_AS(lmono::b_constant(scanned(-4, 30.0)), lmono::Error);
  const auto b100 = lmono::b_constant(scanned(-4, 100.0));
  const auto b200 = lmono::b_constant(scanned(-4, 200.0));
  CHECK(std::abs(b100.value - b200.value) <= b100.error_bound + b200.error_bound);
}

TEST_CASE("counting tail matches zeros listed further up") {
  const auto low = scanned(-4, 100.0);
  const auto high = scanned(-4, 400.0);
  const lmono::RealCharacter chi(-4);
  const lmono::ZeroCounting tail_low(chi, low);
  const lmono::ZeroCounting tail_high(chi, high);
  CHECK(tail_low.count() == static_cast<long long>(low.ordinates.size()));
  for (int k : {1, 2, 3, 6}) {
    for (double a : {1.0, 1.5, 4.5}) {
      double listed = 0.0;
      for (double g : high.ordinates) {
        if (g > 100.0) listed += 2.0 * std::pow(complex(1.0) / complex(a, -g), k).real();
      }
      const auto upper = tail_high.pair_tail(a, k);
      const auto lower = tail_low.pair_tail(a, k);
      const double truth = listed + upper.value;
      CHECK_MESSAGE(std::abs(lower.value - truth) <= lower.error_bound + upper.error_bound,
                    "k = " << k << " a = " << a << " est = " << lower.value << " truth = " << truth
                           << " bound = " << lower.error_bound);
      if (k >= 2) {
        double magnitude = 0.0;
        for (double g : high.ordinates) {
          if (g > 100.0) magnitude += 2.0 * std::pow(1.0 / (a * a + g * g), k / 2.0);
        }
        CHECK(tail_low.pair_majorant(1.0, a, k) >= magnitude);
      }
    }
  }
}

TEST_CASE("CSV round trip preserves every bit") {
  TempDir dir;
  const auto zl = scanned(-3, 40.0);
  const fs::path file = dir.path / "d-3_T40.csv";
  lmono::store_zeros(zl, file);
  const auto back = lmono::load_zeros(file);
  CHECK(back.discriminant == -3);
  CHECK(back.ordinates == zl.ordinates);
  CHECK(back.per_zero_error == zl.per_zero_error);
  CHECK(back.covered_height == zl.covered_height);
  CHECK(back.origin == lmono::ZeroOrigin::scanned);
  CHECK_FALSE(back.complete);  // completeness is re-established by verification
  const auto ingested = lmono::ingest_zeros(file);
  CHECK(ingested.origin == lmono::ZeroOrigin::ingested);
}

TEST_CASE("malformed CSV reports the line") {
  TempDir dir;
  const fs::path file = dir.path / "bad.csv";
  lmono::store_zeros(scanned(-4, 20.0), file);
  std::vector<std::string> lines;
  {
    std::ifstream in(file);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  REQUIRE(lines.size() >= 4);
  auto rewrite = [&](std::size_t index, const std::string& text) {
    auto copy = lines;
    copy[index] = text;
    std::string joined;
    for (const auto& l : copy) joined += l + "\n";
    write_file(file, joined);
  };
  const std::string target = ":" + std::to_string(lines.size()) + ":";
  rewrite(lines.size() - 1, "-4," + std::to_string(lines.size() - 1) + ",abc,1e-9");
  try {
    lmono::load_zeros(file);
    FAIL("expected a format error");
  } catch (const lmono::Error& e) {
    CHECK(e.code() == lmono::ErrorCode::format);
    CHECK_MESSAGE(std::string(e.what()).find(target) != std::string::npos, e.what());
  }
  rewrite(lines.size() - 1, "-4," + std::to_string(lines.size() - 1) + ",0.5,1e-9");  // not increasing
  CHECK_THROWS_AS(lmono::load_zeros(file), lmono::Error);
  rewrite(0, "garbage");
  CHECK_THROWS_AS(lmono::load_zeros(file), lmono::Error);
  CHECK_THROWS_AS(lmono::load_zeros(dir.path / "missing.csv"), lmono::Error);
}

TEST_CASE("empty list") {
  lmono::ZeroList empty;
  CHECK_THROWS_AS(lmono::lowest_zero(empty), lmono::Error);
}
