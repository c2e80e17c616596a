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

#include "lmono/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "lmono/error.hpp"

namespace lmono {

namespace {

constexpr double kGridStep = 1e-3;
constexpr int kCompareChunk = 2048;
constexpr int kSiegelSearchCap = 100000;
constexpr long long kSearchLimit = 1000000;

// Runs body(k) for k in [lo, hi] over contiguous blocks on all cores.
void parallel_orders(int lo, int hi, const std::function<void(int)>& body) {
  if (hi < lo) return;
  const int n = hi - lo + 1;
  const int workers = std::max(1, std::min<int>(n, static_cast<int>(std::thread::hardware_concurrency())));
  std::vector<std::future<void>> tasks;
  for (int w = 0; w < workers; ++w) {
    const int b0 = lo + static_cast<int>(static_cast<long long>(n) * w / workers);
    const int b1 = lo + static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
    tasks.push_back(std::async(std::launch::async, [b0, b1, &body] {
      for (int k = b0; k < b1; ++k) body(k);
    }));
  }
  for (auto& t : tasks) t.get();
}

bool certified(const NormalizedValue& v, double tolerance) {
  return std::abs(v.g) > v.g_error + tolerance;
}

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

TritEntry trit_at(const ZeroSource& source, double s, int k, double tolerance) {
  const NormalizedValue v = g_normalized(source, s, k);
  TritEntry e{k, Trit::uncertain, v.g, v.f_bound, v.g_error};
  const int parity = (k - 1) % 2 == 0 ? 1 : -1;
  if (certified(v, tolerance)) {
    e.trit = parity * sign_of(v.g) > 0 ? Trit::positive : Trit::negative;
    return e;
  }
  const double h = 1e-9 * std::max(1.0, s);
  const NormalizedValue left = g_normalized(source, s - h, k);
  const NormalizedValue right = g_normalized(source, s + h, k);
  if (certified(left, tolerance) && certified(right, tolerance) && sign_of(left.g) != sign_of(right.g)) {
    e.trit = Trit::zero;
  }
  return e;
}

bool definite(Trit t) { return t == Trit::positive || t == Trit::negative; }

double theta_at(complex rho, double s) { return std::atan2(rho.imag(), s - rho.real()); }

}  // namespace

double l_of_s(const ZeroSource& source, double s) {
  if (!(s > 0.5)) fail(ErrorCode::domain, "l_of_s: need s > 1/2");
  double best = std::numeric_limits<double>::infinity();
  for (const complex& rho : source.upper()) best = std::min(best, std::abs(s - rho));
  for (double beta : source.real_zeros()) best = std::min(best, std::abs(s - beta));
  if (source.has_trivial()) best = std::min(best, s + source.parity());
  if (best >= source.unlisted_distance(s)) {
    fail(ErrorCode::domain, "l_of_s: zeros above the covered height could be nearer");
  }
  return best;
}

Constants compute_constants(const ZeroSource& source) {
  if (source.upper().empty()) fail(ErrorCode::empty_list, "compute_constants: no complex zeros");
  Constants c;
  c.gamma0_tilde = std::numeric_limits<double>::infinity();
  double crossover = std::numeric_limits<double>::infinity();
  for (const complex& rho : source.upper()) {
    c.gamma0_tilde = std::min(c.gamma0_tilde, rho.imag());
    // |s - rho| < s  <=>  s > |rho|^2 / (2 Re rho).
    crossover = std::min(crossover, std::norm(rho) / (2.0 * rho.real()));
  }
  for (double beta : source.real_zeros()) crossover = std::min(crossover, 0.5 * beta);
  c.c_chi = std::max(1.0, crossover);

  // Last grid point in [1, c + 10] where s > l(s) fails.
  c.c_chi_scan = 1.0;
  const auto steps = static_cast<long long>(std::ceil((c.c_chi + 10.0 - 1.0) / kGridStep));
  for (long long i = 0; i <= steps; ++i) {
    const double s = 1.0 + i * kGridStep;
    if (!(s > l_of_s(source, s))) c.c_chi_scan = s;
  }

  c.b_chi = 0.5 + c.gamma0_tilde / std::tan(kPi / 100.0);
  c.C_chi = std::max(c.c_chi, c.b_chi);
  c.D_chi = c.gamma0_tilde + (c.C_chi - 0.5) / (2.0 * c.gamma0_tilde);
  return c;
}

int ScanReport::distinct_certified_orders() const {
  std::set<int> orders;
  for (const auto& x : crossings) {
    if (x.certified) orders.insert(x.k);
  }
  return static_cast<int>(orders.size());
}

namespace {

long long onset_from_sweep(double sweep) { return static_cast<long long>(std::ceil(2.0 * kPi / sweep)); }

}  // namespace

long long scan_onset(const ZeroSource& source, double a, double b) {
  if (!(b > a)) fail(ErrorCode::domain, "scan_onset: need a < b");
  const complex rho0 = eta_at(source, a).rho0;
  return onset_from_sweep(theta_at(rho0, a) - theta_at(rho0, b));
}

ScanReport scan_sign_changes(const ZeroSource& source, double a, double b, int k_max, double tolerance) {
  const Constants constants = compute_constants(source);
  if (!(a > constants.c_chi)) fail(ErrorCode::domain, "scan_sign_changes: need a > c_chi");
  if (!(b - a >= 1e-3)) fail(ErrorCode::domain, "scan_sign_changes: need b - a >= 1e-3");
  if (k_max < 2) fail(ErrorCode::domain, "scan_sign_changes: need k_max >= 2");

  const complex rho0 = eta_at(source, a).rho0;
  for (int i = 1; i <= 100; ++i) {
    const double s = a + (b - a) * i / 100.0;
    if (eta_at(source, s).rho0 != rho0) {
      std::ostringstream msg;
      msg << "scan_sign_changes: nearest zero changes inside [a, b]; try [" << a << ", "
          << a + (b - a) * (i - 1) / 100.0 << "]";
      fail(ErrorCode::tie, msg.str());
    }
  }
  const double sweep = theta_at(rho0, a) - theta_at(rho0, b);

  ScanReport report;
  report.a = a;
  report.b = b;
  report.k_max = k_max;
  report.k_star = onset_from_sweep(sweep);

  std::vector<std::vector<Crossing>> per_order(static_cast<std::size_t>(k_max + 1));
  parallel_orders(2, k_max, [&](int k) {
    // A quarter turn of k theta per cell keeps at most one crossing per cell
    // when f is small.
    const int cells = std::max(1, static_cast<int>(std::ceil(k * sweep / (0.25 * kPi))));
    std::vector<NormalizedValue> grid;
    grid.reserve(static_cast<std::size_t>(cells + 1));
    for (int j = 0; j <= cells; ++j) grid.push_back(g_normalized(source, a + (b - a) * j / cells, k));
    for (int j = 0; j < cells; ++j) {
      const auto& left = grid[static_cast<std::size_t>(j)];
      const auto& right = grid[static_cast<std::size_t>(j + 1)];
      if (!certified(left, tolerance) || !certified(right, tolerance)) continue;
      if (sign_of(left.g) == sign_of(right.g)) continue;
      double lo = left.s;
      double hi = right.s;
      const int sign_lo = sign_of(left.g);
      while (hi - lo > 1e-12 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (sign_of(g_normalized(source, mid, k).g) == sign_lo) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      Crossing x;
      x.k = k;
      x.s_star = 0.5 * (lo + hi);
      const double h = 1e-9 * std::max(1.0, x.s_star);
      const NormalizedValue gl = g_normalized(source, x.s_star - h, k);
      const NormalizedValue gr = g_normalized(source, x.s_star + h, k);
      x.g_left = gl.g;
      x.g_right = gr.g;
      x.bound_left = gl.f_bound;
      x.bound_right = gr.f_bound;
      x.error_left = gl.g_error;
      x.error_right = gr.g_error;
      x.certified = certified(gl, tolerance) && certified(gr, tolerance) && sign_of(gl.g) != sign_of(gr.g);
      x.dominant = x.certified && std::abs(gl.g) > gl.f_bound && std::abs(gr.g) > gr.f_bound;
      per_order[static_cast<std::size_t>(k)].push_back(x);
    }
  });
  for (auto& xs : per_order) report.crossings.insert(report.crossings.end(), xs.begin(), xs.end());
  if (report.crossings.empty() && k_max < report.k_star) {
    fail(ErrorCode::no_findings, "scan_sign_changes: no crossing below onset K* = " +
                                     std::to_string(report.k_star));
  }
  return report;
}

std::string trit_symbol(Trit trit) {
  switch (trit) {
    case Trit::negative: return "-1";
    case Trit::zero: return "0";
    case Trit::positive: return "1";
    case Trit::uncertain: return "?";
  }
  return "?";
}

double SignFingerprint::definite_fraction() const {
  if (trits.empty()) return 0.0;
  const auto n = std::count_if(trits.begin(), trits.end(), [](const TritEntry& e) { return definite(e.trit); });
  return static_cast<double>(n) / static_cast<double>(trits.size());
}

std::string SignFingerprint::to_records() const {
  std::ostringstream out;
  out.precision(17);
  for (const auto& e : trits) {
    out << "k=" << e.k << " trit=" << trit_symbol(e.trit) << " g=" << e.g << " fbound=" << e.f_bound
        << " gerr=" << e.g_error << '\n';
  }
  return out.str();
}

SignFingerprint fingerprint(const ZeroSource& source, double s, int k_min, int k_max, double tolerance) {
  if (k_min < 2 || k_max < k_min) fail(ErrorCode::domain, "fingerprint: need 2 <= k_min <= k_max");
  if (k_max - k_min + 1 > 100000) fail(ErrorCode::domain, "fingerprint: at most 1e5 orders");
  eta_at(source, s);
  SignFingerprint fp;
  fp.s = s;
  fp.k_min = k_min;
  fp.k_max = k_max;
  fp.tolerance = tolerance;
  fp.trits.resize(static_cast<std::size_t>(k_max - k_min + 1));
  parallel_orders(k_min, k_max, [&](int k) {
    fp.trits[static_cast<std::size_t>(k - k_min)] = trit_at(source, s, k, tolerance);
  });
  return fp;
}

CompareReport compare_window(const ZeroSource& source, double s1, double s2, int k_min, int k_max,
                             double tolerance) {
  if (k_min < 2 || k_max < k_min) fail(ErrorCode::domain, "compare: need 2 <= k_min <= k_max");
  eta_at(source, s1);
  eta_at(source, s2);
  CompareReport report;
  report.s1 = s1;
  report.s2 = s2;
  report.k_min = k_min;
  report.k_max = k_max;
  for (int lo = k_min; lo <= k_max; lo += kCompareChunk) {
    const int hi = std::min(k_max, lo + kCompareChunk - 1);
    std::vector<TritEntry> first(static_cast<std::size_t>(hi - lo + 1));
    std::vector<TritEntry> second(first.size());
    parallel_orders(lo, hi, [&](int k) {
      first[static_cast<std::size_t>(k - lo)] = trit_at(source, s1, k, tolerance);
      second[static_cast<std::size_t>(k - lo)] = trit_at(source, s2, k, tolerance);
    });
    for (std::size_t i = 0; i < first.size(); ++i) {
      ++report.examined;
      const Trit t1 = first[i].trit;
      const Trit t2 = second[i].trit;
      if (definite(t1) && definite(t2)) {
        if (t1 != t2) {
          report.first_separating_k = first[i].k;
          report.at_s1 = first[i];
          report.at_s2 = second[i];
          return report;
        }
        ++report.definite_agree;
      } else {
        ++report.uncertain;
      }
    }
  }
  return report;
}

CompareReport compare_fingerprints(const ZeroSource& source, double s1, double s2, int k_max, double tolerance) {
  const Constants constants = compute_constants(source);
  if (!(constants.C_chi < s1 && s1 <= s2)) {
    fail(ErrorCode::domain, "compare_fingerprints: need C_chi < s1 <= s2 (C_chi = " +
                                std::to_string(constants.C_chi) + ")");
  }
  if (k_max > 100000) fail(ErrorCode::domain, "compare_fingerprints: k_max at most 1e5");
  return compare_window(source, s1, s2, 2, k_max, tolerance);
}

SiegelReport siegel_stability(const SyntheticZeroSet& zeros, const std::vector<double>& s_values,
                              int k_start, int k_span) {
  zeros.validate();
  if (s_values.empty()) fail(ErrorCode::domain, "siegel_stability: no s values");
  for (double s : s_values) {
    if (!(s > 1.0)) fail(ErrorCode::domain, "siegel_stability: s values must exceed 1");
  }
  if (k_start < 1 || k_span < 0) fail(ErrorCode::domain, "siegel_stability: need k_start >= 1, span >= 0");

  std::vector<complex> pairs;
  std::vector<double> reals;
  for (const complex& z : zeros.zeros) {
    if (z.imag() > 0.0) {
      pairs.push_back(z);
    } else {
      reals.push_back(z.real());
    }
  }
  if (reals.empty()) fail(ErrorCode::domain, "siegel_stability: set has no real zero");
  const auto top = std::max_element(reals.begin(), reals.end());
  const double beta = *top;
  reals.erase(top);
  for (const complex& z : pairs) {
    if (z.real() > beta) fail(ErrorCode::dominance, "siegel_stability: a complex zero lies right of beta");
  }

  SiegelReport report;
  report.beta = beta;
  for (double s : s_values) {
    for (const complex& z : pairs) report.eta_max = std::max(report.eta_max, (s - beta) / std::abs(s - z));
    for (double r : reals) report.eta_max = std::max(report.eta_max, (s - beta) / std::abs(s - r));
  }
  const double count = 2.0 * static_cast<double>(pairs.size()) + static_cast<double>(reals.size());
  report.analytic_bound =
      count <= 1.0 ? 2 : static_cast<int>(std::ceil(std::log(count) / std::log(1.0 / report.eta_max))) + 2;

  // R_k(s) = sum over the other zeros of ((s - beta)/(s - rho))^k.
  auto remainder = [&](double s, int k) {
    double r = 0.0;
    for (const complex& z : pairs) r += 2.0 * std::pow((s - beta) / (s - z), k).real();
    for (double x : reals) r += std::pow((s - beta) / (s - x), k);
    return r;
  };

  int k = k_start;
  for (;; ++k) {
    if (k - k_start > kSiegelSearchCap) {
      fail(ErrorCode::convergence, "siegel_stability: remainder never drops below 1");
    }
    const bool below = std::all_of(s_values.begin(), s_values.end(),
                                   [&](double s) { return std::abs(remainder(s, k)) < 1.0; });
    if (below) break;
  }
  report.M = k;
  report.stable = true;
  for (int j = report.M; j <= report.M + k_span && report.stable; ++j) {
    for (double s : s_values) {
      if (!(1.0 + remainder(s, j) > 0.0)) {
        report.stable = false;
        report.failing_k = j;
        break;
      }
    }
  }
  return report;
}

OfflineReport construct_offline_pair(complex rho0, complex rho1, double delta, int window) {
  if (!(rho0.imag() > 0.0 && rho1.imag() > rho0.imag())) {
    fail(ErrorCode::domain, "construct_offline_pair: need Im rho1 > Im rho0 > 0");
  }
  if (rho1.real() == 0.5) fail(ErrorCode::domain, "construct_offline_pair: rho1 must be off the critical line");
  if (!(delta > 0.0) || window < 1) fail(ErrorCode::domain, "construct_offline_pair: need delta > 0, window >= 1");
  const complex d = rho1 - rho0;
  if (!(d.real() > 0.0)) {
    fail(ErrorCode::geometry, "construct_offline_pair: perpendicular feet need Re(rho1 - rho0) > 0");
  }
  const SyntheticZeroSet set{{rho0, rho1}};
  const ZeroSource source(set);
  const Constants constants = compute_constants(source);

  OfflineReport out;
  out.rho0 = rho0;
  out.rho1 = rho1;
  out.delta = delta;
  out.window = window;
  // Feet on the real axis of the perpendiculars to the line rho0 rho1.
  out.s0 = rho0.real() + rho0.imag() * d.imag() / d.real();
  out.s1 = rho1.real() + rho1.imag() * d.imag() / d.real();
  if (!(out.s0 > constants.c_chi && out.s1 > constants.c_chi)) {
    fail(ErrorCode::geometry, "construct_offline_pair: perpendicular feet fall below c_chi");
  }
  out.theta = theta_at(rho0, out.s0);
  if (std::abs(out.theta - theta_at(rho1, out.s1)) > 1e-12) {
    fail(ErrorCode::geometry, "construct_offline_pair: angles at the two feet differ");
  }

  const long double root2 = std::numbers::sqrt2_v<long double>;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double lo = (static_cast<long double>(out.theta) - delta) / two_pi;
  const long double hi = (static_cast<long double>(out.theta) + delta) / two_pi;
  bool found = false;
  for (long long m = 1; m <= kSearchLimit && !found; ++m) {
    for (long long b : {m, -m}) {
      const long double x = static_cast<long double>(b) * root2;
      const long double a = std::ceil(lo - x);
      if (a + x < hi) {
        out.a = static_cast<long long>(a);
        out.b = b;
        found = true;
        break;
      }
    }
  }
  if (!found) fail(ErrorCode::search, "construct_offline_pair: no (a, b) with |b| <= 1e6");
  const long double frac = static_cast<long double>(out.a) + static_cast<long double>(out.b) * root2;
  out.phi = static_cast<double>(two_pi * frac);
  out.s_prime = rho0.real() + rho0.imag() / std::tan(out.phi);
  out.s_dblprime = rho1.real() + rho1.imag() / std::tan(out.phi);

  const EtaReport at_prime = eta_at(source, out.s_prime);
  const EtaReport at_dblprime = eta_at(source, out.s_dblprime);
  if (at_prime.rho0 != rho0 || at_dblprime.rho0 != rho1) {
    fail(ErrorCode::geometry, "construct_offline_pair: nearest zeros at s', s'' are not rho0, rho1");
  }
  out.eta = std::max(at_prime.eta, at_dblprime.eta);
  out.c_ab = 1.0 / (9.0 * static_cast<double>(std::llabs(out.b)) * std::numbers::sqrt2);

  // h(k) = log(pi C / 4k) - log(2 eta^k) rises for k > 1/log(1/eta).
  const double log_inv_eta = -std::log(out.eta);
  auto margin = [&](double k) { return std::log(kPi * out.c_ab / (4.0 * k)) - std::log(2.0) + k * log_inv_eta; };
  const auto k_turn = static_cast<long long>(std::ceil(1.0 / log_inv_eta));
  if (margin(static_cast<double>(k_turn)) > 0.0) {
    out.N = 0;
  } else {
    long long step = 1;
    long long k = k_turn;
    while (margin(static_cast<double>(k + step)) <= 0.0) step *= 2;
    long long left = k + step / 2;
    long long right = k + step;
    while (right - left > 1) {
      const long long mid = left + (right - left) / 2;
      if (margin(static_cast<double>(mid)) > 0.0) {
        right = mid;
      } else {
        left = mid;
      }
    }
    out.N = right - 1;
  }

  out.diophantine_ok = true;
  out.diophantine_margin = std::numeric_limits<double>::infinity();
  for (long long k = out.N + 1; k <= out.N + window; ++k) {
    const long double y = 4.0L * static_cast<long double>(k) * frac;
    const long double r = 2.0L * std::round((y - 1.0L) / 2.0L) + 1.0L;
    const double m = static_cast<double>(std::abs(y - r) - static_cast<long double>(out.c_ab) / k);
    out.diophantine_margin = std::min(out.diophantine_margin, m);
    if (!(m > 0.0)) out.diophantine_ok = false;
  }

  if (out.N + window > std::numeric_limits<int>::max()) {
    fail(ErrorCode::overflow, "construct_offline_pair: window exceeds int orders");
  }
  out.comparison = compare_window(source, out.s_prime, out.s_dblprime, static_cast<int>(out.N + 1),
                                  static_cast<int>(out.N + window));
  out.certificate = out.diophantine_ok && !out.comparison.first_separating_k &&
                    out.comparison.definite_agree == window;
  return out;
}

}  // namespace lmono
