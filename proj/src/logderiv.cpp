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

#include "lmono/logderiv.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lmono/error.hpp"
#include "lmono/kahan.hpp"
#include "lmono/lfunction.hpp"

namespace lmono {

namespace {

constexpr double kUlp = 1.2e-16;
constexpr double kSkip = 1e-30;
constexpr double kSeriesFloor = 1.2;
constexpr int kSeriesMaxOrder = 64;
constexpr double kDirectLimit = 1e7;
constexpr double kSieveThreshold = 1e3;
// Circle contour stays in Re z >= 1.05, where |log L| <= log zeta(1.05) < pi,
// so the principal logarithm is the analytic one.
constexpr double kCircleFloor = 1.05;
constexpr int kCircleMaxPoints = 8192;
constexpr double kFormulaTailCap = 1e-4;

// log of int_{log N}^inf u^k e^{-(s-1)u} du, which majorizes
// sum_{n > N} (log n)^k n^-s once (log x)^k x^-s decreases past N.
double log_series_tail(double s, int k, double log_n) {
  const double x = (s - 1.0) * log_n;
  double term = 1.0;
  double poly = 1.0;
  for (int j = 1; j <= k; ++j) {
    term *= x / j;
    poly += term;
  }
  return std::lgamma(k + 1.0) - x + std::log(poly) - (k + 1.0) * std::log(s - 1.0);
}

DerivativeValue series_direct(const RealCharacter& chi, double s, int k, double n_max, double tail) {
  const auto n_top = static_cast<std::size_t>(n_max);
  std::vector<double> lambda;
  if (n_max > kSieveThreshold) lambda = von_mangoldt_table(n_top);
  KahanSum sum;
  for (std::size_t n = 2; n <= n_top; ++n) {
    const int c = chi(static_cast<long long>(n));
    if (c == 0) continue;
    const double lam = lambda.empty() ? von_mangoldt(n) : lambda[n];
    if (lam == 0.0) continue;
    const double log_n = std::log(static_cast<double>(n));
    sum += c * lam * std::exp((k - 1) * std::log(log_n) - s * log_n);
  }
  DerivativeValue out;
  out.k = k;
  out.s = s;
  out.method = Method::series;
  out.value = (k % 2 == 0 ? 1.0 : -1.0) * sum.value();
  out.error_bound = tail + 4.0 * kUlp * sum.magnitude;
  return out;
}

// Trapezoid rule for k!/(2 pi i) \oint log L(z) (z - s)^-(k+1) dz on |z - s| = r.
DerivativeValue series_circle(const RealCharacter& chi, double s, int k, double eps) {
  const double r = std::min(1.0, s - kCircleFloor);
  const LFunction l(chi);
  double worst_rel = 0.0;
  double max_log = 0.0;
  auto term = [&](int j, int m) {
    const double phi = 2.0 * kPi * j / m;
    const LPoint p = l.evaluate(s + std::polar(r, phi));
    const complex f = std::log(p.value);
    worst_rel = std::max(worst_rel, p.error_bound / std::abs(p.value) + 4.0 * kUlp * std::abs(f));
    max_log = std::max(max_log, std::abs(f));
    return (f * std::polar(1.0, -k * phi)).real();
  };
  const double amp = std::exp(std::lgamma(k + 1.0) - k * std::log(r));

  // Conjugate symmetry: the points at phi and -phi contribute equally.
  int m = 64;
  KahanSum acc;
  acc += term(0, m);
  acc += term(m / 2, m);
  for (int j = 1; j < m / 2; ++j) acc += 2.0 * term(j, m);
  double prev = amp * acc.value() / m;
  while (m < kCircleMaxPoints) {
    const int m2 = 2 * m;
    for (int j = 1; j < m; j += 2) acc += 2.0 * term(j, m2);
    m = m2;
    const double cur = amp * acc.value() / m;
    const double diff = std::abs(cur - prev);
    prev = cur;
    const double bound = diff + amp * worst_rel;
    if (diff <= 0.5 * eps || bound <= eps) {
      if (bound > eps) break;
      DerivativeValue out;
      out.k = k;
      out.s = s;
      out.method = Method::series;
      out.value = cur;
      out.error_bound = bound;
      return out;
    }
  }
  std::ostringstream msg;
  msg << "f_deriv_series: accuracy " << eps << " unreachable at s = " << s << ", k = " << k;
  fail(ErrorCode::convergence, msg.str());
}

struct ScaledSum {
  double value = 0.0;
  double error = 0.0;
  double magnitude = 0.0;
  double tail_majorant = 0.0;
};

// sum over zeros rho != skip, skip-bar of (scale / (s - rho))^k, trivial
// zeros and the counted tail included.
ScaledSum scaled_zero_sum(const ZeroSource& source, double s, int k, double scale, const complex* skip) {
  const double kd = k;
  KahanSum sum;
  ScaledSum out;
  for (const complex& rho : source.upper()) {
    if (skip != nullptr && rho == *skip) continue;
    const complex w = s - rho;
    const double log_ratio = std::log(scale / std::abs(w));
    const double mag = 2.0 * std::exp(kd * log_ratio);
    out.magnitude += mag;
    if (mag < kSkip) {
      out.error += mag;
      continue;
    }
    const double phase = kd * std::arg(w);
    sum += mag * std::cos(phase);
    out.error += mag * kUlp * (4.0 + std::abs(phase) + kd * std::abs(log_ratio));
  }
  for (double beta : source.real_zeros()) {
    const double w = s - beta;
    const double log_ratio = std::log(scale / std::abs(w));
    const double mag = std::exp(kd * log_ratio);
    out.magnitude += mag;
    if (mag < kSkip) {
      out.error += mag;
      continue;
    }
    sum += (w < 0.0 && k % 2 == 1) ? -mag : mag;
    out.error += mag * kUlp * (2.0 + kd * std::abs(log_ratio));
  }
  if (source.has_trivial()) {
    const RealSum t = scaled_power_sum(k, 0.5 * (s + source.parity()), 0.5 * scale);
    sum += t.value;
    out.magnitude += std::abs(t.value);
    out.error += t.error_bound + kd * kUlp * std::abs(t.value);
  }
  if (const ZeroCounting* counting = source.counting()) {
    const double a = s - 0.5;
    const double majorant = counting->pair_majorant(scale, a, k);
    out.tail_majorant = majorant;
    out.magnitude += majorant;
    if (majorant < kSkip) {
      out.error += majorant;
    } else {
      const auto tail = counting->pair_tail(a, k, scale);
      sum += tail.value;
      out.error += tail.error_bound;
    }
  }
  out.value = sum.value();
  out.error += kUlp * sum.magnitude;
  return out;
}

struct Nearest {
  complex rho;
  double dist = std::numeric_limits<double>::infinity();
  bool complex_zero = false;
};

// Nearest and second-nearest zeros, conjugates identified.
std::pair<Nearest, Nearest> two_nearest(const ZeroSource& source, double s) {
  Nearest first;
  Nearest second;
  auto offer = [&](complex rho, bool is_complex) {
    const double d = std::abs(s - rho);
    if (d < first.dist) {
      second = first;
      first = {rho, d, is_complex};
    } else if (d < second.dist) {
      second = {rho, d, is_complex};
    }
  };
  for (const complex& rho : source.upper()) offer(rho, true);
  for (double beta : source.real_zeros()) offer(beta, false);
  if (source.has_trivial()) {
    // Nearest two trivial zeros -b and -b - 2 suffice for real s > -b.
    offer(-static_cast<double>(source.parity()), false);
    offer(-static_cast<double>(source.parity()) - 2.0, false);
  }
  return {first, second};
}

}  // namespace

const char* method_name(Method method) {
  return method == Method::series ? "series" : "zerosum";
}

ZeroSource::ZeroSource(const ZeroList& zeros) {
  if (!zeros.complete) {
    fail(ErrorCode::domain, "zero list is not verified; run count_check first");
  }
  const RealCharacter chi(zeros.discriminant);
  trivial_ = true;
  parity_ = chi.parity();
  height_ = zeros.covered_height;
  upper_.reserve(zeros.ordinates.size());
  for (double g : zeros.ordinates) upper_.emplace_back(0.5, g);
  counting_.emplace(chi, zeros);
  list_ = zeros;
}

ZeroSource::ZeroSource(const SyntheticZeroSet& zeros) {
  zeros.validate();
  height_ = std::numeric_limits<double>::infinity();
  for (const complex& z : zeros.zeros) {
    if (z.imag() > 0.0) {
      upper_.push_back(z);
    } else {
      real_.push_back(z.real());
    }
  }
}

double ZeroSource::unlisted_distance(double s) const {
  if (!std::isfinite(height_)) return height_;
  const double dx = std::max(0.0, s - 1.0);
  return std::sqrt(dx * dx + height_ * height_);
}

DerivativeValue f_deriv_series(const RealCharacter& chi, double s, int k, double eps) {
  if (!(s >= kSeriesFloor)) fail(ErrorCode::domain, "f_deriv_series: need s >= 1.2");
  if (k < 0 || k > kSeriesMaxOrder) fail(ErrorCode::domain, "f_deriv_series: need 0 <= k <= 64");
  if (!(eps > 0.0)) fail(ErrorCode::domain, "f_deriv_series: eps must be positive");
  if (k == 0) {
    const LPoint p = LFunction(chi).evaluate(s);
    DerivativeValue out;
    out.s = s;
    out.value = std::log(p.value.real());
    out.error_bound = p.error_bound / p.value.real() + kUlp;
    return out;
  }
  double log_n = std::max(std::log(16.0), static_cast<double>(k) / s);
  const double log_limit = std::log(kDirectLimit);
  const double log_target = std::log(0.5 * eps);
  while (log_n <= log_limit && log_series_tail(s, k, log_n) > log_target) log_n += 0.05;
  if (log_n <= log_limit) {
    return series_direct(chi, s, k, std::ceil(std::exp(log_n)), std::exp(log_series_tail(s, k, log_n)));
  }
  return series_circle(chi, s, k, eps);
}

DerivativeValue f_prime_formula(const RealCharacter& chi, double s, const ZeroList& zeros) {
  if (!(s > 1.0)) fail(ErrorCode::domain, "f_prime_formula: need s > 1");
  if (zeros.discriminant != chi.discriminant()) {
    fail(ErrorCode::domain, "f_prime_formula: zero list belongs to another character");
  }
  if (!zeros.complete) fail(ErrorCode::domain, "f_prime_formula: zero list is not verified");
  const int b = chi.parity();
  const double q = static_cast<double>(chi.modulus());
  const BConstant big_b = b_constant(zeros);
  const ZeroCounting counting(chi, zeros);
  const double a = s - 0.5;
  KahanSum pairs;
  for (double g : zeros.ordinates) {
    pairs += 2.0 * a / (a * a + g * g);
    pairs += 1.0 / (0.25 + g * g);
  }
  const auto tail_s = counting.pair_tail(a, 1);
  const auto tail_half = counting.pair_tail(0.5, 1);
  const double dh = digamma_half(s, b);
  const double trivial = b == 0 ? -dh - 0.5 * kEulerGamma - 1.0 / s : -dh - std::log(2.0) - 0.5 * kEulerGamma;

  KahanSum total;
  total += -0.5 * std::log(q / kPi);
  total += b * std::log(2.0);
  total += 0.5 * kEulerGamma;
  total += big_b.value;
  total += (1.0 - b) / s;
  total += trivial;
  total += pairs.value();
  total += tail_s.value;
  total += tail_half.value;

  DerivativeValue out;
  out.k = 1;
  out.s = s;
  out.method = Method::zerosum;
  out.value = total.value();
  // The 1/2-weight tail inside B and the one in the pair sum are the same
  // functional of S(t) with opposite signs, so their errors cancel.
  out.error_bound = tail_s.error_bound + 8.0 * kUlp * (total.magnitude + pairs.magnitude);
  if (out.error_bound > kFormulaTailCap) {
    fail(ErrorCode::tail, "f_prime_formula: tail bound exceeds 1e-4; raise the zero height");
  }
  return out;
}

DerivativeValue f_deriv_zerosum(const ZeroSource& source, double s, int k, bool force_raw) {
  // For a character the k = 1 sum converges only conditionally; the B form
  // handles it. A finite synthetic set is summed directly.
  if (k == 1 && source.list() != nullptr) {
    return f_prime_formula(RealCharacter(source.list()->discriminant), s, *source.list());
  }
  if (k < 1) fail(ErrorCode::domain, "f_deriv_zerosum: need k >= 1");
  if (!(s > 1.0)) fail(ErrorCode::domain, "f_deriv_zerosum: need s > 1");
  if (force_raw && k > kRawOrderLimit) {
    fail(ErrorCode::overflow, "f_deriv_zerosum: (k-1)! overflows for k > 170");
  }
  const double scale = two_nearest(source, s).first.dist;
  if (!std::isfinite(scale)) fail(ErrorCode::empty_list, "f_deriv_zerosum: no zeros");
  const ScaledSum sum = scaled_zero_sum(source, s, k, scale, nullptr);

  DerivativeValue out;
  out.k = k;
  out.s = s;
  out.method = Method::zerosum;
  const double parity_sign = (k - 1) % 2 == 0 ? 1.0 : -1.0;
  const double log_prefactor = std::lgamma(static_cast<double>(k)) - k * std::log(scale);
  if (k <= kRawOrderLimit) {
    const double prefactor = std::exp(log_prefactor);
    out.value = parity_sign * prefactor * sum.value;
    out.error_bound = prefactor * sum.error;
    return out;
  }
  out.log_form = true;
  out.sign = sum.value == 0.0 ? 0 : (sum.value > 0.0 ? 1 : -1) * static_cast<int>(parity_sign);
  out.log_magnitude = log_prefactor + std::log(std::abs(sum.value));
  out.error_bound = sum.error / std::abs(sum.value);
  return out;
}

EtaReport eta_at(const ZeroSource& source, double s) {
  const auto [first, second] = two_nearest(source, s);
  if (!first.complex_zero) {
    fail(ErrorCode::domain, "eta_at: nearest zero to s is real or trivial; s must exceed c_chi");
  }
  const double unlisted = source.unlisted_distance(s);
  if (first.dist >= unlisted) {
    fail(ErrorCode::domain, "eta_at: an unlisted zero could be nearest; raise the zero height");
  }
  if (std::abs(second.dist - first.dist) <= 1e-12 * std::max(1.0, first.dist)) {
    fail(ErrorCode::tie, "eta_at: two non-conjugate zeros are equidistant from s; perturb s");
  }
  EtaReport out;
  out.rho0 = first.rho;
  out.rho_tilde = second.rho;
  out.r = first.dist;
  out.eta = first.dist / std::min(second.dist, unlisted);
  return out;
}

NormalizedValue g_normalized(const ZeroSource& source, double s, int k) {
  if (k < 2) fail(ErrorCode::domain, "g_normalized: need k >= 2");
  const EtaReport eta = eta_at(source, s);
  const ScaledSum f = scaled_zero_sum(source, s, k, eta.r, &eta.rho0);
  NormalizedValue out;
  out.k = k;
  out.s = s;
  out.rho0 = eta.rho0;
  out.r_s = eta.r;
  out.theta_s = std::atan2(eta.rho0.imag(), s - eta.rho0.real());
  const double phase = k * out.theta_s;
  out.cos_term = 2.0 * std::cos(phase);
  out.g = out.cos_term + f.value;
  out.f_bound = f.magnitude;
  out.g_error = f.error + 2.0 * kUlp * (4.0 + std::abs(phase));
  return out;
}

}  // namespace lmono
