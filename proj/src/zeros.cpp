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

#include "lmono/zeros.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <limits>
#include <sstream>
#include <thread>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "lmono/error.hpp"
#include "lmono/kahan.hpp"

namespace lmono {

namespace {

constexpr double kBisectionError = 1e-9;
constexpr double kContourClearance = 1e-3;
constexpr double kContourNudge = 1e-2;
// Explicit constants in |N(T, chi) - (T/pi) log(qT/(2 pi e))| <= C1 log(qT) + C2,
// T >= 1, where N counts zeros with |gamma| <= T.
constexpr double kCountC1 = 0.9185;
constexpr double kCountC2 = 5.512;

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double bisect_zero(const LFunction& l, double lo, double hi, double flo) {
  while (hi - lo > 2.0 * kBisectionError) {
    const double mid = 0.5 * (lo + hi);
    const double fm = l.z_function(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Zeros bracketed between grid points [i0, i1] of t_i = i * step.
std::vector<double> scan_window(const LFunction& l, double height, double step, long long i0,
                                long long i1) {
  std::vector<double> found;
  double t_prev = std::min(i0 * step, height);
  double f_prev = l.z_function(t_prev);
  for (long long i = i0 + 1; i <= i1; ++i) {
    const double t = std::min(i * step, height);
    const double f = l.z_function(t);
    if (f == 0.0) {
      if (t > 0.0) found.push_back(t);
    } else if (f_prev != 0.0 && std::signbit(f) != std::signbit(f_prev)) {
      found.push_back(bisect_zero(l, t_prev, t, f_prev));
    }
    t_prev = t;
    f_prev = f;
    if (t >= height) break;
  }
  return found;
}

// Continuous change of arg L along the segment p0 -> p1.
double arg_change(const LFunction& l, complex p0, complex p1) {
  const double length = std::abs(p1 - p0);
  double u = 0.0;
  double du = std::min(1.0, 0.05 / length);
  complex prev = l.evaluate(p0).value;
  double total = 0.0;
  while (u < 1.0) {
    du = std::min(du, 1.0 - u);
    const complex next = l.evaluate(p0 + (u + du) * (p1 - p0)).value;
    const double d = std::arg(next / prev);
    if (std::abs(d) > 0.25) {
      if (du * length < 1e-9) fail(ErrorCode::contour, "count_check: contour passes through a zero");
      du *= 0.5;
      continue;
    }
    total += d;
    u += du;
    prev = next;
    du *= 1.5;
  }
  return total;
}

bool near_zero(const ZeroList& zl, double t) {
  return std::any_of(zl.ordinates.begin(), zl.ordinates.end(),
                     [t](double g) { return std::abs(g - t) < kContourClearance; });
}

[[noreturn]] void format_error(const std::filesystem::path& path, int line, const std::string& what) {
  fail(ErrorCode::format, path.string() + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& text, const std::filesystem::path& path, int line) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  while (first < last && *first == ' ') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) format_error(path, line, "bad number '" + text + "'");
  return v;
}

long long parse_int(const std::string& text, const std::filesystem::path& path, int line) {
  long long v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  while (first < last && *first == ' ') ++first;
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) format_error(path, line, "bad integer '" + text + "'");
  return v;
}

// Total variation of w' on [T, inf) for w(t) = 2 Re (scale / (a - it))^k, a > 0.
// w'(t) = -2k scale^k |a - it|^-(k+1) sin((k+1) phi), phi = atan2(t, a); w''
// changes sign where (k+2) phi = pi/2 mod pi.
double weight_variation(double a, int k, double scale, double height) {
  const double kd = k;
  auto w_prime = [&](double phi) {
    const double t = a * std::tan(phi);
    const double log_mag = std::log(2.0 * kd) + kd * std::log(scale) - 0.5 * (kd + 1.0) * std::log(a * a + t * t);
    return -std::exp(log_mag) * std::sin((kd + 1.0) * phi);
  };
  const double phi_t = std::atan2(height, a);
  const double m0 = std::ceil(((kd + 2.0) * phi_t - 0.5 * kPi) / kPi);
  const double m1 = std::floor(((kd + 2.0) * 0.5 * kPi - 0.5 * kPi) / kPi);
  if (m1 - m0 > 20000.0) {
    return 2.0 * kd * std::exp(kd * std::log(scale / height)) / height;
  }
  double prev = w_prime(phi_t);
  double total = 0.0;
  for (double m = std::max(m0, 0.0); m <= m1; m += 1.0) {
    const double phi = (0.5 * kPi + m * kPi) / (kd + 2.0);
    if (phi <= phi_t || phi >= 0.5 * kPi) continue;
    const double cur = w_prime(phi);
    total += std::abs(cur - prev);
    prev = cur;
  }
  return total + std::abs(prev);
}

}  // namespace

const char* origin_name(ZeroOrigin origin) {
  switch (origin) {
    case ZeroOrigin::scanned: return "scanned";
    case ZeroOrigin::ingested: return "ingested";
    case ZeroOrigin::synthetic: return "synthetic";
  }
  return "scanned";
}

void SyntheticZeroSet::validate() const {
  for (const complex& z : zeros) {
    if (!(z.real() > 0.0 && z.real() < 1.0) || z.imag() < 0.0) {
      fail(ErrorCode::domain, "synthetic zeros need 0 < Re < 1 and Im >= 0");
    }
  }
}

double max_scan_step(long long modulus, double height) {
  return kPi / std::log(static_cast<double>(modulus) * height / (2.0 * kPi) + 4.0);
}

ZeroList scan_zeros(const LFunction& l, double height, double step) {
  if (!(height > 0.0) || height > kMaxHeight) fail(ErrorCode::domain, "scan_zeros: need 0 < T <= 1000");
  if (!(step > 0.0) || step > max_scan_step(l.modulus(), height)) {
    fail(ErrorCode::domain, "scan_zeros: step exceeds anti-skip spacing");
  }
  const long long points = static_cast<long long>(std::ceil(height / step));
  const long long windows =
      std::max<long long>(1, std::min<long long>(points, std::thread::hardware_concurrency()));
  std::vector<std::future<std::vector<double>>> parts;
  for (long long w = 0; w < windows; ++w) {
    const long long i0 = points * w / windows;
    const long long i1 = points * (w + 1) / windows;
    parts.push_back(std::async(std::launch::async, scan_window, std::cref(l), height, step, i0, i1));
  }
  ZeroList zl;
  zl.discriminant = l.character().discriminant();
  for (auto& part : parts) {
    const auto found = part.get();
    zl.ordinates.insert(zl.ordinates.end(), found.begin(), found.end());
  }
  std::sort(zl.ordinates.begin(), zl.ordinates.end());
  zl.ordinates.erase(std::unique(zl.ordinates.begin(), zl.ordinates.end()), zl.ordinates.end());
  zl.per_zero_error = kBisectionError;
  zl.covered_height = height;
  zl.origin = ZeroOrigin::scanned;
  return zl;
}

CountReport count_check(const LFunction& l, const ZeroList& zl) {
  CountReport report;
  double height = zl.covered_height;
  if (near_zero(zl, height)) {
    report.nudged = true;
    if (!near_zero(zl, height - kContourNudge)) {
      height -= kContourNudge;
    } else if (!near_zero(zl, height + kContourNudge)) {
      height += kContourNudge;
    } else {
      fail(ErrorCode::contour, "count_check: zeros crowd the contour top edge");
    }
  }
  const double arg_l = arg_change(l, complex(1.5, 0.0), complex(1.5, height)) +
                       arg_change(l, complex(1.5, height), complex(0.5, height));
  report.expected = (l.theta(height) + arg_l) / kPi;
  report.found = std::count_if(zl.ordinates.begin(), zl.ordinates.end(),
                               [height](double g) { return g <= height; });
  report.contour_height = height;
  report.pass = report.found == std::llround(report.expected);
  return report;
}

CountReport verify_zero_list(const LFunction& l, ZeroList& zl) {
  const CountReport report = count_check(l, zl);
  zl.complete = report.pass;
  return report;
}

RealSegmentReport check_real_segment(const LFunction& l) {
  RealSegmentReport report;
  report.positive = true;
  report.min_value = std::numeric_limits<double>::infinity();
  for (int i = 1; i < 100; ++i) {
    const double sigma = 0.01 * i;
    const double v = l.evaluate(complex(sigma, 0.0)).value.real();
    if (v < report.min_value) {
      report.min_value = v;
      report.min_sigma = sigma;
    }
    if (!(v > 0.0)) report.positive = false;
  }
  return report;
}

double lowest_zero(const ZeroList& zl) {
  if (zl.ordinates.empty()) fail(ErrorCode::empty_list, "lowest_zero: empty zero list");
  return zl.ordinates.front();
}

double lowest_zero(const SyntheticZeroSet& set) {
  double best = std::numeric_limits<double>::infinity();
  for (const complex& z : set.zeros) {
    if (z.imag() > 0.0) best = std::min(best, z.imag());
  }
  if (!std::isfinite(best)) fail(ErrorCode::empty_list, "lowest_zero: no zero above the real axis");
  return best;
}

BConstant b_constant(const ZeroList& zl) {
  if (zl.covered_height < 50.0) fail(ErrorCode::domain, "b_constant: need zeros to height T >= 50");
  const RealCharacter chi(zl.discriminant);
  const ZeroCounting counting(chi, zl);
  KahanSum partial;
  for (double g : zl.ordinates) partial += 1.0 / (0.25 + g * g);
  const auto tail = counting.pair_tail(0.5, 1);
  BConstant b;
  b.partial = -partial.value();
  b.tail_estimate = -tail.value;
  b.value = b.partial + b.tail_estimate;
  b.error_bound = tail.error_bound + 1e-16 * partial.magnitude;
  if (b.error_bound > 0.1 * std::abs(b.partial)) {
    fail(ErrorCode::tail, "b_constant: tail bound exceeds 10% of the partial sum");
  }
  return b;
}

BConstant b_constant(const SyntheticZeroSet& set) {
  set.validate();
  KahanSum sum;
  for (const complex& z : set.zeros) {
    if (z.imag() > 0.0) {
      sum += 2.0 * z.real() / std::norm(z);
    } else {
      sum += 1.0 / z.real();
    }
  }
  BConstant b;
  b.partial = -sum.value();
  b.value = b.partial;
  b.error_bound = 1e-16 * sum.magnitude;
  return b;
}

void store_zeros(const ZeroList& zl, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "# lmono-zeros v1, d=" << zl.discriminant << ", T=" << format_double(zl.covered_height)
      << ", source=" << origin_name(zl.origin) << "\n";
  for (std::size_t i = 0; i < zl.ordinates.size(); ++i) {
    out << zl.discriminant << ',' << (i + 1) << ',' << format_double(zl.ordinates[i]) << ','
        << format_double(zl.per_zero_error) << '\n';
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream file(tmp, std::ios::trunc);
    if (!file) fail(ErrorCode::io, "cannot write " + tmp.string());
    file << out.str();
    if (!file) fail(ErrorCode::io, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ZeroList load_zeros(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) fail(ErrorCode::io, "cannot read " + path.string());
  std::string line;
  int line_no = 1;
  if (!std::getline(file, line)) format_error(path, line_no, "missing header");
  const std::string prefix = "# lmono-zeros v1, d=";
  if (line.rfind(prefix, 0) != 0) format_error(path, line_no, "bad header");
  ZeroList zl;
  {
    const std::string rest = line.substr(prefix.size());
    const auto c1 = rest.find(", T=");
    const auto c2 = rest.find(", source=");
    if (c1 == std::string::npos || c2 == std::string::npos || c2 < c1) {
      format_error(path, line_no, "bad header");
    }
    zl.discriminant = parse_int(rest.substr(0, c1), path, line_no);
    zl.covered_height = parse_double(rest.substr(c1 + 4, c2 - c1 - 4), path, line_no);
    const std::string src = rest.substr(c2 + 9);
    if (src == "scanned") {
      zl.origin = ZeroOrigin::scanned;
    } else if (src == "ingested") {
      zl.origin = ZeroOrigin::ingested;
    } else if (src == "synthetic") {
      zl.origin = ZeroOrigin::synthetic;
    } else {
      format_error(path, line_no, "unknown source '" + src + "'");
    }
    if (!(zl.covered_height > 0.0)) format_error(path, line_no, "T must be positive");
  }
  while (std::getline(file, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 4) format_error(path, line_no, "expected 4 fields");
    if (parse_int(fields[0], path, line_no) != zl.discriminant) {
      format_error(path, line_no, "discriminant differs from header");
    }
    if (parse_int(fields[1], path, line_no) != static_cast<long long>(zl.ordinates.size() + 1)) {
      format_error(path, line_no, "index out of sequence");
    }
    const double ordinate = parse_double(fields[2], path, line_no);
    const double error = parse_double(fields[3], path, line_no);
    if (!(ordinate > 0.0)) format_error(path, line_no, "ordinate must be positive");
    if (!zl.ordinates.empty() && !(ordinate > zl.ordinates.back())) {
      format_error(path, line_no, "ordinates not strictly increasing");
    }
    if (!(error > 0.0)) format_error(path, line_no, "error must be positive");
    zl.ordinates.push_back(ordinate);
    zl.per_zero_error = std::max(zl.per_zero_error, error);
  }
  return zl;
}

ZeroList ingest_zeros(const std::filesystem::path& path) {
  ZeroList zl = load_zeros(path);
  zl.origin = ZeroOrigin::ingested;
  zl.complete = false;
  return zl;
}

ZeroCounting::ZeroCounting(const RealCharacter& chi, const ZeroList& zl)
    : q_(chi.modulus()), b_(chi.parity()), height_(zl.covered_height) {
  const auto& g = zl.ordinates;
  count_ = std::upper_bound(g.begin(), g.end(), height_) - g.begin();
  s_at_height_ = static_cast<double>(count_) - theta(height_) / kPi;

  // c0 from the real axis, where L(sigma) > 0. Past sigma = 40,
  // |log L| <= log zeta(sigma) < 2^(1 - sigma).
  const LFunction l(chi);
  boost::math::quadrature::tanh_sinh<double> integrator;
  double c0_error = 0.0;
  const double log_integral = integrator.integrate(
      [&](double sigma) { return std::log(l.evaluate(complex(sigma, 0.0)).value.real()); }, 0.5, 40.0,
      1e-12, &c0_error);
  s1_mean_ = -log_integral / kPi;
  s1_mean_error_ = (c0_error + std::ldexp(2.0, -40) / std::log(2.0)) / kPi + 1e-14;

  // S1(t) = sum_{gamma <= t} (t - gamma) - (1/pi) int_0^t theta, on cells of
  // width ~0.05; theta is smooth so a fixed Gauss rule per cell is exact to
  // rounding.
  const int cells = std::max(200, static_cast<int>(std::ceil(height_ / 0.05)));
  const double h = height_ / cells;
  double theta_integral = 0.0;
  double amplitude = 0.0;
  double s1 = 0.0;
  for (int i = 1; i <= cells; ++i) {
    const double lo = (i - 1) * h;
    const double t = i * h;
    theta_integral += boost::math::quadrature::gauss<double, 7>::integrate(
        [this](double u) { return theta(u); }, lo, t);
    double below = 0.0;
    for (double gamma : g) {
      if (gamma > t) break;
      below += t - gamma;
    }
    s1 = below - theta_integral / kPi;
    if (t >= 0.5 * height_) amplitude = std::max(amplitude, std::abs(s1 - s1_mean_));
  }
  s1_at_height_ = s1;
  fluctuation_ = amplitude;
}

double ZeroCounting::theta(double t) const { return critical_theta(q_, b_, t); }

double ZeroCounting::theta_prime(double t) const { return critical_theta_prime(q_, b_, t); }

ZeroCounting::Estimate ZeroCounting::pair_tail(double a, int k, double scale) const {
  if (k < 1) fail(ErrorCode::domain, "pair_tail: k must be positive");
  auto weight = [a, k, scale](double t) { return 2.0 * std::pow(scale / complex(a, -t), k).real(); };
  boost::math::quadrature::exp_sinh<double> integrator;
  double quad_error = 0.0;
  const double main = integrator.integrate(
      [&](double t) { return weight(t) * theta_prime(t) / kPi; }, height_,
      std::numeric_limits<double>::infinity(), 1e-12, &quad_error);
  const complex z(a, -height_);
  const double w_prime = 2.0 * (complex(0.0, k) * std::pow(scale / z, k) / z).real();
  Estimate e;
  e.value = main - weight(height_) * s_at_height_ + w_prime * (s1_at_height_ - s1_mean_);
  e.error_bound = fluctuation_ * weight_variation(a, k, scale, height_) +
                  std::abs(w_prime) * s1_mean_error_ + quad_error + 1e-16 * std::abs(main);
  return e;
}

double ZeroCounting::pair_majorant(double r, double a, int k) const {
  if (k < 2) fail(ErrorCode::domain, "pair_majorant: k must be at least 2");
  const double kd = k;
  const double qd = static_cast<double>(q_);
  const double two_pi = 2.0 * kPi;
  auto log_phi = [&](double t) { return std::log(2.0) + 0.5 * kd * std::log(r * r / (a * a + t * t)); };
  // Positive-ordinate counting density plus the variation of the error term.
  auto density = [&](double lo, double hi) {
    return std::log(qd * hi / two_pi) / two_pi + 0.5 * kCountC1 / lo;
  };
  const double t0 = std::max(height_, 1.0);
  const double error_at_t0 = kCountC1 * std::log(qd * t0) + kCountC2;
  double total = std::exp(log_phi(t0)) * error_at_t0;
  double t = t0;
  for (int iter = 0; iter < 20000; ++iter) {
    const double dt = (a * a + t * t) / (kd * t);
    total += std::exp(log_phi(t)) * density(t, t + dt) * dt;
    t += dt;
    // phi(u) <= 2 (r/u)^k beyond t.
    const double rem = 2.0 * std::exp(kd * std::log(r) + (1.0 - kd) * std::log(t)) / (kd - 1.0) *
                       ((std::log(qd * t / two_pi) + 1.0 / (kd - 1.0)) / two_pi + 0.5 * kCountC1 / t);
    if (rem == 0.0 || rem < 1e-6 * total) return total + rem;
  }
  fail(ErrorCode::tail, "pair_majorant: tail integral did not settle");
}

}  // namespace lmono
