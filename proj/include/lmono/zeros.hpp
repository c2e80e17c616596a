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

#include <filesystem>
#include <string>
#include <vector>

#include "lmono/lfunction.hpp"

namespace lmono {

enum class ZeroOrigin { scanned, ingested, synthetic };

const char* origin_name(ZeroOrigin origin);

/// Ordinates gamma_1 < gamma_2 < ... of zeros 1/2 + i gamma on the critical
/// line, up to covered_height.
struct ZeroList {
  long long discriminant = 0;
  std::vector<double> ordinates;
  double per_zero_error = 0.0;
  double covered_height = 0.0;
  ZeroOrigin origin = ZeroOrigin::scanned;
  // Set only after count_check agrees with the list.
  bool complete = false;
};

/// Hypothetical zeros with Im >= 0 (conjugates implied). A zero with
/// Im == 0 is a real zero such as a Siegel zero.
struct SyntheticZeroSet {
  std::vector<complex> zeros;

  void validate() const;
};

// Anti-skip spacing pi / log(qT/(2 pi) + 4).
double max_scan_step(long long modulus, double height);

ZeroList scan_zeros(const LFunction& l, double height, double step);

struct CountReport {
  double expected = 0.0;
  long long found = 0;
  bool pass = false;
  double contour_height = 0.0;
  bool nudged = false;
};

/// Argument-principle count of zeros with 0 < gamma <= T, compared with the
/// list. The top edge is moved by 1e-2 if it passes within 1e-3 of a zero.
CountReport count_check(const LFunction& l, const ZeroList& zeros);

// Runs count_check and sets the completeness flag when it passes.
CountReport verify_zero_list(const LFunction& l, ZeroList& zeros);

struct RealSegmentReport {
  bool positive = false;
  double min_value = 0.0;
  double min_sigma = 0.0;
};

// Samples L(sigma) on (0, 1]; no real zero there means no sign change.
RealSegmentReport check_real_segment(const LFunction& l);

double lowest_zero(const ZeroList& zeros);
double lowest_zero(const SyntheticZeroSet& zeros);

struct BConstant {
  double value = 0.0;
  double partial = 0.0;
  double tail_estimate = 0.0;
  double error_bound = 0.0;
};

// B(chi) = -sum_rho 1/rho, stored zeros plus a counting-density tail.
BConstant b_constant(const ZeroList& zeros);
BConstant b_constant(const SyntheticZeroSet& zeros);

void store_zeros(const ZeroList& zeros, const std::filesystem::path& path);
ZeroList load_zeros(const std::filesystem::path& path);
// load_zeros for externally produced files: origin becomes ingested and the
// completeness flag is left for verify_zero_list.
ZeroList ingest_zeros(const std::filesystem::path& path);

/// Zero-counting data for the zeros above a list's covered height T.
/// N(t) = theta(t)/pi + S(t); S(T) is known exactly from the list and the
/// oscillation of its running integral on [T/2, T] sizes the error of
/// density-based tail estimates.
// Counting model for ordinates above the covered height T. With
// S(t) = N(t) - theta(t)/pi and S1(t) = int_0^t S, the tail of a smooth
// weight w is int_T^inf w theta'/pi - w(T) S(T) + w'(T) (S1(T) - c0) plus
// int_T^inf w'' (S1 - c0), where c0 = -(1/pi) int_{1/2}^inf log L(sigma) is
// the mean level of S1. The last integral is bounded with the largest
// |S1 - c0| seen on [T/2, T].
class ZeroCounting {
 public:
  ZeroCounting(const RealCharacter& chi, const ZeroList& zeros);

  double height() const { return height_; }
  long long count() const { return count_; }
  double s_at_height() const { return s_at_height_; }
  double s1_at_height() const { return s1_at_height_; }
  double s1_mean() const { return s1_mean_; }
  double fluctuation() const { return fluctuation_; }

  double theta(double t) const;
  double theta_prime(double t) const;

  struct Estimate {
    double value = 0.0;
    double error_bound = 0.0;
  };

  // sum over gamma > T of 2 Re (scale / (a - i gamma))^k.
  Estimate pair_tail(double a, int k, double scale = 1.0) const;

  // Upper bound for sum over gamma > T of 2 (r^2/(a^2 + gamma^2))^(k/2),
  // k >= 2, from an explicit zero-counting error term.
  double pair_majorant(double r, double a, int k) const;

 private:
  long long q_;
  int b_;
  double height_;
  long long count_ = 0;
  double s_at_height_ = 0.0;
  double s1_at_height_ = 0.0;
  double s1_mean_ = 0.0;
  double s1_mean_error_ = 0.0;
  double fluctuation_ = 0.0;
};

}  // namespace lmono
