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

#include <cmath>
#include <complex>

namespace lmono {

// Neumaier variant of Kahan summation; also tracks sum of magnitudes so
// callers can size a rounding bound.
struct KahanSum {
  double sum = 0.0;
  double compensation = 0.0;
  double magnitude = 0.0;

  void add(double value) {
    const double t = sum + value;
    if (std::abs(sum) >= std::abs(value)) {
      compensation += (sum - t) + value;
    } else {
      compensation += (value - t) + sum;
    }
    sum = t;
    magnitude += std::abs(value);
  }
  KahanSum& operator+=(double value) {
    add(value);
    return *this;
  }
  double value() const { return sum + compensation; }
};

struct ComplexKahanSum {
  KahanSum re;
  KahanSum im;

  ComplexKahanSum& operator+=(std::complex<double> value) {
    re.add(value.real());
    im.add(value.imag());
    return *this;
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
  double magnitude() const { return re.magnitude + im.magnitude; }
};

}  // namespace lmono
