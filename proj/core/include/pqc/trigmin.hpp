// Copyright 2026 The pqcalc Authors
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

#include <cstddef>

#include "pqc/fourier.hpp"

namespace pqc {

struct TrigMinimum {
  double t_star = 0.0;
  double value = 0.0;
  // Local-minimum candidates refined (at most max_freq of them).
  std::size_t candidates = 0;
};

/// Global minimum of a0 + β sin t + γ cos t over [0, 2π): the value is
/// a0 − √(β² + γ²), attained at atan2(β, γ) + π. A constant returns (0, a0).
TrigMinimum minimize_degree1(double a0, double beta, double gamma);

/// Global minimum over one period of a real trigonometric polynomial.
///
/// Degree 1 goes through the closed form. Otherwise the derivative is
/// scanned at 32·n + 17 equispaced points (n = max frequency), every sign
/// change from − to + brackets a local minimum, each bracket is refined by
/// Newton on f' with bisection fallback, and the lowest candidate wins; ties
/// go to the smallest t. `t_star` is on the caller's axis, in [0, 2π/α).
TrigMinimum minimize_trig(const TrigPolynomial& p);

}  // namespace pqc
