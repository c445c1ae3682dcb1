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

#include "pqc/shiftrules.hpp"

#include <cmath>
#include <numbers>

namespace pqc {

double shift_rule_2ev(const UnivariateFunction& f, double t) {
  constexpr double kShift = std::numbers::pi / 2.0;
  return 0.5 * (f(t + kShift) - f(t - kShift));
}

FourPointResult four_point_rule_3ev(const UnivariateFunction& f) {
  constexpr double kQuarter = std::numbers::pi / 4.0;
  const double fp1 = f(kQuarter);
  const double fm1 = f(-kQuarter);
  const double fp3 = f(3.0 * kQuarter);
  const double fm3 = f(-3.0 * kQuarter);

  FourPointResult r;
  r.beta1 = (fp1 - fm1 + fp3 - fm3) / (2.0 * std::numbers::sqrt2);
  r.beta2 = (fp1 - fm1 - fp3 + fm3) / 4.0;
  r.derivative_at_zero = r.beta1 + 2.0 * r.beta2;
  return r;
}

double four_point_rule_3ev_at(const UnivariateFunction& f, double t) {
  return four_point_rule_3ev([&f, t](double s) { return f(t + s); }).derivative_at_zero;
}

}  // namespace pqc
