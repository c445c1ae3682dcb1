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

#include "pqc/circuit.hpp"

namespace pqc {

/// Two-eigenvalue rule: f'(t) = (f(t + π/2) − f(t − π/2)) / 2.
/// Exact only when the generator's canonical D is {0, ±1}; the caller
/// checks that. Uses exactly two evaluations.
double shift_rule_2ev(const UnivariateFunction& f, double t);

struct FourPointResult {
  double derivative_at_zero = 0.0;  // β1 + 2β2
  double beta1 = 0.0;
  double beta2 = 0.0;
};

/// Three evenly spaced eigenvalues (canonical D = {0, ±1, ±2}). Samples f at
/// ±π/4 and ±3π/4, where cos 2s vanishes, so γ2 drops out of the system:
///   β1 = [f(π/4) − f(−π/4) + f(3π/4) − f(−3π/4)] / (2√2)
///   β2 = [f(π/4) − f(−π/4) − f(3π/4) + f(−3π/4)] / 4
FourPointResult four_point_rule_3ev(const UnivariateFunction& f);

/// f'(t) through the four-point rule applied to s ↦ f(t + s).
double four_point_rule_3ev_at(const UnivariateFunction& f, double t);

}  // namespace pqc
