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
#include <cstdint>
#include <span>
#include <vector>

#include "pqc/circuit.hpp"
#include "pqc/spectrum.hpp"

namespace pqc {

enum class DerivativeMethod {
  kFourier,  // |D| equidistant samples, derivative of the reconstructed series
  kShift2,   // two-point rule, needs D = {0, ±1}
  kShift4,   // four-point rule, needs D = {0, ±1, ±2}
};

struct PartialDerivative {
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// ∂F/∂θ_param at `theta` on the caller's axis. The rules run on the
/// normalized axis s = αt and are mapped back with f'(t) = α g'(αt).
/// Throws InvalidArgument when a shift rule is requested for a parameter
/// whose frequency set does not match it. A trivial D gives 0 without
/// evaluating F.
PartialDerivative partial_derivative(const Objective& objective, std::span<const double> theta,
                                     std::size_t param, const FrequencySet& freqs,
                                     DerivativeMethod method);

struct Gradient {
  std::vector<double> values;
  std::size_t evaluations = 0;
};

Gradient gradient(const Objective& objective, std::span<const double> theta,
                  std::span<const FrequencySet> freqs, DerivativeMethod method);

/// True when the frequency set equals {−n, …, n}.
bool is_contiguous_window(const FrequencySet& freqs, std::int64_t n);

}  // namespace pqc
