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

#include "pqc/gradient.hpp"

#include <string>

#include "pqc/error.hpp"
#include "pqc/fourier.hpp"
#include "pqc/shiftrules.hpp"

namespace pqc {

bool is_contiguous_window(const FrequencySet& freqs, std::int64_t n) {
  if (freqs.differences.size() != static_cast<std::size_t>(2 * n + 1)) return false;
  for (std::int64_t k = -n; k <= n; ++k) {
    if (freqs.differences[static_cast<std::size_t>(k + n)] != k) return false;
  }
  return true;
}

PartialDerivative partial_derivative(const Objective& objective, std::span<const double> theta,
                                     std::size_t param, const FrequencySet& freqs,
                                     DerivativeMethod method) {
  if (freqs.trivial()) return {0.0, 0};
  std::size_t calls = 0;
  const UnivariateFunction f = restrict(objective, theta, param);
  const double alpha = freqs.alpha;
  const UnivariateFunction g = [&](double s) {
    ++calls;
    return f(s / alpha);
  };

  switch (method) {
    case DerivativeMethod::kShift2:
      if (!is_contiguous_window(freqs, 1)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "two-point shift rule needs D = {0, +-1} for parameter " +
                        std::to_string(param + 1));
      }
      return {alpha * shift_rule_2ev(g, 0.0), calls};
    case DerivativeMethod::kShift4:
      if (!is_contiguous_window(freqs, 2)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "four-point rule needs D = {0, +-1, +-2} for parameter " +
                        std::to_string(param + 1));
      }
      return {alpha * four_point_rule_3ev(g).derivative_at_zero, calls};
    case DerivativeMethod::kFourier: {
      const Reconstruction r = reconstruct_equidistant(f, freqs);
      return {derivative_trig(r.poly, 0.0), r.samples_used};
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown derivative method");
}

Gradient gradient(const Objective& objective, std::span<const double> theta,
                  std::span<const FrequencySet> freqs, DerivativeMethod method) {
  if (freqs.size() != theta.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one frequency set per parameter is required");
  }
  Gradient out;
  out.values.reserve(theta.size());
  for (std::size_t j = 0; j < theta.size(); ++j) {
    const PartialDerivative d = partial_derivative(objective, theta, j, freqs[j], method);
    out.values.push_back(d.value);
    out.evaluations += d.evaluations;
  }
  return out;
}

}  // namespace pqc
