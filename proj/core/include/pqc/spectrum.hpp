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
#include "pqc/linalg.hpp"

namespace pqc {

struct SpectrumOptions {
  // Relative to the spectral range (or max |value| for rationalize()).
  double tol = 1e-9;
  std::int64_t max_denominator = 1'000'000;
};

struct Rationalization {
  double alpha = 1.0;
  std::vector<std::int64_t> integers;
};

/// Finds alpha > 0 and integers k_j with |v_j − alpha·k_j| ≤ tol·max|v|.
///
/// Each ratio v_j / max|v| is matched by continued-fraction convergents; the
/// common denominator is the lcm of the per-value denominators. A match is
/// only accepted when the denominator stays below both `max_denominator` and
/// roughly 0.128/sqrt(tol) (about 4000 at tol = 1e-9). Without the second
/// bound nearly every real number has a convergent inside the tolerance
/// window; with it, fewer than 1% of irrational ratios slip through. Throws
/// NotCommensurable when no scale qualifies.
Rationalization rationalize(std::span<const double> values, double tol,
                            std::int64_t max_denominator);

/// Canonical integer picture of a generator spectrum: eigenvalues
/// λ_j = alpha·k_j + shift with min level 0 and gcd of level differences 1.
struct FrequencySet {
  double alpha = 1.0;
  std::vector<std::int64_t> levels;       // per eigenvalue, ascending, with multiplicity
  std::vector<std::int64_t> differences;  // D, ascending, symmetric, contains 0

  std::int64_t max_freq() const { return differences.empty() ? 0 : differences.back(); }
  std::size_t size() const noexcept { return differences.size(); }
  bool trivial() const noexcept { return differences.size() <= 1; }
  bool contains(std::int64_t k) const;
  /// True when the residues of D modulo `modulus` are pairwise distinct.
  bool injective_mod(std::int64_t modulus) const;
};

FrequencySet frequencies_from_levels(double alpha, std::vector<std::int64_t> levels);

FrequencySet difference_set(std::span<const double> eigenvalues, const SpectrumOptions& opts = {});
FrequencySet difference_set(const HermitianOperator& h, const SpectrumOptions& opts = {});

/// Frequency support of a product of exponentials sharing one parameter:
/// scales are brought to a common alpha, then levels add (Minkowski sum of
/// the difference sets).
FrequencySet combine(std::span<const FrequencySet> parts, const SpectrumOptions& opts = {});

/// Frequency support of θ_param ↦ F(θ) for the given circuit.
FrequencySet parameter_frequencies(const ParameterizedCircuit& circuit, std::size_t param,
                                   const SpectrumOptions& opts = {});

}  // namespace pqc
