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
#include <optional>
#include <span>
#include <vector>

#include "pqc/circuit.hpp"
#include "pqc/linalg.hpp"
#include "pqc/spectrum.hpp"

namespace pqc {

/// Finite Fourier series f(t) = Σ_{k∈D} c_k e^{ikαt}.
///
/// Coefficients use the convention c_k = f̂(k)/√(2π), so evaluation and
/// differentiation carry no normalization factors. `alpha` maps the integer
/// frequency axis back to the caller's parameter axis: with s = αt the
/// series is an ordinary 2π-periodic trigonometric polynomial in s.
/// The real form f = a0 + Σ β_k sin(ks) + γ_k cos(ks) is recovered as
/// a0 = c_0, γ_k = 2 Re c_k, β_k = −2 Im c_k.
struct TrigPolynomial {
  std::vector<std::int64_t> frequencies;  // ascending
  std::vector<Complex> coeffs;            // parallel to `frequencies`
  double alpha = 1.0;

  Complex coefficient(std::int64_t k) const;
  std::int64_t max_freq() const;

  double constant_term() const { return coefficient(0).real(); }
  double cos_coefficient(std::int64_t k) const { return 2.0 * coefficient(k).real(); }
  double sin_coefficient(std::int64_t k) const { return -2.0 * coefficient(k).imag(); }

  /// Value and derivative on the normalized axis s.
  double value_normalized(double s) const;
  double derivative_normalized(double s) const;
  double second_derivative_normalized(double s) const;

  /// Period on the caller's axis, 2π/α.
  double period() const;
};

/// Re Σ c_k e^{ikαt}; throws ImaginaryResidual past 1e−9.
double eval_trig(const TrigPolynomial& p, double t);
/// α · Re Σ ik c_k e^{ikαt}, i.e. f'(t) = α g'(αt).
double derivative_trig(const TrigPolynomial& p, double t);

/// c_k ← (c_k + conj(c_{−k}))/2 on a symmetric frequency set.
void symmetrize(TrigPolynomial& p);

struct Reconstruction {
  TrigPolynomial poly;
  std::vector<double> points;  // normalized sample points s_j
  std::size_t samples_used = 0;  // calls made to the evaluator
  double condition = 0.0;
  bool ill_conditioned = false;
  bool aliasing_fallback = false;
  std::size_t redraws = 0;
};

/// Solves for every frequency in [−max_freq, max_freq] from 2·max_freq+1
/// distinct normalized points in [0, 2π). f is sampled at t = s/alpha.
Reconstruction reconstruct_generic(const UnivariateFunction& f, std::int64_t max_freq,
                                   std::span<const double> points, double alpha = 1.0);

/// s_j = 2π(a + j)/count, j = 0..count−1.
std::vector<double> equispaced_points(std::size_t count, std::int64_t offset = 0);

/// |D| samples at s_j = 2π(a + j)/|D|, solved in the basis z_k^{a+j},
/// z_k = e^{2πik/|D|}. When D is not injective modulo |D| the system is
/// singular; the reconstruction then falls back to 2·max_freq+1 equispaced
/// points and sets `aliasing_fallback`. A known f(0) can be supplied to save
/// the evaluation at s = 0 when the offset puts a sample there.
Reconstruction reconstruct_equidistant(const UnivariateFunction& f, const FrequencySet& freqs,
                                       std::int64_t offset = 0,
                                       std::optional<double> value_at_zero = std::nullopt);

inline constexpr std::size_t kMaxRedraws = 16;

/// |D| points drawn i.i.d. uniform on [0, 2π) from a seeded generator. A draw
/// whose system has condition ≥ 1e8 is replaced before f is evaluated;
/// throws PersistentIllConditioning after kMaxRedraws replacements.
Reconstruction reconstruct_random(const UnivariateFunction& f, const FrequencySet& freqs,
                                  std::uint64_t seed);

/// The |D|×|D| system matrix F_{j,ℓ} = e^{i k_ℓ s_j}.
ComplexMatrix fourier_matrix(std::span<const std::int64_t> frequencies,
                             std::span<const double> points);

}  // namespace pqc
