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

#include "pqc/trigmin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace pqc {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxNewtonIterations = 60;
constexpr double kDerivativeTol = 1e-13;

double wrap_period(double s) {
  double r = std::fmod(s, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

// Root of g' in (lo, hi] where g'(lo) < 0 <= g'(hi).
double refine(const TrigPolynomial& p, double lo, double hi, double tol) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < kMaxNewtonIterations; ++it) {
    const double d = p.derivative_normalized(x);
    if (std::abs(d) <= tol) break;
    if (d < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * kTwoPi) break;
    const double curvature = p.second_derivative_normalized(x);
    double next = curvature > 0.0 ? x - d / curvature : lo - 1.0;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    x = next;
  }
  return x;
}

}  // namespace

TrigMinimum minimize_degree1(double a0, double beta, double gamma) {
  const double amplitude = std::hypot(beta, gamma);
  if (amplitude == 0.0) return {0.0, a0, 0};
  // β sin t + γ cos t = r cos(t − φ), φ = atan2(β, γ)
  const double t = wrap_period(std::atan2(beta, gamma) + std::numbers::pi);
  return {t, a0 - amplitude, 1};
}

TrigMinimum minimize_trig(const TrigPolynomial& p) {
  const std::int64_t n = p.max_freq();
  if (n == 0) return {0.0, p.constant_term(), 0};
  if (n == 1) {
    TrigMinimum m =
        minimize_degree1(p.constant_term(), p.sin_coefficient(1), p.cos_coefficient(1));
    m.t_star /= p.alpha;
    return m;
  }

  double scale = 0.0;
  for (std::size_t i = 0; i < p.frequencies.size(); ++i) {
    scale += std::abs(static_cast<double>(p.frequencies[i])) * std::abs(p.coeffs[i]);
  }
  const double tol = kDerivativeTol * std::max(1.0, scale);

  const auto grid = static_cast<std::size_t>(32 * n + 17);
  const double h = kTwoPi / static_cast<double>(grid);
  std::vector<double> slope(grid);
  for (std::size_t i = 0; i < grid; ++i) slope[i] = p.derivative_normalized(h * i);

  std::vector<double> candidates;
  for (std::size_t i = 0; i < grid; ++i) {
    const double here = slope[i];
    const double next = slope[(i + 1) % grid];
    if (here < 0.0 && next >= 0.0) {
      candidates.push_back(wrap_period(refine(p, h * i, h * (i + 1), tol)));
    }
  }
  const std::size_t refined = candidates.size();
  if (candidates.empty()) {
    // numerically flat derivative: fall back to the best grid point
    std::size_t best = 0;
    double best_v = p.value_normalized(0.0);
    for (std::size_t i = 1; i < grid; ++i) {
      const double v = p.value_normalized(h * i);
      if (v < best_v) {
        best_v = v;
        best = i;
      }
    }
    candidates.push_back(h * best);
  }

  double best_s = 0.0;
  double best_v = std::numeric_limits<double>::infinity();
  for (double s : candidates) {
    const double v = p.value_normalized(s);
    const double tie = 1e-12 * (1.0 + std::abs(v));
    if (v < best_v - tie || (std::abs(v - best_v) <= tie && s < best_s)) {
      best_s = s;
      best_v = v;
    }
  }
  return {best_s / p.alpha, best_v, refined};
}

}  // namespace pqc
