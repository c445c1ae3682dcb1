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

#include "pqc/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "pqc/error.hpp"

namespace pqc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

Complex TrigPolynomial::coefficient(std::int64_t k) const {
  const auto it = std::lower_bound(frequencies.begin(), frequencies.end(), k);
  if (it == frequencies.end() || *it != k) return 0.0;
  return coeffs[static_cast<std::size_t>(it - frequencies.begin())];
}

std::int64_t TrigPolynomial::max_freq() const {
  std::int64_t m = 0;
  for (auto k : frequencies) m = std::max(m, std::abs(k));
  return m;
}

double TrigPolynomial::value_normalized(double s) const {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    acc += coeffs[i] * std::polar(1.0, static_cast<double>(frequencies[i]) * s);
  }
  if (std::abs(acc.imag()) > 1e-9 * (1.0 + std::abs(acc.real()))) {
    throw Error(ErrorCode::kImaginaryResidual,
                "trigonometric polynomial is not real-valued (" + std::to_string(acc.imag()) +
                    ")");
  }
  return acc.real();
}

double TrigPolynomial::derivative_normalized(double s) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    const double k = static_cast<double>(frequencies[i]);
    // Re(ik c e^{iks})
    acc += (Complex{0.0, k} * coeffs[i] * std::polar(1.0, k * s)).real();
  }
  return acc;
}

double TrigPolynomial::second_derivative_normalized(double s) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    const double k = static_cast<double>(frequencies[i]);
    acc += (-k * k * coeffs[i] * std::polar(1.0, k * s)).real();
  }
  return acc;
}

double TrigPolynomial::period() const { return kTwoPi / alpha; }

double eval_trig(const TrigPolynomial& p, double t) { return p.value_normalized(p.alpha * t); }

double derivative_trig(const TrigPolynomial& p, double t) {
  return p.alpha * p.derivative_normalized(p.alpha * t);
}

void symmetrize(TrigPolynomial& p) {
  std::vector<Complex> out(p.coeffs.size());
  for (std::size_t i = 0; i < p.frequencies.size(); ++i) {
    const Complex mirror = p.coefficient(-p.frequencies[i]);
    out[i] = 0.5 * (p.coeffs[i] + std::conj(mirror));
  }
  p.coeffs = std::move(out);
}

ComplexMatrix fourier_matrix(std::span<const std::int64_t> frequencies,
                             std::span<const double> points) {
  if (frequencies.size() != points.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "need as many points as frequencies");
  }
  ComplexMatrix a(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t l = 0; l < frequencies.size(); ++l) {
      a(j, l) = std::polar(1.0, static_cast<double>(frequencies[l]) * points[j]);
    }
  }
  return a;
}

namespace {

Reconstruction solve_series(const UnivariateFunction& f, std::vector<std::int64_t> frequencies,
                            std::vector<double> points, double alpha,
                            std::optional<double> value_at_zero) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must be positive");
  }
  const ComplexMatrix a = fourier_matrix(frequencies, points);
  Reconstruction out;
  ComplexVector y(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (value_at_zero && points[j] == 0.0) {
      y[j] = *value_at_zero;
      continue;
    }
    y[j] = f(points[j] / alpha);
    ++out.samples_used;
  }
  LinearSolution sol = solve_linear(a, y);
  out.condition = sol.cond_estimate;
  out.ill_conditioned = sol.ill_conditioned;
  out.poly.frequencies = std::move(frequencies);
  out.poly.coeffs = std::move(sol.x);
  out.poly.alpha = alpha;
  symmetrize(out.poly);
  out.points = std::move(points);
  return out;
}

std::vector<std::int64_t> full_window(std::int64_t max_freq) {
  std::vector<std::int64_t> ks;
  for (std::int64_t k = -max_freq; k <= max_freq; ++k) ks.push_back(k);
  return ks;
}

void check_canonical(const FrequencySet& freqs) {
  if (freqs.differences.empty() || !freqs.contains(0)) {
    throw Error(ErrorCode::kInvalidArgument, "frequency set must contain 0");
  }
  for (auto k : freqs.differences) {
    if (!freqs.contains(-k)) {
      throw Error(ErrorCode::kInvalidArgument, "frequency set must be symmetric");
    }
  }
}

}  // namespace

Reconstruction reconstruct_generic(const UnivariateFunction& f, std::int64_t max_freq,
                                   std::span<const double> points, double alpha) {
  if (max_freq < 0) throw Error(ErrorCode::kInvalidArgument, "negative max_freq");
  const auto expected = static_cast<std::size_t>(2 * max_freq + 1);
  if (points.size() != expected) {
    throw Error(ErrorCode::kInvalidArgument, "need exactly " + std::to_string(expected) +
                                                 " points, got " +
                                                 std::to_string(points.size()));
  }
  std::vector<double> sorted(points.begin(), points.end());
  for (double s : sorted) {
    if (!(s >= 0.0 && s < kTwoPi)) {
      throw Error(ErrorCode::kInvalidArgument, "sample points must lie in [0, 2pi)");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double gap = i + 1 < sorted.size() ? sorted[i + 1] - sorted[i]
                                             : sorted.front() + kTwoPi - sorted.back();
    if (sorted.size() > 1 && gap <= 1e-12) {
      throw Error(ErrorCode::kDuplicatePoints, "sample points closer than 1e-12");
    }
  }
  return solve_series(f, full_window(max_freq), std::vector<double>(points.begin(), points.end()),
                      alpha, std::nullopt);
}

std::vector<double> equispaced_points(std::size_t count, std::int64_t offset) {
  std::vector<double> pts(count);
  const auto n = static_cast<std::int64_t>(count);
  for (std::size_t j = 0; j < count; ++j) {
    // reduce a + j modulo count so the points stay in [0, 2π)
    const std::int64_t r = ((offset + static_cast<std::int64_t>(j)) % n + n) % n;
    pts[j] = kTwoPi * static_cast<double>(r) / static_cast<double>(n);
  }
  return pts;
}

Reconstruction reconstruct_equidistant(const UnivariateFunction& f, const FrequencySet& freqs,
                                       std::int64_t offset, std::optional<double> value_at_zero) {
  check_canonical(freqs);
  const std::size_t s = freqs.size();
  if (freqs.injective_mod(static_cast<std::int64_t>(s))) {
    return solve_series(f, freqs.differences, equispaced_points(s, offset), freqs.alpha,
                        value_at_zero);
  }
  const std::int64_t n = freqs.max_freq();
  Reconstruction out = solve_series(f, full_window(n),
                                    equispaced_points(static_cast<std::size_t>(2 * n + 1), offset),
                                    freqs.alpha, value_at_zero);
  // keep the support on D; the dropped coefficients vanish for f supported in D
  TrigPolynomial projected;
  projected.alpha = out.poly.alpha;
  projected.frequencies = freqs.differences;
  for (auto k : freqs.differences) projected.coeffs.push_back(out.poly.coefficient(k));
  out.poly = std::move(projected);
  out.aliasing_fallback = true;
  return out;
}

Reconstruction reconstruct_random(const UnivariateFunction& f, const FrequencySet& freqs,
                                  std::uint64_t seed) {
  check_canonical(freqs);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  const std::size_t s = freqs.size();
  for (std::size_t attempt = 0; attempt <= kMaxRedraws; ++attempt) {
    std::vector<double> points(s);
    for (auto& p : points) p = angle(rng);
    const double cond = condition_number(fourier_matrix(freqs.differences, points));
    if (!(cond < kIllConditionedThreshold)) continue;
    Reconstruction out = solve_series(f, freqs.differences, std::move(points), freqs.alpha,
                                      std::nullopt);
    out.redraws = attempt;
    return out;
  }
  throw Error(ErrorCode::kPersistentIllConditioning,
              "random sample points stayed ill-conditioned after " +
                  std::to_string(kMaxRedraws) + " redraws");
}

}  // namespace pqc
