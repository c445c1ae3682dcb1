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

#include "pqc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <string>

#include "pqc/error.hpp"

namespace pqc {
namespace {

constexpr double kFalseMatchRate = 0.01;

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// First continued-fraction convergent of x within tol, or nullopt once the
// denominator passes max_den.
std::optional<Fraction> convergent_within(double x, double tol, std::int64_t max_den) {
  const bool negative = x < 0.0;
  long double y = std::abs(static_cast<long double>(x));
  const long double target = y;
  std::int64_t prev_num = 0, prev_den = 1;
  std::int64_t num = 1, den = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const long double term_f = std::floor(y);
    if (term_f > static_cast<long double>(max_den) * 4.0L + 4.0L) break;
    const auto term = static_cast<std::int64_t>(term_f);
    const std::int64_t next_num = term * num + prev_num;
    const std::int64_t next_den = term * den + prev_den;
    if (next_den > max_den) break;
    prev_num = num;
    prev_den = den;
    num = next_num;
    den = next_den;
    const long double approx = static_cast<long double>(num) / static_cast<long double>(den);
    if (std::abs(approx - target) <= tol) {
      return Fraction{negative ? -num : num, den};
    }
    const long double frac = y - term_f;
    if (frac <= 0.0L) break;
    y = 1.0L / frac;
  }
  return std::nullopt;
}

std::int64_t gcd_of(std::span<const std::int64_t> values) {
  std::int64_t g = 0;
  for (auto v : values) g = std::gcd(g, v);
  return g;
}

std::vector<std::int64_t> difference_values(std::vector<std::int64_t> distinct_levels) {
  std::sort(distinct_levels.begin(), distinct_levels.end());
  distinct_levels.erase(std::unique(distinct_levels.begin(), distinct_levels.end()),
                        distinct_levels.end());
  std::vector<std::int64_t> d;
  d.reserve(distinct_levels.size() * distinct_levels.size());
  for (auto a : distinct_levels) {
    for (auto b : distinct_levels) d.push_back(a - b);
  }
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

}  // namespace

Rationalization rationalize(std::span<const double> values, double tol,
                            std::int64_t max_denominator) {
  if (!(tol > 0.0)) throw Error(ErrorCode::kInvalidArgument, "tol must be positive");
  if (max_denominator < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_denominator must be at least 1");
  }
  double ref = 0.0;
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "non-finite value");
    ref = std::max(ref, std::abs(v));
  }
  if (ref == 0.0) throw Error(ErrorCode::kInvalidArgument, "all values are zero");

  // Fractions p/q with q <= Q cover about (6/pi^2)·Q²·tol of [0, 1] once each
  // is widened by ±tol. Keeping that below kFalseMatchRate bounds how often
  // an irrational ratio is mistaken for a rational one.
  const double q_bound =
      std::sqrt(kFalseMatchRate * std::numbers::pi * std::numbers::pi / (6.0 * tol));
  const auto unambiguous = static_cast<std::int64_t>(std::floor(q_bound));
  const std::int64_t cap = std::max<std::int64_t>(1, std::min(max_denominator, unambiguous));

  std::vector<Fraction> fracs;
  fracs.reserve(values.size());
  std::int64_t common = 1;
  for (double v : values) {
    const auto f = convergent_within(v / ref, tol, cap);
    if (!f) {
      throw Error(ErrorCode::kNotCommensurable,
                  "ratio " + std::to_string(v / ref) +
                      " has no rational approximation with denominator <= " +
                      std::to_string(cap));
    }
    common = std::lcm(common, f->den);
    if (common > cap) {
      throw Error(ErrorCode::kNotCommensurable,
                  "common denominator exceeds " + std::to_string(cap));
    }
    fracs.push_back(*f);
  }

  Rationalization out;
  out.alpha = ref / static_cast<double>(common);
  out.integers.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::int64_t k = fracs[i].num * (common / fracs[i].den);
    if (std::abs(values[i] - out.alpha * static_cast<double>(k)) > tol * ref) {
      throw Error(ErrorCode::kNotCommensurable, "rounded scale misses value " +
                                                    std::to_string(values[i]));
    }
    out.integers.push_back(k);
  }
  return out;
}

bool FrequencySet::contains(std::int64_t k) const {
  return std::binary_search(differences.begin(), differences.end(), k);
}

bool FrequencySet::injective_mod(std::int64_t modulus) const {
  if (modulus <= 0) return false;
  std::vector<std::int64_t> residues;
  residues.reserve(differences.size());
  for (auto d : differences) residues.push_back(((d % modulus) + modulus) % modulus);
  std::sort(residues.begin(), residues.end());
  return std::adjacent_find(residues.begin(), residues.end()) == residues.end();
}

FrequencySet frequencies_from_levels(double alpha, std::vector<std::int64_t> levels) {
  if (levels.empty()) throw Error(ErrorCode::kInvalidArgument, "no levels");
  std::sort(levels.begin(), levels.end());
  const std::int64_t base = levels.front();
  for (auto& k : levels) k -= base;
  FrequencySet out;
  const std::int64_t g = gcd_of(levels);
  if (g == 0) {
    out.alpha = 1.0;
    out.levels = std::move(levels);
    out.differences = {0};
    return out;
  }
  for (auto& k : levels) k /= g;
  out.alpha = alpha * static_cast<double>(g);
  out.differences = difference_values(levels);
  out.levels = std::move(levels);
  return out;
}

FrequencySet difference_set(std::span<const double> eigenvalues, const SpectrumOptions& opts) {
  if (eigenvalues.empty()) throw Error(ErrorCode::kInvalidArgument, "no eigenvalues");
  std::vector<double> sorted(eigenvalues.begin(), eigenvalues.end());
  std::sort(sorted.begin(), sorted.end());
  const double range = sorted.back() - sorted.front();
  if (range == 0.0) return frequencies_from_levels(1.0, std::vector<std::int64_t>(sorted.size(), 0));

  // Merge eigenvalues closer than tol·range; a cluster is represented by its
  // mean, shifted so the smallest cluster sits at 0.
  const double merge = opts.tol * range;
  std::vector<std::size_t> cluster_of(sorted.size());
  std::vector<double> centers;
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || sorted[i] - sorted[i - 1] > merge) {
      centers.push_back(0.0);
      counts.push_back(0);
    }
    centers.back() += sorted[i];
    counts.back() += 1;
    cluster_of[i] = centers.size() - 1;
  }
  for (std::size_t c = 0; c < centers.size(); ++c) centers[c] /= static_cast<double>(counts[c]);
  if (centers.size() == 1) {
    return frequencies_from_levels(1.0, std::vector<std::int64_t>(sorted.size(), 0));
  }
  const double shift = centers.front();
  for (auto& c : centers) c -= shift;

  const Rationalization r = rationalize(centers, opts.tol, opts.max_denominator);
  std::vector<std::int64_t> levels(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) levels[i] = r.integers[cluster_of[i]];
  return frequencies_from_levels(r.alpha, std::move(levels));
}

FrequencySet difference_set(const HermitianOperator& h, const SpectrumOptions& opts) {
  return difference_set(h.eigenvalues(), opts);
}

FrequencySet combine(std::span<const FrequencySet> parts, const SpectrumOptions& opts) {
  std::vector<const FrequencySet*> active;
  for (const auto& p : parts) {
    if (!p.trivial()) active.push_back(&p);
  }
  if (active.empty()) return frequencies_from_levels(1.0, {0});
  if (active.size() == 1) return *active.front();

  std::vector<double> scales;
  for (const auto* p : active) scales.push_back(p->alpha);
  const Rationalization r = rationalize(scales, opts.tol, opts.max_denominator);

  std::vector<std::int64_t> sums = {0};
  for (std::size_t i = 0; i < active.size(); ++i) {
    std::vector<std::int64_t> distinct = active[i]->levels;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::int64_t> next;
    next.reserve(sums.size() * distinct.size());
    for (auto s : sums) {
      for (auto k : distinct) next.push_back(s + r.integers[i] * k);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sums = std::move(next);
  }
  return frequencies_from_levels(r.alpha, std::move(sums));
}

FrequencySet parameter_frequencies(const ParameterizedCircuit& circuit, std::size_t param,
                                   const SpectrumOptions& opts) {
  std::vector<FrequencySet> parts;
  for (const auto* g : circuit.generators_for(param)) parts.push_back(difference_set(*g, opts));
  if (parts.size() == 1) return parts.front();
  return combine(parts, opts);
}

}  // namespace pqc
