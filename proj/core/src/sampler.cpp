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

#include "pqc/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "pqc/error.hpp"

namespace pqc {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<double> outcome_probabilities(const QuantumState& state, const Observable& obs) {
  if (state.dim() != obs.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "state and observable dimensions differ");
  }
  const ComplexMatrix& basis = obs.op().eigenvectors();
  const std::size_t n = obs.dim();
  std::vector<double> probs(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (state.is_pure()) {
      Complex amp = 0.0;
      const auto& psi = state.amplitudes();
      for (std::size_t r = 0; r < n; ++r) amp += std::conj(basis(r, i)) * psi[r];
      probs[i] = std::norm(amp);
    } else {
      const ComplexMatrix& rho = state.density_matrix();
      Complex acc = 0.0;
      for (std::size_t r = 0; r < n; ++r) {
        Complex row = 0.0;
        for (std::size_t c = 0; c < n; ++c) row += rho(r, c) * basis(c, i);
        acc += std::conj(basis(r, i)) * row;
      }
      probs[i] = acc.real();
    }
    probs[i] = std::max(0.0, probs[i]);
  }
  return probs;
}

ShotEstimate sample_outcomes(std::span<const double> values, std::span<const double> probabilities,
                             const ShotConfig& config) {
  if (config.shots == 0) throw Error(ErrorCode::kInvalidArgument, "shots must be at least 1");
  if (values.size() != probabilities.size() || values.empty()) {
    throw Error(ErrorCode::kDimensionMismatch, "outcome values and probabilities differ");
  }
  double mass = 0.0;
  for (double p : probabilities) mass += p;
  if (!(mass > 0.0)) throw Error(ErrorCode::kInvalidArgument, "zero total probability");

  // Multinomial counts as a chain of conditional binomials.
  std::mt19937_64 rng(config.seed);
  std::vector<std::uint64_t> counts(values.size(), 0);
  std::uint64_t remaining = config.shots;
  double remaining_mass = mass;
  for (std::size_t i = 0; i < values.size() && remaining > 0; ++i) {
    if (i + 1 == values.size()) {
      counts[i] = remaining;
      break;
    }
    const double p = std::clamp(probabilities[i] / remaining_mass, 0.0, 1.0);
    std::binomial_distribution<std::uint64_t> draw(remaining, p);
    counts[i] = p > 0.0 ? draw(rng) : 0;
    remaining -= counts[i];
    remaining_mass -= probabilities[i];
    if (remaining_mass <= 0.0) {
      // leftover shots go to the last outcome with nonzero mass
      for (std::size_t j = i + 1; j-- > 0;) {
        if (probabilities[j] > 0.0) {
          counts[j] += remaining;
          break;
        }
      }
      remaining = 0;
    }
  }

  const double shots = static_cast<double>(config.shots);
  double mean = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    mean += static_cast<double>(counts[i]) * values[i];
  }
  mean /= shots;
  ShotEstimate out{mean, 0.0};
  if (config.shots > 1) {
    double ss = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double dev = values[i] - mean;
      ss += static_cast<double>(counts[i]) * dev * dev;
    }
    out.standard_error = std::sqrt(ss / (shots - 1.0) / shots);
  }
  return out;
}

ShotEstimate sample_expectation(const ParameterizedCircuit& circuit, std::span<const double> theta,
                                const QuantumState& state, const Observable& obs,
                                const ShotConfig& config) {
  if (obs.dim() != circuit.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "observable dimension does not match circuit");
  }
  const QuantumState out = run_circuit(circuit, theta, state);
  const auto probs = outcome_probabilities(out, obs);
  return sample_outcomes(obs.op().eigenvalues(), probs, config);
}

Objective make_sampled_objective(const ParameterizedCircuit& circuit, const QuantumState& state,
                                 const Observable& obs, const ShotConfig& config) {
  auto c = std::make_shared<const ParameterizedCircuit>(circuit);
  auto s = std::make_shared<const QuantumState>(state);
  auto o = std::make_shared<const Observable>(obs);
  auto calls = std::make_shared<std::uint64_t>(0);
  return [c, s, o, calls, config](std::span<const double> theta) {
    ShotConfig call = config;
    call.seed = splitmix64(config.seed ^ splitmix64(++*calls));
    return sample_expectation(*c, theta, *s, *o, call).estimate;
  };
}

}  // namespace pqc
