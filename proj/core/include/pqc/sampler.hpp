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

namespace pqc {

struct ShotConfig {
  std::size_t shots = 1000;
  std::uint64_t seed = 0;
};

struct ShotEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;  // sample standard deviation / √shots
};

/// Outcome probabilities ⟨e_i|ρ|e_i⟩ over the eigenbasis of `obs`, parallel
/// to obs.op().eigenvalues().
std::vector<double> outcome_probabilities(const QuantumState& state, const Observable& obs);

/// Draws `shots` outcomes from (values, probabilities) and returns the sample
/// mean and its standard error.
ShotEstimate sample_outcomes(std::span<const double> values, std::span<const double> probabilities,
                             const ShotConfig& config);

/// Projective measurement of the whole observable after running the circuit.
/// Unbiased for expectation(circuit, theta, state, obs).
ShotEstimate sample_expectation(const ParameterizedCircuit& circuit, std::span<const double> theta,
                                const QuantumState& state, const Observable& obs,
                                const ShotConfig& config);

/// Objective whose every call is an independent shot estimate. Call n uses
/// a stream seeded from (config.seed, n), so a fixed call order reproduces
/// the same values. Not safe to share across threads.
Objective make_sampled_objective(const ParameterizedCircuit& circuit, const QuantumState& state,
                                 const Observable& obs, const ShotConfig& config);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace pqc
