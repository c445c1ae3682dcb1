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
#include <string_view>
#include <vector>

#include "pqc/circuit.hpp"
#include "pqc/fourier.hpp"
#include "pqc/spectrum.hpp"

namespace pqc {

enum class ReconstructionMethod { kEquidistant, kRandom };

struct TrainerConfig {
  std::size_t max_sweeps = 100;
  // Training stops once a full sweep lowers the energy by less than this.
  double improvement_tol = 1e-8;
  ReconstructionMethod reconstruction = ReconstructionMethod::kEquidistant;
  std::uint64_t seed = 0;     // random reconstruction only
  std::int64_t offset = 0;    // equidistant offset a
  // Use the known current energy as the sample at t = 0. Only honoured for
  // equidistant reconstruction (its grid always contains 0).
  bool reuse_current_value = false;

  /// Throws InvalidArgument on out-of-range fields.
  void validate() const;
};

struct CoordinateStep {
  std::size_t sweep = 0;
  std::size_t param = 0;
  std::size_t samples_used = 0;
  bool reused_current_value = false;
  bool aliasing_fallback = false;
  TrigPolynomial poly;
  double t0 = 0.0;  // applied update on the caller's axis
  double energy_before = 0.0;
  double energy = 0.0;  // minimized series value
};

enum class TrainStatus { kConverged, kMaxSweepsReached };

std::string_view to_string(TrainStatus status);

struct TrainReport {
  std::vector<CoordinateStep> steps;
  std::vector<double> sweep_energies;  // energy after each full sweep
  std::vector<double> initial_theta;
  std::vector<double> final_theta;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  std::size_t sweeps = 0;
  // Σ samples_used over steps; the initial F(θ0) call is counted separately.
  std::size_t evaluations = 0;
  std::size_t baseline_evaluations = 0;
  TrainStatus status = TrainStatus::kConverged;
};

/// Coordinate descent with exact line minima. For each coordinate in order
/// 0..m−1 the restriction f(t) = F(θ + t·e_j) is reconstructed from |D_j|
/// samples, its global minimum over one period is located, and θ_j moves
/// there (the move is taken in (−P/2, P/2], P = 2π/α). Coordinates with
/// trivial D are skipped. Sweeps repeat until one improves the energy by
/// less than `improvement_tol` or `max_sweeps` is reached.
TrainReport coordinate_descent(const Objective& objective, std::span<const double> theta0,
                               std::span<const FrequencySet> freqs,
                               const TrainerConfig& config);

TrainReport coordinate_descent(const ParameterizedCircuit& circuit, const QuantumState& state,
                               const Observable& obs, std::span<const double> theta0,
                               std::span<const FrequencySet> freqs,
                               const TrainerConfig& config);

/// parameter_frequencies() for every parameter of the circuit.
std::vector<FrequencySet> circuit_frequencies(const ParameterizedCircuit& circuit,
                                              const SpectrumOptions& opts = {});

}  // namespace pqc
