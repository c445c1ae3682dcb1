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

#include "pqc/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pqc/error.hpp"
#include "pqc/sampler.hpp"
#include "pqc/trigmin.hpp"

namespace pqc {

std::string_view to_string(TrainStatus status) {
  switch (status) {
    case TrainStatus::kConverged: return "converged";
    case TrainStatus::kMaxSweepsReached: return "max_sweeps_reached";
  }
  return "unknown";
}

void TrainerConfig::validate() const {
  if (max_sweeps < 1) throw Error(ErrorCode::kInvalidArgument, "max_sweeps must be >= 1");
  if (!(improvement_tol > 0.0) || !std::isfinite(improvement_tol)) {
    throw Error(ErrorCode::kInvalidArgument, "improvement_tol must be positive and finite");
  }
}

namespace {

constexpr double kStayTolerance = 1e-12;

// Representative of t modulo `period` in (−period/2, period/2].
double centered(double t, double period) {
  double r = std::fmod(t, period);
  if (r > 0.5 * period) r -= period;
  if (r <= -0.5 * period) r += period;
  return r;
}

}  // namespace

TrainReport coordinate_descent(const Objective& objective, std::span<const double> theta0,
                               std::span<const FrequencySet> freqs,
                               const TrainerConfig& config) {
  config.validate();
  if (freqs.size() != theta0.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "one frequency set per parameter is required");
  }

  TrainReport report;
  report.initial_theta.assign(theta0.begin(), theta0.end());
  std::vector<double> theta = report.initial_theta;
  double energy = objective(theta);
  report.baseline_evaluations = 1;
  report.initial_energy = energy;

  std::uint64_t step_counter = 0;
  report.status = TrainStatus::kMaxSweepsReached;
  for (std::size_t sweep = 0; sweep < config.max_sweeps; ++sweep) {
    const double sweep_start = energy;
    for (std::size_t j = 0; j < theta.size(); ++j) {
      if (freqs[j].trivial()) continue;
      const UnivariateFunction f = restrict(objective, theta, j);

      Reconstruction rec;
      if (config.reconstruction == ReconstructionMethod::kRandom) {
        rec = reconstruct_random(f, freqs[j], splitmix64(config.seed + step_counter));
      } else {
        const std::optional<double> known =
            config.reuse_current_value ? std::optional<double>(energy) : std::nullopt;
        rec = reconstruct_equidistant(f, freqs[j], config.offset, known);
      }
      ++step_counter;

      const TrigMinimum best = minimize_trig(rec.poly);
      // A flat or already optimal coordinate stays put; otherwise round-off
      // in the reconstruction would pick an arbitrary point of equal value.
      const double here = eval_trig(rec.poly, 0.0);
      const bool move = here - best.value > kStayTolerance * (1.0 + std::abs(here));
      CoordinateStep step;
      step.sweep = sweep;
      step.param = j;
      step.samples_used = rec.samples_used;
      step.reused_current_value = rec.samples_used < rec.points.size();
      step.aliasing_fallback = rec.aliasing_fallback;
      step.t0 = move ? centered(best.t_star, rec.poly.period()) : 0.0;
      step.energy_before = energy;
      step.energy = move ? best.value : energy;
      step.poly = std::move(rec.poly);

      theta[j] += step.t0;
      energy = step.energy;
      report.evaluations += step.samples_used;
      report.steps.push_back(std::move(step));
    }
    report.sweep_energies.push_back(energy);
    report.sweeps = sweep + 1;
    if (sweep_start - energy < config.improvement_tol) {
      report.status = TrainStatus::kConverged;
      break;
    }
  }
  report.final_theta = std::move(theta);
  report.final_energy = energy;
  return report;
}

TrainReport coordinate_descent(const ParameterizedCircuit& circuit, const QuantumState& state,
                               const Observable& obs, std::span<const double> theta0,
                               std::span<const FrequencySet> freqs,
                               const TrainerConfig& config) {
  return coordinate_descent(make_objective(circuit, state, obs), theta0, freqs, config);
}

std::vector<FrequencySet> circuit_frequencies(const ParameterizedCircuit& circuit,
                                              const SpectrumOptions& opts) {
  std::vector<FrequencySet> out;
  out.reserve(circuit.num_params());
  for (std::size_t j = 0; j < circuit.num_params(); ++j) {
    out.push_back(parameter_frequencies(circuit, j, opts));
  }
  return out;
}

}  // namespace pqc
