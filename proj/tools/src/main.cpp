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

// pqcalc: evaluate, differentiate, reconstruct and train parameterized
// circuits described in JSON files. Every command prints one JSON document.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "circuit_io.hpp"
#include "pqc/pqc.hpp"

namespace {

using nlohmann::json;
using pqc::Error;
using pqc::ErrorCode;

constexpr int kInputError = 1;
constexpr int kNumericalError = 2;

struct Common {
  std::string circuit;
  std::string theta;
  std::size_t shots = 0;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::int64_t max_den = 1'000'000;
};

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw Error(ErrorCode::kInvalidArgument, std::string(flag) + ": bad number '" + item + "'");
    }
    out.push_back(v);
  }
  return out;
}

struct Loaded {
  pqc::io::CircuitFile file;
  std::vector<double> theta;
  pqc::Objective objective;
  pqc::SpectrumOptions spectrum;
};

Loaded load(const Common& c, const char* theta_flag) {
  Loaded l{pqc::io::load_circuit(c.circuit), parse_list(c.theta, theta_flag), {}, {c.tol, c.max_den}};
  if (l.theta.size() != l.file.circuit.num_params()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(theta_flag) + ": circuit has " +
                    std::to_string(l.file.circuit.num_params()) + " parameters, got " +
                    std::to_string(l.theta.size()) + " values");
  }
  l.objective = c.shots > 0 ? pqc::make_sampled_objective(l.file.circuit, l.file.state,
                                                          l.file.observable, {c.shots, c.seed})
                            : pqc::make_objective(l.file.circuit, l.file.state, l.file.observable);
  return l;
}

std::size_t param_index(std::int64_t one_based, const pqc::ParameterizedCircuit& circuit) {
  if (one_based < 1 || static_cast<std::size_t>(one_based) > circuit.num_params()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "--param must lie in 1.." + std::to_string(circuit.num_params()));
  }
  return static_cast<std::size_t>(one_based - 1);
}

json coefficients(const pqc::TrigPolynomial& p) {
  json out = json::array();
  for (std::size_t i = 0; i < p.frequencies.size(); ++i) {
    out.push_back({{"k", p.frequencies[i]}, {"re", p.coeffs[i].real()}, {"im", p.coeffs[i].imag()}});
  }
  return out;
}

json spectrum_entry(std::size_t j, const pqc::FrequencySet& f) {
  const auto dense = static_cast<std::size_t>(2 * f.max_freq() + 1);
  const bool aliases = !f.injective_mod(static_cast<std::int64_t>(f.size()));
  return {{"param", j + 1},
          {"alpha", f.alpha},
          {"levels", f.levels},
          {"D", f.differences},
          {"max_freq", f.max_freq()},
          {"evaluations_needed", f.size()},
          {"equidistant_evaluations", aliases ? dense : f.size()},
          {"generic_evaluations", dense}};
}

json run_eval(const Common& c) {
  Loaded l = load(c, "--theta");
  if (c.shots > 0) {
    const auto e = pqc::sample_expectation(l.file.circuit, l.theta, l.file.state, l.file.observable,
                                           {c.shots, c.seed});
    return {{"value", e.estimate}, {"standard_error", e.standard_error}, {"shots", c.shots}};
  }
  return {{"value", l.objective(l.theta)}};
}

json run_spectrum(const Common& c, std::int64_t param) {
  const auto file = pqc::io::load_circuit(c.circuit);
  const pqc::SpectrumOptions opts{c.tol, c.max_den};
  json params = json::array();
  if (param > 0) {
    const std::size_t j = param_index(param, file.circuit);
    params.push_back(spectrum_entry(j, pqc::parameter_frequencies(file.circuit, j, opts)));
  } else {
    for (std::size_t j = 0; j < file.circuit.num_params(); ++j) {
      params.push_back(spectrum_entry(j, pqc::parameter_frequencies(file.circuit, j, opts)));
    }
  }
  return {{"parameters", params}};
}

json run_fourier(const Common& c, std::int64_t param, const std::string& method,
                 std::int64_t offset) {
  Loaded l = load(c, "--theta");
  const std::size_t j = param_index(param, l.file.circuit);
  const auto freqs = pqc::parameter_frequencies(l.file.circuit, j, l.spectrum);
  const auto f = pqc::restrict(l.objective, l.theta, j);
  pqc::Reconstruction r;
  if (method == "equidistant") {
    r = pqc::reconstruct_equidistant(f, freqs, offset);
  } else if (method == "random") {
    r = pqc::reconstruct_random(f, freqs, c.seed);
  } else {
    const auto n = freqs.max_freq();
    r = pqc::reconstruct_generic(f, n, pqc::equispaced_points(2 * n + 1, offset), freqs.alpha);
  }
  json out = {{"param", param},
              {"method", method},
              {"alpha", freqs.alpha},
              {"coefficients", coefficients(r.poly)},
              {"samples_used", r.samples_used},
              {"condition", r.condition},
              {"ill_conditioned", r.ill_conditioned},
              {"aliasing_fallback", r.aliasing_fallback},
              {"points", r.points}};
  if (method == "random") out["redraws"] = r.redraws;
  return out;
}

json run_grad(const Common& c, const std::string& method) {
  Loaded l = load(c, "--theta");
  const auto freqs = pqc::circuit_frequencies(l.file.circuit, l.spectrum);
  const auto m = method == "shift2"   ? pqc::DerivativeMethod::kShift2
                 : method == "shift4" ? pqc::DerivativeMethod::kShift4
                                      : pqc::DerivativeMethod::kFourier;
  const auto g = pqc::gradient(l.objective, l.theta, freqs, m);
  return {{"gradient", g.values}, {"evaluations", g.evaluations}, {"method", method}};
}

json run_train(const Common& c, const pqc::TrainerConfig& cfg) {
  Loaded l = load(c, "--theta0");
  const auto freqs = pqc::circuit_frequencies(l.file.circuit, l.spectrum);
  const auto report = pqc::coordinate_descent(l.objective, l.theta, freqs, cfg);
  json steps = json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"sweep", s.sweep + 1},
                     {"param", s.param + 1},
                     {"samples_used", s.samples_used},
                     {"reused_current_value", s.reused_current_value},
                     {"aliasing_fallback", s.aliasing_fallback},
                     {"t0", s.t0},
                     {"energy_before", s.energy_before},
                     {"energy", s.energy},
                     {"coefficients", coefficients(s.poly)}});
  }
  return {{"status", std::string(pqc::to_string(report.status))},
          {"sweeps", report.sweeps},
          {"initial_theta", report.initial_theta},
          {"final_theta", report.final_theta},
          {"initial_energy", report.initial_energy},
          {"final_energy", report.final_energy},
          {"sweep_energies", report.sweep_energies},
          {"evaluations", report.evaluations},
          {"baseline_evaluations", report.baseline_evaluations},
          {"steps", steps}};
}

void add_circuit_options(CLI::App* cmd, Common& c, const char* theta_flag, bool spectrum_opts) {
  cmd->add_option("--circuit", c.circuit, "circuit JSON file")->required()->check(CLI::ExistingFile);
  if (theta_flag != nullptr) {
    cmd->add_option(theta_flag, c.theta, "comma-separated parameter values")->required();
  }
  if (spectrum_opts) {
    cmd->add_option("--tol", c.tol, "relative tolerance for eigenvalue rationalization")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-den", c.max_den, "largest denominator accepted")->check(CLI::PositiveNumber);
  }
}

void add_shot_options(CLI::App* cmd, Common& c) {
  cmd->add_option("--shots", c.shots, "estimate every evaluation from this many shots")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "random seed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pqcalc: Fourier tools for parameterized quantum circuits"};
  app.require_subcommand(1);

  Common common;
  std::int64_t param = 0;
  std::string fourier_method = "equidistant";
  std::string grad_method = "fourier";
  std::string train_method = "equidistant";
  std::int64_t offset = 0;
  pqc::TrainerConfig cfg;

  auto* eval = app.add_subcommand("eval", "expectation value at theta");
  add_circuit_options(eval, common, "--theta", false);
  add_shot_options(eval, common);

  auto* spectrum = app.add_subcommand("spectrum", "frequency sets of the parameters");
  add_circuit_options(spectrum, common, nullptr, true);
  spectrum->add_option("--param", param, "1-based parameter index (default: all)");

  auto* fourier = app.add_subcommand("fourier", "Fourier coefficients along one parameter");
  add_circuit_options(fourier, common, "--theta", true);
  add_shot_options(fourier, common);
  fourier->add_option("--param", param, "1-based parameter index")->required();
  fourier->add_option("--method", fourier_method)
      ->check(CLI::IsMember({"equidistant", "random", "generic"}));
  fourier->add_option("--offset", offset, "equidistant grid offset a");

  auto* grad = app.add_subcommand("grad", "gradient at theta");
  add_circuit_options(grad, common, "--theta", true);
  add_shot_options(grad, common);
  grad->add_option("--method", grad_method)->check(CLI::IsMember({"fourier", "shift2", "shift4"}));

  auto* train = app.add_subcommand("train", "coordinate descent from theta0");
  add_circuit_options(train, common, "--theta0", true);
  add_shot_options(train, common);
  train->add_option("--max-sweeps", cfg.max_sweeps)->check(CLI::PositiveNumber);
  train->add_option("--improvement-tol", cfg.improvement_tol, "stop when a sweep gains less")
      ->check(CLI::PositiveNumber);
  train->add_option("--method", train_method)->check(CLI::IsMember({"equidistant", "random"}));
  train->add_option("--offset", cfg.offset, "equidistant grid offset a");
  train->add_flag("--reuse", cfg.reuse_current_value, "use the known energy as the sample at 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    json out;
    if (*eval) {
      out = run_eval(common);
    } else if (*spectrum) {
      out = run_spectrum(common, param);
    } else if (*fourier) {
      out = run_fourier(common, param, fourier_method, offset);
    } else if (*grad) {
      out = run_grad(common, grad_method);
    } else {
      cfg.seed = common.seed;
      cfg.reconstruction = train_method == "random" ? pqc::ReconstructionMethod::kRandom
                                                    : pqc::ReconstructionMethod::kEquidistant;
      out = run_train(common, cfg);
    }
    std::cout << out.dump(2) << '\n';
    return 0;
  } catch (const Error& e) {
    std::cerr << "pqcalc: " << e.what() << '\n';
    return pqc::is_numerical(e.code()) ? kNumericalError : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "pqcalc: " << e.what() << '\n';
    return kInputError;
  }
}
