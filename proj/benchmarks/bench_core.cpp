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

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "pqc/pqc.hpp"

namespace {

using namespace pqc;

ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    m(r, r) = g(rng);
    for (std::size_t c = r + 1; c < dim; ++c) {
      m(r, c) = Complex{g(rng), g(rng)};
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

void BM_Eigendecompose(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ComplexMatrix h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(eigendecompose(h));
}
BENCHMARK(BM_Eigendecompose)->RangeMultiplier(2)->Range(2, 64);

// Layered circuit: one Y/2 rotation per qubit, each followed by a CZ ladder.
struct Layered {
  ParameterizedCircuit circuit;
  QuantumState state;
  Observable obs;
};

Layered layered(std::size_t qubits) {
  std::vector<CircuitElement> elements;
  const ComplexMatrix cz = ComplexMatrix::diagonal(std::vector<Complex>{1.0, 1.0, 1.0, -1.0});
  const HermitianOperator y_half = eigendecompose(pauli_matrix('Y') * Complex{0.5});
  for (std::size_t q = 0; q < qubits; ++q) {
    const std::size_t t[] = {q};
    elements.push_back(ParameterizedGate{embed(y_half, t, qubits), q});
  }
  for (std::size_t q = 0; q + 1 < qubits; ++q) {
    const std::size_t t[] = {q, q + 1};
    elements.push_back(FixedGate{embed(cz, t, qubits)});
  }
  std::vector<PauliTerm> terms;
  for (std::size_t q = 0; q < qubits; ++q) {
    std::string word(qubits, 'I');
    word[q] = 'Z';
    terms.push_back({1.0, word});
  }
  return {ParameterizedCircuit(qubits, std::move(elements)),
          QuantumState::basis(std::string(qubits, '0')),
          Observable::from_pauli_sum(std::move(terms), qubits)};
}

void BM_Expectation(benchmark::State& state) {
  const auto l = layered(static_cast<std::size_t>(state.range(0)));
  const std::vector<double> theta(l.circuit.num_params(), 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(expectation(l.circuit, theta, l.state, l.obs));
}
BENCHMARK(BM_Expectation)->DenseRange(2, 8, 2);

void BM_ReconstructEquidistant(benchmark::State& state) {
  std::vector<std::int64_t> levels;
  for (std::int64_t k = 0; k <= state.range(0); ++k) levels.push_back(k);
  const FrequencySet freqs = frequencies_from_levels(1.0, levels);
  const auto f = [](double t) { return std::cos(t) + 0.3 * std::sin(3 * t); };
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_equidistant(f, freqs));
}
BENCHMARK(BM_ReconstructEquidistant)->DenseRange(1, 9, 2);

void BM_ReconstructRandom(benchmark::State& state) {
  std::vector<std::int64_t> levels;
  for (std::int64_t k = 0; k <= state.range(0); ++k) levels.push_back(k);
  const FrequencySet freqs = frequencies_from_levels(1.0, levels);
  const auto f = [](double t) { return std::cos(t) + 0.3 * std::sin(3 * t); };
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_random(f, freqs, seed++));
}
BENCHMARK(BM_ReconstructRandom)->DenseRange(1, 9, 2);

void BM_MinimizeTrig(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  const auto n = state.range(0);
  TrigPolynomial p;
  for (std::int64_t k = -n; k <= n; ++k) p.frequencies.push_back(k);
  p.coeffs.resize(p.frequencies.size());
  for (std::int64_t k = 1; k <= n; ++k) {
    const Complex c{g(rng), g(rng)};
    p.coeffs[static_cast<std::size_t>(n + k)] = c;
    p.coeffs[static_cast<std::size_t>(n - k)] = std::conj(c);
  }
  for (auto _ : state) benchmark::DoNotOptimize(minimize_trig(p));
}
BENCHMARK(BM_MinimizeTrig)->DenseRange(1, 7, 2);

void BM_CoordinateDescent(benchmark::State& state) {
  const auto l = layered(static_cast<std::size_t>(state.range(0)));
  const auto freqs = circuit_frequencies(l.circuit);
  const std::vector<double> theta0(l.circuit.num_params(), 0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coordinate_descent(l.circuit, l.state, l.obs, theta0, freqs, {}));
  }
}
BENCHMARK(BM_CoordinateDescent)->DenseRange(2, 6, 2);

}  // namespace

BENCHMARK_MAIN();
