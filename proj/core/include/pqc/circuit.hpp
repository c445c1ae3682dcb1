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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pqc/linalg.hpp"

namespace pqc {

// Qubit 0 is the most significant bit of a basis index, so the Pauli word
// "XZ" is X ⊗ Z with X acting on qubit 0.

struct PauliTerm {
  double coefficient = 0.0;
  std::string factors;  // one of I, X, Y, Z per qubit
};

ComplexMatrix pauli_matrix(char factor);
ComplexMatrix pauli_word_matrix(std::string_view word);
ComplexMatrix pauli_sum_matrix(std::span<const PauliTerm> terms, std::size_t qubits);

/// Lifts a k-qubit operator acting on `targets` (first target = most
/// significant bit of the operator's index) to the full register.
ComplexMatrix embed(const ComplexMatrix& op, std::span<const std::size_t> targets,
                    std::size_t qubits);
/// Same, reusing the small operator's eigendecomposition.
HermitianOperator embed(const HermitianOperator& op, std::span<const std::size_t> targets,
                        std::size_t qubits);

class Observable {
 public:
  static Observable from_matrix(const ComplexMatrix& m);
  static Observable from_pauli_sum(std::vector<PauliTerm> terms, std::size_t qubits);

  const HermitianOperator& op() const noexcept { return op_; }
  const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
  std::size_t dim() const noexcept { return op_.dim(); }
  const std::vector<PauliTerm>& pauli_terms() const noexcept { return terms_; }

 private:
  explicit Observable(HermitianOperator op, std::vector<PauliTerm> terms = {})
      : op_(std::move(op)), terms_(std::move(terms)) {}

  HermitianOperator op_;
  std::vector<PauliTerm> terms_;
};

class ParameterizedCircuit;

class QuantumState {
 public:
  /// Throws InvalidArgument unless ‖ψ‖ = 1 within 1e−10.
  static QuantumState pure(ComplexVector amplitudes);
  /// Throws unless ρ is Hermitian, PSD (λ_min ≥ −1e−10) and tr ρ = 1 ± 1e−10.
  static QuantumState density(ComplexMatrix rho);
  /// Computational basis state from a bit string such as "010".
  static QuantumState basis(std::string_view bits);

  bool is_pure() const noexcept { return std::holds_alternative<ComplexVector>(data_); }
  std::size_t dim() const noexcept;
  const ComplexVector& amplitudes() const { return std::get<ComplexVector>(data_); }
  const ComplexMatrix& density_matrix() const { return std::get<ComplexMatrix>(data_); }

  QuantumState to_density() const;

 private:
  friend QuantumState run_circuit(const ParameterizedCircuit&, std::span<const double>,
                                  const QuantumState&);

  explicit QuantumState(ComplexVector v) : data_(std::move(v)) {}
  explicit QuantumState(ComplexMatrix m) : data_(std::move(m)) {}

  std::variant<ComplexVector, ComplexMatrix> data_;
};

struct FixedGate {
  ComplexMatrix unitary;
};

// e^{−iθ_param · generator}
struct ParameterizedGate {
  HermitianOperator generator;
  std::size_t param = 0;
};

using CircuitElement = std::variant<FixedGate, ParameterizedGate>;

struct CircuitLimits {
  std::size_t max_qubits = 10;
};

/// Ordered list of fixed unitaries and parameterized exponentials, applied
/// left to right in time. Parameter indices are 0-based and dense: every
/// index below `num_params()` drives at least one element.
class ParameterizedCircuit {
 public:
  ParameterizedCircuit(std::size_t qubits, std::vector<CircuitElement> elements,
                       CircuitLimits limits = {});

  std::size_t qubits() const noexcept { return qubits_; }
  std::size_t dim() const noexcept { return std::size_t{1} << qubits_; }
  std::size_t num_params() const noexcept { return num_params_; }
  const std::vector<CircuitElement>& elements() const noexcept { return elements_; }

  /// Generators driven by parameter `param`, in circuit order.
  std::vector<const HermitianOperator*> generators_for(std::size_t param) const;

 private:
  std::size_t qubits_;
  std::size_t num_params_ = 0;
  std::vector<CircuitElement> elements_;
};

/// State after running the circuit at `theta`: U(θ)|ψ⟩ or U(θ)ρU(θ)†.
QuantumState run_circuit(const ParameterizedCircuit& circuit, std::span<const double> theta,
                         const QuantumState& state);

/// tr(M U(θ) ρ U(θ)†), exact up to round-off.
double expectation(const ParameterizedCircuit& circuit, std::span<const double> theta,
                   const QuantumState& state, const Observable& obs);

using UnivariateFunction = std::function<double(double)>;
using Objective = std::function<double(std::span<const double>)>;

/// f(t) = F(θ + t·e_param).
UnivariateFunction restrict(const ParameterizedCircuit& circuit, std::span<const double> theta,
                           const QuantumState& state, const Observable& obs, std::size_t param);

/// Same restriction for an arbitrary objective F.
UnivariateFunction restrict(Objective objective, std::span<const double> theta,
                            std::size_t param);

/// θ ↦ expectation(circuit, θ, state, obs); holds shared copies of its inputs.
Objective make_objective(const ParameterizedCircuit& circuit, const QuantumState& state,
                         const Observable& obs);

}  // namespace pqc
