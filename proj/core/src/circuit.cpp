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

#include "pqc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <string>

#include "pqc/error.hpp"

namespace pqc {

ComplexMatrix pauli_matrix(char factor) {
  const Complex i{0.0, 1.0};
  switch (factor) {
    case 'I': return ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}};
    case 'X': return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}};
    case 'Y': return ComplexMatrix{{0.0, -i}, {i, 0.0}};
    case 'Z': return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}};
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("unknown Pauli factor '") + factor + "'");
  }
}

ComplexMatrix pauli_word_matrix(std::string_view word) {
  if (word.empty()) throw Error(ErrorCode::kInvalidArgument, "empty Pauli word");
  ComplexMatrix out = pauli_matrix(word.front());
  for (char f : word.substr(1)) out = kron(out, pauli_matrix(f));
  return out;
}

ComplexMatrix pauli_sum_matrix(std::span<const PauliTerm> terms, std::size_t qubits) {
  ComplexMatrix out(std::size_t{1} << qubits);
  for (const auto& term : terms) {
    if (term.factors.size() != qubits) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "Pauli word '" + term.factors + "' does not span " + std::to_string(qubits) +
                      " qubits");
    }
    if (!std::isfinite(term.coefficient)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite Pauli coefficient");
    }
    out += pauli_word_matrix(term.factors) * Complex{term.coefficient};
  }
  return out;
}

namespace {

struct Embedding {
  std::size_t target_mask = 0;
  std::vector<std::size_t> scatter;  // sub-index -> full-index bits
};

Embedding make_embedding(std::size_t op_dim, std::span<const std::size_t> targets,
                         std::size_t qubits) {
  const std::size_t k = targets.size();
  if (k == 0 || op_dim != (std::size_t{1} << k)) {
    throw Error(ErrorCode::kDimensionMismatch,
                "operator of dim " + std::to_string(op_dim) + " cannot act on " +
                    std::to_string(k) + " target qubits");
  }
  Embedding e;
  std::vector<std::size_t> bit(k);
  for (std::size_t t = 0; t < k; ++t) {
    if (targets[t] >= qubits) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "target qubit " + std::to_string(targets[t]) + " outside register of " +
                      std::to_string(qubits));
    }
    bit[t] = std::size_t{1} << (qubits - 1 - targets[t]);
    if (e.target_mask & bit[t]) {
      throw Error(ErrorCode::kInvalidArgument, "repeated target qubit");
    }
    e.target_mask |= bit[t];
  }
  e.scatter.resize(op_dim);
  for (std::size_t sub = 0; sub < op_dim; ++sub) {
    std::size_t full = 0;
    for (std::size_t t = 0; t < k; ++t) {
      if (sub & (std::size_t{1} << (k - 1 - t))) full |= bit[t];
    }
    e.scatter[sub] = full;
  }
  return e;
}

std::size_t gather(const Embedding& e, std::size_t full) {
  const auto it = std::find(e.scatter.begin(), e.scatter.end(), full & e.target_mask);
  return static_cast<std::size_t>(it - e.scatter.begin());
}

}  // namespace

ComplexMatrix embed(const ComplexMatrix& op, std::span<const std::size_t> targets,
                    std::size_t qubits) {
  const Embedding e = make_embedding(op.dim(), targets, qubits);
  const std::size_t n = std::size_t{1} << qubits;
  ComplexMatrix out(n);
  for (std::size_t row = 0; row < n; ++row) {
    const std::size_t rest = row & ~e.target_mask;
    const std::size_t sub_row = gather(e, row);
    for (std::size_t sub_col = 0; sub_col < op.dim(); ++sub_col) {
      out(row, rest | e.scatter[sub_col]) = op(sub_row, sub_col);
    }
  }
  return out;
}

HermitianOperator embed(const HermitianOperator& op, std::span<const std::size_t> targets,
                        std::size_t qubits) {
  const Embedding e = make_embedding(op.dim(), targets, qubits);
  const std::size_t n = std::size_t{1} << qubits;
  std::vector<double> evals;
  evals.reserve(n);
  ComplexMatrix evecs(n);
  std::size_t col = 0;
  for (std::size_t rest = 0; rest < n; ++rest) {
    if (rest & e.target_mask) continue;
    for (std::size_t a = 0; a < op.dim(); ++a, ++col) {
      evals.push_back(op.eigenvalues()[a]);
      for (std::size_t sub = 0; sub < op.dim(); ++sub) {
        evecs(rest | e.scatter[sub], col) = op.eigenvectors()(sub, a);
      }
    }
  }
  return HermitianOperator::from_spectral(embed(op.matrix(), targets, qubits), std::move(evals),
                                          std::move(evecs));
}

Observable Observable::from_matrix(const ComplexMatrix& m) {
  return Observable(eigendecompose(m));
}

Observable Observable::from_pauli_sum(std::vector<PauliTerm> terms, std::size_t qubits) {
  if (terms.empty()) throw Error(ErrorCode::kInvalidArgument, "empty Pauli sum");
  auto op = eigendecompose(pauli_sum_matrix(terms, qubits));
  return Observable(std::move(op), std::move(terms));
}

QuantumState QuantumState::pure(ComplexVector amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw Error(ErrorCode::kDimensionMismatch, "amplitude count must be a power of two");
  }
  double norm2 = 0.0;
  for (const auto& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) {
    throw Error(ErrorCode::kInvalidArgument, "state vector is not normalized");
  }
  return QuantumState(std::move(amplitudes));
}

QuantumState QuantumState::density(ComplexMatrix rho) {
  const std::size_t n = rho.dim();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw Error(ErrorCode::kDimensionMismatch, "density matrix dim must be a power of two");
  }
  if (!is_hermitian(rho, 1e-10)) {
    throw Error(ErrorCode::kInvalidArgument, "density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > 1e-10) {
    throw Error(ErrorCode::kInvalidArgument, "density matrix trace is not 1");
  }
  const auto decomposition = eigendecompose(rho);
  if (decomposition.eigenvalues().front() < -1e-10) {
    throw Error(ErrorCode::kInvalidArgument, "density matrix is not positive semidefinite");
  }
  return QuantumState(std::move(rho));
}

QuantumState QuantumState::basis(std::string_view bits) {
  if (bits.empty() || bits.size() > 30) {
    throw Error(ErrorCode::kInvalidArgument, "basis string length out of range");
  }
  std::size_t index = 0;
  for (char b : bits) {
    if (b != '0' && b != '1') {
      throw Error(ErrorCode::kInvalidArgument, "basis string must contain only 0 and 1");
    }
    index = (index << 1) | static_cast<std::size_t>(b == '1');
  }
  ComplexVector v(std::size_t{1} << bits.size());
  v[index] = 1.0;
  return QuantumState(std::move(v));
}

std::size_t QuantumState::dim() const noexcept {
  return is_pure() ? amplitudes().size() : density_matrix().dim();
}

QuantumState QuantumState::to_density() const {
  if (!is_pure()) return *this;
  const auto& v = amplitudes();
  ComplexMatrix rho(v.size());
  for (std::size_t r = 0; r < v.size(); ++r) {
    for (std::size_t c = 0; c < v.size(); ++c) rho(r, c) = v[r] * std::conj(v[c]);
  }
  return QuantumState(std::move(rho));
}

ParameterizedCircuit::ParameterizedCircuit(std::size_t qubits,
                                           std::vector<CircuitElement> elements,
                                           CircuitLimits limits)
    : qubits_(qubits), elements_(std::move(elements)) {
  if (qubits_ == 0) throw Error(ErrorCode::kInvalidArgument, "circuit needs at least one qubit");
  if (qubits_ > limits.max_qubits) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(qubits_) + " qubits exceeds the configured limit of " +
                    std::to_string(limits.max_qubits));
  }
  const std::size_t d = dim();
  std::vector<bool> used;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const std::string where = "element " + std::to_string(i);
    if (const auto* fixed = std::get_if<FixedGate>(&elements_[i])) {
      if (fixed->unitary.dim() != d) {
        throw Error(ErrorCode::kDimensionMismatch, where + ": unitary dimension");
      }
      if (!is_unitary(fixed->unitary, 1e-10)) {
        throw Error(ErrorCode::kNotUnitary, where + ": fixed gate is not unitary");
      }
    } else {
      const auto& gate = std::get<ParameterizedGate>(elements_[i]);
      if (gate.generator.dim() != d) {
        throw Error(ErrorCode::kDimensionMismatch, where + ": generator dimension");
      }
      if (gate.param >= used.size()) used.resize(gate.param + 1, false);
      used[gate.param] = true;
    }
  }
  num_params_ = used.size();
  for (std::size_t p = 0; p < used.size(); ++p) {
    if (!used[p]) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "parameter " + std::to_string(p) + " drives no element");
    }
  }
}

std::vector<const HermitianOperator*> ParameterizedCircuit::generators_for(
    std::size_t param) const {
  if (param >= num_params_) {
    throw Error(ErrorCode::kIndexOutOfRange, "parameter index " + std::to_string(param));
  }
  std::vector<const HermitianOperator*> out;
  for (const auto& el : elements_) {
    if (const auto* g = std::get_if<ParameterizedGate>(&el); g && g->param == param) {
      out.push_back(&g->generator);
    }
  }
  return out;
}

namespace {

void check_inputs(const ParameterizedCircuit& circuit, std::span<const double> theta,
                  const QuantumState& state) {
  if (theta.size() != circuit.num_params()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "theta has " + std::to_string(theta.size()) + " entries, circuit has " +
                    std::to_string(circuit.num_params()) + " parameters");
  }
  if (state.dim() != circuit.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "state dimension does not match circuit");
  }
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& rho) {
  return u * rho * u.adjoint();
}

}  // namespace

QuantumState run_circuit(const ParameterizedCircuit& circuit, std::span<const double> theta,
                         const QuantumState& state) {
  check_inputs(circuit, theta, state);
  if (state.is_pure()) {
    ComplexVector psi = state.amplitudes();
    for (const auto& el : circuit.elements()) {
      if (const auto* fixed = std::get_if<FixedGate>(&el)) {
        psi = fixed->unitary.apply(psi);
      } else {
        const auto& gate = std::get<ParameterizedGate>(el);
        psi = gate.generator.evolve_vector(theta[gate.param], psi);
      }
    }
    return QuantumState(std::move(psi));
  }
  ComplexMatrix rho = state.density_matrix();
  for (const auto& el : circuit.elements()) {
    if (const auto* fixed = std::get_if<FixedGate>(&el)) {
      rho = conjugate(fixed->unitary, rho);
    } else {
      const auto& gate = std::get<ParameterizedGate>(el);
      rho = conjugate(evolve(gate.generator, theta[gate.param]), rho);
    }
  }
  return QuantumState(std::move(rho));
}

namespace {

double real_expectation(Complex value, const Observable& obs) {
  if (std::abs(value.imag()) > 1e-9 * (1.0 + obs.matrix().max_abs())) {
    throw Error(ErrorCode::kImaginaryResidual,
                "imaginary part " + std::to_string(value.imag()) + " of the expectation");
  }
  return value.real();
}

Complex raw_expectation(const ParameterizedCircuit& circuit, std::span<const double> theta,
                        const QuantumState& state, const Observable& obs) {
  if (obs.dim() != circuit.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "observable dimension does not match circuit");
  }
  const QuantumState out = run_circuit(circuit, theta, state);
  if (out.is_pure()) {
    const ComplexVector& psi = out.amplitudes();
    const ComplexVector m_psi = obs.matrix().apply(psi);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) acc += std::conj(psi[i]) * m_psi[i];
    return acc;
  }
  const ComplexMatrix& rho = out.density_matrix();
  const ComplexMatrix& m = obs.matrix();
  Complex acc = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) acc += m(r, c) * rho(c, r);
  }
  return acc;
}

}  // namespace

double expectation(const ParameterizedCircuit& circuit, std::span<const double> theta,
                   const QuantumState& state, const Observable& obs) {
  return real_expectation(raw_expectation(circuit, theta, state, obs), obs);
}

Objective make_objective(const ParameterizedCircuit& circuit, const QuantumState& state,
                         const Observable& obs) {
  auto c = std::make_shared<const ParameterizedCircuit>(circuit);
  auto s = std::make_shared<const QuantumState>(state);
  auto o = std::make_shared<const Observable>(obs);
  return [c, s, o](std::span<const double> theta) { return expectation(*c, theta, *s, *o); };
}

UnivariateFunction restrict(Objective objective, std::span<const double> theta,
                            std::size_t param) {
  if (param >= theta.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "parameter index " + std::to_string(param));
  }
  std::vector<double> base(theta.begin(), theta.end());
  return [objective = std::move(objective), base = std::move(base), param](double t) {
    std::vector<double> point = base;
    point[param] += t;
    return objective(point);
  };
}

UnivariateFunction restrict(const ParameterizedCircuit& circuit, std::span<const double> theta,
                            const QuantumState& state, const Observable& obs,
                            std::size_t param) {
  if (param >= circuit.num_params()) {
    throw Error(ErrorCode::kIndexOutOfRange, "parameter index " + std::to_string(param));
  }
  return restrict(make_objective(circuit, state, obs), theta, param);
}

}  // namespace pqc
