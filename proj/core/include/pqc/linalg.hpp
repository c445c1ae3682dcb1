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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace pqc {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return dim_ == 0; }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  double max_abs() const;
  Complex trace() const;

  ComplexVector apply(std::span<const Complex> v) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Max-entry distance ‖a − b‖_max.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// ‖a − a†‖_max ≤ rel_tol · ‖a‖_max (absolute for the zero matrix).
bool is_hermitian(const ComplexMatrix& a, double rel_tol);
bool is_unitary(const ComplexMatrix& u, double tol);

/// A Hermitian matrix together with its spectral decomposition
/// A = Σ_j λ_j |j⟩⟨j|. Eigenvalues are ascending and listed with
/// multiplicity; column j of `eigenvectors()` is |j⟩.
class HermitianOperator {
 public:
  HermitianOperator() = default;

  /// Assembles an operator from an already known decomposition (for example
  /// a small gate's spectrum embedded into a larger register). Columns of
  /// `eigenvectors` must be orthonormal; pairs are re-sorted ascending.
  static HermitianOperator from_spectral(ComplexMatrix matrix, std::vector<double> eigenvalues,
                                         ComplexMatrix eigenvectors);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  const ComplexMatrix& eigenvectors() const noexcept { return eigenvectors_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

  /// Applies e^{−itA} to a vector in O(dim²) through the eigenbasis.
  ComplexVector evolve_vector(double t, std::span<const Complex> v) const;

 private:
  friend HermitianOperator eigendecompose(const ComplexMatrix& a);

  ComplexMatrix matrix_;
  std::vector<double> eigenvalues_;
  ComplexMatrix eigenvectors_;
};

/// Cyclic Jacobi eigensolver for Hermitian matrices.
/// Throws NotHermitian when ‖A − A†‖_max > 1e−10·‖A‖_max and NoConvergence
/// when the off-diagonal mass does not vanish within the sweep budget.
HermitianOperator eigendecompose(const ComplexMatrix& a);

/// e^{−itH} = Σ_j e^{−itλ_j}|j⟩⟨j|. Always built from the eigendecomposition.
ComplexMatrix evolve(const HermitianOperator& h, double t);

struct LinearSolution {
  ComplexVector x;
  // ‖A‖_1·‖A⁻¹‖_1.
  double cond_estimate = 0.0;
  bool ill_conditioned = false;
};

inline constexpr double kIllConditionedThreshold = 1e8;

/// Solves A x = y by LU with partial pivoting. Throws Singular on an exact or
/// numerically zero pivot; a large condition number only sets
/// `ill_conditioned`, the solution is returned unchanged.
LinearSolution solve_linear(const ComplexMatrix& a, std::span<const Complex> y);

/// 1-norm condition number of A, or +inf when A is singular.
double condition_number(const ComplexMatrix& a);

}  // namespace pqc
