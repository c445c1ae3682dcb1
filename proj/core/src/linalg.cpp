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

#include "pqc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pqc/error.hpp"

namespace pqc {

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix of dim " + std::to_string(dim_) + " needs " +
                    std::to_string(dim_ * dim_) + " entries, got " +
                    std::to_string(data_.size()));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw Error(ErrorCode::kDimensionMismatch, "matrix rows must be square");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> v) const {
  if (v.size() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length does not match matrix");
  }
  ComplexVector out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    Complex acc = 0.0;
    const Complex* row = &data_[r * dim_];
    for (std::size_t c = 0; c < dim_; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw Error(ErrorCode::kDimensionMismatch, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_) throw Error(ErrorCode::kDimensionMismatch, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "matrix product");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ComplexMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k) {
        for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
      }
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::kDimensionMismatch, "matrix comparison");
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
  const double scale = a.max_abs();
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      if (std::abs(a(r, c) - std::conj(a(c, r))) > rel_tol * scale) return false;
    }
  }
  return true;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim())) <= tol;
}

namespace {

constexpr int kMaxJacobiSweeps = 100;

double off_diagonal_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t p = 0; p < a.dim(); ++p) {
    for (std::size_t q = p + 1; q < a.dim(); ++q) s += std::norm(a(p, q));
  }
  return 2.0 * s;
}

double frobenius_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return s;
}

// One complex Jacobi rotation J = diag(1, e^{-iφ}) · R(c, s) on the (p, q)
// plane; A ← J†AJ zeroes A(p, q), V ← VJ accumulates eigenvectors.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  const Complex phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  if (theta < 0.0) t = -t;
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex jpp = c;
  const Complex jpq = s;
  const Complex jqp = -s * std::conj(phase);
  const Complex jqq = c * std::conj(phase);

  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p), akq = a(k, q);
    a(k, p) = akp * jpp + akq * jqp;
    a(k, q) = akp * jpq + akq * jqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k), aqk = a(q, k);
    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p), vkq = v(k, q);
    v(k, p) = vkp * jpp + vkq * jqp;
    v(k, q) = vkp * jpq + vkq * jqq;
  }
}

}  // namespace

HermitianOperator eigendecompose(const ComplexMatrix& input) {
  if (input.empty()) throw Error(ErrorCode::kInvalidArgument, "empty matrix");
  if (!is_hermitian(input, 1e-10)) {
    throw Error(ErrorCode::kNotHermitian, "matrix is not Hermitian within 1e-10");
  }
  const std::size_t n = input.dim();

  // Work on the exactly Hermitian part so round-off asymmetry cannot stall
  // the sweeps.
  ComplexMatrix a = input;
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = std::pow(std::numeric_limits<double>::epsilon(), 2) *
                        std::max(frobenius_norm2(a), std::numeric_limits<double>::min());
  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= target) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) == 0.0) continue;
        rotate(a, v, p, q);
      }
    }
  }
  if (!converged && off_diagonal_norm2(a) > target) {
    throw Error(ErrorCode::kNoConvergence, "Jacobi sweeps exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  HermitianOperator out;
  out.matrix_ = input;
  out.eigenvalues_.resize(n);
  out.eigenvectors_ = ComplexMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues_[j] = a(order[j], order[j]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors_(r, j) = v(r, order[j]);
  }
  return out;
}

HermitianOperator HermitianOperator::from_spectral(ComplexMatrix matrix,
                                                 std::vector<double> eigenvalues,
                                                 ComplexMatrix eigenvectors) {
  const std::size_t n = matrix.dim();
  if (eigenvalues.size() != n || eigenvectors.dim() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "spectral data does not match matrix");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return eigenvalues[i] < eigenvalues[j];
  });
  HermitianOperator out;
  out.matrix_ = std::move(matrix);
  out.eigenvalues_.resize(n);
  out.eigenvectors_ = ComplexMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues_[j] = eigenvalues[order[j]];
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors_(r, j) = eigenvectors(r, order[j]);
  }
  return out;
}

ComplexVector HermitianOperator::evolve_vector(double t, std::span<const Complex> psi) const {
  const std::size_t n = dim();
  if (psi.size() != n) throw Error(ErrorCode::kDimensionMismatch, "state length");
  if (t == 0.0) return ComplexVector(psi.begin(), psi.end());
  // coefficients in the eigenbasis: V† ψ
  ComplexVector coeff(n);
  for (std::size_t j = 0; j < n; ++j) {
    Complex acc = 0.0;
    for (std::size_t r = 0; r < n; ++r) acc += std::conj(eigenvectors_(r, j)) * psi[r];
    coeff[j] = acc * std::polar(1.0, -t * eigenvalues_[j]);
  }
  ComplexVector out(n);
  for (std::size_t r = 0; r < n; ++r) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += eigenvectors_(r, j) * coeff[j];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix evolve(const HermitianOperator& h, double t) {
  const std::size_t n = h.dim();
  if (t == 0.0) return ComplexMatrix::identity(n);
  const auto& vecs = h.eigenvectors();
  std::vector<Complex> phases(n);
  for (std::size_t j = 0; j < n; ++j) phases[j] = std::polar(1.0, -t * h.eigenvalues()[j]);
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Complex acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += vecs(r, j) * phases[j] * std::conj(vecs(c, j));
      out(r, c) = acc;
    }
  }
  return out;
}

namespace {

struct LuFactors {
  ComplexMatrix lu;
  std::vector<std::size_t> perm;
  bool singular = false;
};

LuFactors lu_factor(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  LuFactors f{a, std::vector<std::size_t>(n), false};
  std::iota(f.perm.begin(), f.perm.end(), 0);
  ComplexMatrix& lu = f.lu;
  const double scale = a.max_abs();
  const double pivot_floor =
      static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(lu(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(lu(r, k)) > best) {
        best = std::abs(lu(r, k));
        piv = r;
      }
    }
    if (best == 0.0 || best <= pivot_floor) {
      f.singular = true;
      return f;
    }
    if (piv != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(k, c), lu(piv, c));
      std::swap(f.perm[k], f.perm[piv]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      const Complex m = lu(r, k) / lu(k, k);
      lu(r, k) = m;
      if (m == Complex{}) continue;
      for (std::size_t c = k + 1; c < n; ++c) lu(r, c) -= m * lu(k, c);
    }
  }
  return f;
}

ComplexVector lu_solve(const LuFactors& f, std::span<const Complex> y) {
  const std::size_t n = f.lu.dim();
  ComplexVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = y[f.perm[i]];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
    x[i] /= f.lu(i, i);
  }
  return x;
}

double one_norm(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t c = 0; c < a.dim(); ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) s += std::abs(a(r, c));
    best = std::max(best, s);
  }
  return best;
}

double inverse_one_norm(const LuFactors& f) {
  const std::size_t n = f.lu.dim();
  double best = 0.0;
  ComplexVector e(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(e.begin(), e.end(), Complex{});
    e[c] = 1.0;
    const ComplexVector col = lu_solve(f, e);
    double s = 0.0;
    for (const auto& z : col) s += std::abs(z);
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

LinearSolution solve_linear(const ComplexMatrix& a, std::span<const Complex> y) {
  if (a.empty()) throw Error(ErrorCode::kInvalidArgument, "empty system");
  if (y.size() != a.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "right-hand side length does not match matrix");
  }
  const LuFactors f = lu_factor(a);
  if (f.singular) throw Error(ErrorCode::kSingular, "zero pivot in LU factorization");
  LinearSolution out;
  out.x = lu_solve(f, y);
  out.cond_estimate = one_norm(a) * inverse_one_norm(f);
  out.ill_conditioned = !(out.cond_estimate < kIllConditionedThreshold);
  return out;
}

double condition_number(const ComplexMatrix& a) {
  if (a.empty()) return std::numeric_limits<double>::infinity();
  const LuFactors f = lu_factor(a);
  if (f.singular) return std::numeric_limits<double>::infinity();
  return one_norm(a) * inverse_one_norm(f);
}

}  // namespace pqc
