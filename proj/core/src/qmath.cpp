// Copyright 2026 The qprotect Authors
//
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

#include "qprotect/qmath.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "qprotect/error.hpp"

namespace qprotect {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw InputError("ComplexMatrix: ragged initializer list");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  const std::size_t d = std::min(rows_, cols_);
  for (std::size_t i = 0; i < d; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw InputError("ComplexMatrix::operator+=: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw InputError("ComplexMatrix::operator-=: shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& x : data_) x *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw InputError("ComplexMatrix product: inner dimensions " +
                     std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()) + " differ");
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InputError("max_abs_diff: shape mismatch");
  }
  double worst = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    worst = std::max(worst, std::abs(da[i] - db[i]));
  }
  return worst;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (!u.is_square()) return false;
  return max_abs_diff(u * u.adjoint(), ComplexMatrix::identity(u.rows())) <=
         tol;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r; c < m.cols(); ++c) {
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
    }
  }
  return true;
}

std::size_t qubits_for_dim(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw InputError("dimension " + std::to_string(dim) +
                     " is not a power of two");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

namespace gates {

ComplexMatrix identity2() { return ComplexMatrix::identity(2); }

ComplexMatrix hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{s, s}, {s, -s}};
}

ComplexMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }

ComplexMatrix pauli_y() {
  return {{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}};
}

ComplexMatrix pauli_z() { return {{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix ry(double angle) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return {{c, -s}, {s, c}};
}

ComplexMatrix cnot() {
  return {{1.0, 0.0, 0.0, 0.0},
          {0.0, 1.0, 0.0, 0.0},
          {0.0, 0.0, 0.0, 1.0},
          {0.0, 0.0, 1.0, 0.0}};
}

}  // namespace gates

StateVector::StateVector(std::vector<Complex> amplitudes)
    : n_(qubits_for_dim(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
  double norm2 = 0.0;
  for (const auto& a : amplitudes_) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw ValidationError("StateVector: squared norm " +
                          std::to_string(norm2) + " differs from 1");
  }
}

StateVector StateVector::basis(std::size_t n, std::size_t index) {
  const std::size_t dim = std::size_t{1} << n;
  if (index >= dim) {
    throw InputError("StateVector::basis: index " + std::to_string(index) +
                     " out of range for " + std::to_string(n) + " qubits");
  }
  std::vector<Complex> amps(dim, Complex{0.0, 0.0});
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

ComplexMatrix StateVector::projector() const {
  const std::size_t d = dim();
  ComplexMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
    }
  }
  return m;
}

StateVector apply(const ComplexMatrix& u, const StateVector& psi) {
  if (u.cols() != psi.dim() || u.rows() != psi.dim()) {
    throw InputError("apply: operator dimension " + std::to_string(u.rows()) +
                     " does not match state dimension " +
                     std::to_string(psi.dim()));
  }
  std::vector<Complex> out(psi.dim(), Complex{0.0, 0.0});
  for (std::size_t r = 0; r < u.rows(); ++r) {
    for (std::size_t c = 0; c < u.cols(); ++c) out[r] += u(r, c) * psi[c];
  }
  return StateVector(std::move(out));
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square()) {
    throw InputError("DensityMatrix: matrix is not square");
  }
  n_ = qubits_for_dim(matrix_.rows());
  if (!is_hermitian(matrix_, kTolerance)) {
    throw ValidationError("DensityMatrix: matrix is not Hermitian");
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kTolerance) {
    throw ValidationError("DensityMatrix: trace " + std::to_string(tr.real()) +
                          " differs from 1");
  }
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  return DensityMatrix(psi.projector());
}

void DensityMatrix::check_positive() const {
  const double lo = min_eigenvalue(matrix_);
  if (lo < kEigenFloor) {
    throw ValidationError("DensityMatrix: minimum eigenvalue " +
                          std::to_string(lo) + " below floor");
  }
}

ComplexMatrix GateSpec::local_matrix() const {
  switch (kind) {
    case GateKind::H:
      return gates::hadamard();
    case GateKind::X:
      return gates::pauli_x();
    case GateKind::Ry:
      return gates::ry(angle);
    case GateKind::CNOT:
      return gates::cnot();
  }
  throw InputError("GateSpec: unknown gate kind");
}

GateSpec GateSpec::inverse() const {
  GateSpec g = *this;
  if (g.kind == GateKind::Ry) g.angle = -g.angle;
  return g;
}

void validate_gate(const GateSpec& g, std::size_t n) {
  const std::size_t arity = g.kind == GateKind::CNOT ? 2 : 1;
  if (g.targets.size() != arity) {
    throw InputError("gate expects " + std::to_string(arity) +
                     " target(s), got " + std::to_string(g.targets.size()));
  }
  for (std::size_t q : g.targets) {
    if (q >= n) {
      throw InputError("qubit index " + std::to_string(q) +
                       " out of range for " + std::to_string(n) + " qubits");
    }
  }
  if (arity == 2 && g.targets[0] == g.targets[1]) {
    throw InputError("CNOT control and target must differ");
  }
}

namespace {

std::size_t bit_of(std::size_t qubit, std::size_t n) {
  return std::size_t{1} << (n - 1 - qubit);
}

}  // namespace

ComplexMatrix embed_gate(const GateSpec& g, std::size_t n) {
  validate_gate(g, n);
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix out(dim, dim);
  if (g.kind == GateKind::CNOT) {
    const std::size_t cbit = bit_of(g.targets[0], n);
    const std::size_t tbit = bit_of(g.targets[1], n);
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t row = (col & cbit) ? (col ^ tbit) : col;
      out(row, col) = 1.0;
    }
    return out;
  }
  const ComplexMatrix local = g.local_matrix();
  const std::size_t bit = bit_of(g.targets[0], n);
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      if ((row & ~bit) != (col & ~bit)) continue;
      out(row, col) = local((row & bit) ? 1 : 0, (col & bit) ? 1 : 0);
    }
  }
  return out;
}

void left_multiply_gate(ComplexMatrix& m, const GateSpec& g, std::size_t n) {
  validate_gate(g, n);
  const std::size_t dim = std::size_t{1} << n;
  if (m.rows() != dim) {
    throw InputError("left_multiply_gate: matrix has " +
                     std::to_string(m.rows()) + " rows, expected " +
                     std::to_string(dim));
  }
  const std::size_t cols = m.cols();
  if (g.kind == GateKind::CNOT) {
    const std::size_t cbit = bit_of(g.targets[0], n);
    const std::size_t tbit = bit_of(g.targets[1], n);
    for (std::size_t r = 0; r < dim; ++r) {
      if ((r & cbit) && !(r & tbit)) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(m(r, c), m(r | tbit, c));
      }
    }
    return;
  }
  const ComplexMatrix local = g.local_matrix();
  const Complex g00 = local(0, 0), g01 = local(0, 1);
  const Complex g10 = local(1, 0), g11 = local(1, 1);
  const std::size_t bit = bit_of(g.targets[0], n);
  for (std::size_t r = 0; r < dim; ++r) {
    if (r & bit) continue;
    const std::size_t r1 = r | bit;
    for (std::size_t c = 0; c < cols; ++c) {
      const Complex a = m(r, c);
      const Complex b = m(r1, c);
      m(r, c) = g00 * a + g01 * b;
      m(r1, c) = g10 * a + g11 * b;
    }
  }
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim() || u.cols() != rho.dim()) {
    throw InputError("apply_unitary: operator dimension " +
                     std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                     " does not match state dimension " +
                     std::to_string(rho.dim()));
  }
  if (!is_unitary(u, 1e-10)) {
    throw ValidationError("apply_unitary: operator is not unitary");
  }
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

double pure_fidelity(const StateVector& psi, const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) {
    throw InputError("pure_fidelity: state dimension " +
                     std::to_string(psi.dim()) + " does not match " +
                     std::to_string(rho.dim()));
  }
  Complex acc{0.0, 0.0};
  const std::size_t d = psi.dim();
  for (std::size_t r = 0; r < d; ++r) {
    Complex row{0.0, 0.0};
    for (std::size_t c = 0; c < d; ++c) row += rho(r, c) * psi[c];
    acc += std::conj(psi[r]) * row;
  }
  if (std::abs(acc.imag()) >= 1e-12) {
    throw ValidationError("pure_fidelity: imaginary part " +
                          std::to_string(acc.imag()) + " is not negligible");
  }
  const double f = acc.real();
  if (f < -1e-12 || f > 1.0 + 1e-12) {
    throw ValidationError("pure_fidelity: value " + std::to_string(f) +
                          " outside [0, 1]");
  }
  return std::clamp(f, 0.0, 1.0);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!is_hermitian(m, 1e-10)) {
    throw ValidationError("hermitian_eigenvalues: matrix is not Hermitian");
  }
  const auto d = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd h(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      const auto ur = static_cast<std::size_t>(r);
      const auto uc = static_cast<std::size_t>(c);
      // Symmetrize so rounding noise in the input does not leak in.
      h(r, c) = 0.5 * (m(ur, uc) + std::conj(m(uc, ur)));
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw ValidationError("hermitian_eigenvalues: eigensolver did not converge");
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending
  return {ev.data(), ev.data() + ev.size()};
}

double min_eigenvalue(const ComplexMatrix& m) {
  if (m.rows() == 0) throw InputError("min_eigenvalue: empty matrix");
  return hermitian_eigenvalues(m).front();
}

}  // namespace qprotect
