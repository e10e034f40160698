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

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qprotect {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
///
/// Register operators on n qubits are 2^n x 2^n. Qubit 0 is the leftmost
/// tensor factor, i.e. the most significant bit of a basis index.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Complex> data() { return data_; }
  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_unitary(const ComplexMatrix& u, double tol);
bool is_hermitian(const ComplexMatrix& m, double tol);

/// Number of qubits for a register dimension; throws InputError if dim is
/// not a power of two (dim 1 maps to 0 qubits).
std::size_t qubits_for_dim(std::size_t dim);

/// Kronecker product: (a (x) b)[i*db+k, j*db+l] = a[i,j] * b[k,l].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

namespace gates {
ComplexMatrix identity2();
ComplexMatrix hadamard();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
/// [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]]
ComplexMatrix ry(double angle);
/// 4x4 CNOT with the control on the left factor.
ComplexMatrix cnot();
}  // namespace gates

/// Normalized pure state on n qubits.
class StateVector {
 public:
  /// Throws ValidationError unless the squared norm is 1 within 1e-12.
  explicit StateVector(std::vector<Complex> amplitudes);

  static StateVector basis(std::size_t n, std::size_t index);

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  /// |psi><psi|
  ComplexMatrix projector() const;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> amplitudes_;
};

/// u * psi. u must be unitary for the result to be normalized.
StateVector apply(const ComplexMatrix& u, const StateVector& psi);

/// Hermitian, unit-trace operator on n qubits.
///
/// Construction checks Hermiticity and trace (both within 1e-12). The
/// eigenvalue floor is an O(d^3) check and is done on request through
/// `check_positive`.
class DensityMatrix {
 public:
  static constexpr double kTolerance = 1e-12;
  static constexpr double kEigenFloor = -1e-10;

  explicit DensityMatrix(ComplexMatrix m);
  static DensityMatrix from_pure(const StateVector& psi);

  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return matrix_(r, c);
  }

  /// Throws ValidationError if the smallest eigenvalue is below kEigenFloor.
  void check_positive() const;

 private:
  std::size_t n_ = 0;
  ComplexMatrix matrix_;
};

enum class GateKind { H, X, Ry, CNOT };

/// Elementary gate bound to qubit indices (control first for CNOT).
struct GateSpec {
  GateKind kind = GateKind::H;
  double angle = 0.0;  // radians, Ry only
  std::vector<std::size_t> targets;

  static GateSpec h(std::size_t q) { return {GateKind::H, 0.0, {q}}; }
  static GateSpec x(std::size_t q) { return {GateKind::X, 0.0, {q}}; }
  static GateSpec ry(std::size_t q, double angle) {
    return {GateKind::Ry, angle, {q}};
  }
  static GateSpec cnot(std::size_t control, std::size_t target) {
    return {GateKind::CNOT, 0.0, {control, target}};
  }

  /// The gate's own 2x2 or 4x4 matrix.
  ComplexMatrix local_matrix() const;
  /// Inverse gate (Ry negates its angle; the others are self-inverse).
  GateSpec inverse() const;

  friend bool operator==(const GateSpec&, const GateSpec&) = default;
};

/// Throws InputError if the gate's arity or indices are invalid for n.
void validate_gate(const GateSpec& g, std::size_t n);

/// 2^n-dimensional unitary acting as g on its targets and as identity
/// elsewhere.
ComplexMatrix embed_gate(const GateSpec& g, std::size_t n);

/// m <- G m, with G the embedded gate, computed in O(4^n) without forming G.
void left_multiply_gate(ComplexMatrix& m, const GateSpec& g, std::size_t n);

/// u rho u^dagger. Throws ValidationError if u is not unitary within 1e-10
/// and InputError on a dimension mismatch.
DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

/// <psi|rho|psi>, clamped to [0, 1].
double pure_fidelity(const StateVector& psi, const DensityMatrix& rho);

/// Smallest eigenvalue of a Hermitian matrix. Throws ValidationError if m is
/// not Hermitian within 1e-10.
double min_eigenvalue(const ComplexMatrix& m);

/// All eigenvalues in ascending order; same method and preconditions as
/// min_eigenvalue.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace qprotect
