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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "qprotect/circuits.hpp"
#include "qprotect/error.hpp"

using namespace qprotect;

namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(std::span<const Complex> a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

StateVector times(const ComplexMatrix& m, const std::vector<Complex>& v) {
  return apply(m, StateVector(v));
}

Complex overlap(const StateVector& a, const StateVector& b) {
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

}  // namespace

TEST_CASE("u_prep gate sequence") {
  const CircuitDef c = u_prep(3, 0.5);
  REQUIRE(c.gates.size() == 6);
  CHECK(c.gates[0] == GateSpec::ry(0, 0.5));
  CHECK(c.gates[1] == GateSpec::cnot(0, 1));
  CHECK(c.gates[2] == GateSpec::cnot(0, 2));
  for (std::size_t q = 0; q < 3; ++q) CHECK(c.gates[3 + q] == GateSpec::h(q));
  CHECK_THROWS_AS(u_prep(0, 0.1), InputError);
  CHECK_THROWS_AS(u_prep(kMaxQubits + 1, 0.1), InputError);
}

TEST_CASE("u_prep prepares cos|+..+> + sin|-..->") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (double theta : {0.0, kPi / 4, 2 * kPi / 3, kPi}) {
      CHECK(max_diff(prepare(u_prep(n, theta)).amplitudes(),
                     oracle::input_amplitudes(n, theta)) < 1e-12);
      const ComplexMatrix u = compile(u_prep(n, theta));
      CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) < 1e-12);
    }
  }
  // theta = 2pi/3, n = 2: (1/2)|++> + (sqrt(3)/2)|-->.
  const StateVector psi = prepare(u_prep(2, 2 * kPi / 3));
  const StateVector pp = apply(oracle::transversal(gates::hadamard(), 2),
                               StateVector::basis(2, 0));
  const StateVector mm = apply(oracle::transversal(gates::hadamard(), 2),
                               StateVector::basis(2, 3));
  CHECK(std::abs(overlap(pp, psi) - 0.5) < 1e-12);
  CHECK(std::abs(overlap(mm, psi) - std::sqrt(3.0) / 2) < 1e-12);
}

TEST_CASE("compile matches the dense oracle") {
  CHECK(max_abs_diff(compile(CircuitDef{3, {}}), ComplexMatrix::identity(8)) == 0.0);
  CHECK(max_abs_diff(compile(CircuitDef{1, {GateSpec::h(0), GateSpec::h(0)}}),
                     ComplexMatrix::identity(2)) < 1e-15);
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(max_abs_diff(compile(u_prep(n, 1.1)), oracle::u_prep_matrix(n, 1.1)) < 1e-12);
    CHECK(max_abs_diff(compile(b_op(n, -0.4)), oracle::b_matrix(n, -0.4)) < 1e-12);
    // compile == ordered product of embed_gate.
    const CircuitDef c = b_op(n, 2.2).then(u_prep(n, 0.3));
    ComplexMatrix product = ComplexMatrix::identity(std::size_t{1} << n);
    for (const auto& g : c.gates) product = embed_gate(g, n) * product;
    CHECK(max_abs_diff(compile(c), product) < 1e-12);
  }
  // Column 0 of U_prep(4, 2pi/3) holds the input-state amplitudes.
  const ComplexMatrix u = compile(u_prep(4, 2 * kPi / 3));
  const auto expected = oracle::input_amplitudes(4, 2 * kPi / 3);
  for (std::size_t r = 0; r < 16; ++r) CHECK(std::abs(u(r, 0) - expected[r]) < 1e-12);

  CircuitDef bad{2, {GateSpec::h(5)}};
  CHECK_THROWS_AS(compile(bad), InputError);
}

TEST_CASE("d_op is transversal Hadamard and self-inverse") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const ComplexMatrix d = compile(d_op(n));
    CHECK(max_abs_diff(d, oracle::transversal(gates::hadamard(), n)) < 1e-14);
    CHECK(max_abs_diff(d * d, ComplexMatrix::identity(d.rows())) < 1e-12);
  }
  const StateVector plus = prepare(d_op(1));
  CHECK(std::abs(plus[0] - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(plus[1] - 1 / std::sqrt(2.0)) < 1e-15);

  // D maps the input family to cos|0..0> + sin|1..1>.
  for (std::size_t n : {2u, 3u, 4u}) {
    for (double theta : {0.3, 2 * kPi / 3, 2.9}) {
      const StateVector out =
          times(compile(d_op(n)), oracle::input_amplitudes(n, theta));
      CHECK(max_diff(out.amplitudes(), oracle::ghz_amplitudes(n, theta)) < 1e-12);
    }
  }
}

TEST_CASE("b_op rotates within the GHZ subspace") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CHECK(max_abs_diff(compile(b_op(n, 0.0)), compile(d_op(n))) < 1e-12);
  }
  for (std::size_t n : {2u, 3u, 4u}) {
    for (double alpha : {0.0, 1.0, 2 * kPi / 3}) {
      for (double xi : {-2.5, -0.4, 0.0, 0.9, 3.0}) {
        const StateVector out =
            times(compile(b_op(n, xi)), oracle::ghz_amplitudes(n, alpha));
        CHECK(max_diff(out.amplitudes(), oracle::input_amplitudes(n, alpha + xi)) <
              1e-12);
      }
    }
  }
}

TEST_CASE("<Psi|B(xi) D|Psi> = cos(xi/2) across a grid of xi") {
  const double theta = 2 * kPi / 3;
  for (std::size_t n : {2u, 4u}) {
    const StateVector psi(oracle::input_amplitudes(n, theta));
    const ComplexMatrix d = compile(d_op(n));
    for (int i = 0; i <= 72; ++i) {
      const double xi = -2 * kPi + 4 * kPi * i / 72.0;
      const StateVector moved = apply(compile(b_op(n, xi)) * d, psi);
      CHECK(std::abs(overlap(psi, moved) - std::cos(xi / 2)) < 1e-12);
    }
  }
}

TEST_CASE("angles compose: <B(a)D Psi | B(b)D Psi> = cos((a-b)/2)") {
  const double theta = 0.8;
  for (std::size_t n : {2u, 3u}) {
    const StateVector psi(oracle::input_amplitudes(n, theta));
    const ComplexMatrix d = compile(d_op(n));
    for (double a : {-1.0, 0.2, 2.5}) {
      for (double b : {-2.0, 0.0, 1.7}) {
        const StateVector sa = apply(compile(b_op(n, a)) * d, psi);
        const StateVector sb = apply(compile(b_op(n, b)) * d, psi);
        CHECK(std::abs(overlap(sa, sb) - std::cos((a - b) / 2)) < 1e-12);
      }
    }
  }
}

TEST_CASE("x_all flips every bit") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const ComplexMatrix x = compile(x_all(n));
    CHECK(max_abs_diff(x * x, ComplexMatrix::identity(x.rows())) == 0.0);
    CHECK(max_abs_diff(x, oracle::transversal(gates::pauli_x(), n)) == 0.0);
  }
  const StateVector flipped = apply(compile(x_all(2)), StateVector::basis(2, 1));
  CHECK(flipped[2] == Complex{1.0, 0.0});
  const StateVector ghz = apply(compile(x_all(3)), StateVector(oracle::ghz_amplitudes(3, 1.0)));
  CHECK(std::abs(ghz[7] - std::cos(0.5)) < 1e-15);
  CHECK(std::abs(ghz[0] - std::sin(0.5)) < 1e-15);
}

TEST_CASE("inverse circuits") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const CircuitDef c = u_prep(n, 1.234).then(b_op(n, -0.6));
    CHECK(max_abs_diff(compile(c.then(c.inverse())),
                       ComplexMatrix::identity(std::size_t{1} << n)) < 1e-12);
    CHECK(max_abs_diff(compile(c.inverse()), compile(c).adjoint()) < 1e-12);
  }
  CHECK_THROWS_AS(d_op(2).then(d_op(3)), InputError);
}
