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

#include "qprotect/circuits.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "qprotect/error.hpp"

namespace qprotect {

namespace {

void require_qubits(std::size_t n, const char* who) {
  if (n < 1) throw InputError(std::string(who) + ": need at least one qubit");
  if (n > kMaxQubits) {
    throw InputError(std::string(who) + ": " + std::to_string(n) +
                     " qubits exceeds the dense-matrix limit of " +
                     std::to_string(kMaxQubits));
  }
}

void append_transversal(CircuitDef& c, GateKind kind) {
  for (std::size_t q = 0; q < c.n; ++q) c.gates.push_back({kind, 0.0, {q}});
}

}  // namespace

CircuitDef CircuitDef::inverse() const {
  CircuitDef out{n, {}};
  out.gates.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    out.gates.push_back(it->inverse());
  }
  return out;
}

CircuitDef CircuitDef::then(const CircuitDef& later) const {
  if (later.n != n) {
    throw InputError("CircuitDef::then: qubit counts " + std::to_string(n) +
                     " and " + std::to_string(later.n) + " differ");
  }
  CircuitDef out = *this;
  out.gates.insert(out.gates.end(), later.gates.begin(), later.gates.end());
  return out;
}

CircuitDef u_prep(std::size_t n, double theta) {
  require_qubits(n, "u_prep");
  CircuitDef c{n, {}};
  c.gates.push_back(GateSpec::ry(0, theta));
  for (std::size_t k = 1; k < n; ++k) c.gates.push_back(GateSpec::cnot(0, k));
  append_transversal(c, GateKind::H);
  return c;
}

CircuitDef d_op(std::size_t n) {
  require_qubits(n, "d_op");
  CircuitDef c{n, {}};
  append_transversal(c, GateKind::H);
  return c;
}

CircuitDef b_op(std::size_t n, double xi) {
  require_qubits(n, "b_op");
  CircuitDef c{n, {}};
  for (std::size_t k = 1; k < n; ++k) c.gates.push_back(GateSpec::cnot(0, k));
  c.gates.push_back(GateSpec::ry(0, xi));
  for (std::size_t k = n - 1; k >= 1; --k) c.gates.push_back(GateSpec::cnot(0, k));
  append_transversal(c, GateKind::H);
  return c;
}

CircuitDef x_all(std::size_t n) {
  require_qubits(n, "x_all");
  CircuitDef c{n, {}};
  append_transversal(c, GateKind::X);
  return c;
}

ComplexMatrix compile(const CircuitDef& c) {
  ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << c.n);
  for (const auto& g : c.gates) left_multiply_gate(m, g, c.n);
  return m;
}

StateVector prepare(const CircuitDef& c) {
  ComplexMatrix column(std::size_t{1} << c.n, 1);
  column(0, 0) = 1.0;
  for (const auto& g : c.gates) left_multiply_gate(column, g, c.n);
  auto data = column.data();
  return StateVector(std::vector<Complex>(data.begin(), data.end()));
}

}  // namespace qprotect
