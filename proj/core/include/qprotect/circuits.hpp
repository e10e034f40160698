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

#include <cstddef>
#include <vector>

#include "qprotect/qmath.hpp"

namespace qprotect {

/// Largest register the structured circuits will build (dense 2^n x 2^n).
inline constexpr std::size_t kMaxQubits = 10;

/// Gate sequence on n qubits, applied left to right in time.
struct CircuitDef {
  std::size_t n = 0;
  std::vector<GateSpec> gates;

  /// Reversed sequence of inverse gates.
  CircuitDef inverse() const;
  /// This circuit followed by `later`. Qubit counts must agree.
  CircuitDef then(const CircuitDef& later) const;
};

/// Ry(theta) on qubit 0, CNOT(0,k) for k = 1..n-1, then H on every qubit.
/// Maps |0...0> to cos(theta/2)|+...+> + sin(theta/2)|-...->.
CircuitDef u_prep(std::size_t n, double theta);

/// Transversal Hadamard, H (x) ... (x) H.
CircuitDef d_op(std::size_t n);

/// Collective operation B(xi): the CNOT ladder rooted at qubit 0, Ry(xi) on
/// qubit 0, the ladder undone, then transversal Hadamards.
///
/// On the subspace spanned by |0...0> and |1...1> the ladder parks the
/// amplitude on qubit 0, so B(xi) rotates cos(a/2)|0..0> + sin(a/2)|1..1>
/// into cos((a+xi)/2)|+..+> + sin((a+xi)/2)|-..->. B(0) equals d_op(n).
CircuitDef b_op(std::size_t n, double xi);

/// X on every qubit.
CircuitDef x_all(std::size_t n);

/// Product of embedded gates in time order (later gates on the left).
/// Throws InputError for an invalid gate.
ComplexMatrix compile(const CircuitDef& c);

/// compile(c) applied to |0...0>.
StateVector prepare(const CircuitDef& c);

}  // namespace qprotect
