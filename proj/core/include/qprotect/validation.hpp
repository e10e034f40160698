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

#include <cstdint>
#include <string>
#include <vector>

#include "qprotect/qmath.hpp"

namespace qprotect {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Random full-rank density matrix (normalized G G^dagger, G with uniform
/// entries in the unit square) on n qubits.
DensityMatrix random_density_matrix(std::size_t n, std::uint64_t seed);

/// Built-in invariant suite: Kraus completeness, Choi positivity, product
/// channel against the full-register Kraus sum, compiled circuits against
/// embedded-gate products, input-state amplitudes, and the zero-strength and
/// coll-coll identities.
std::vector<CheckResult> run_self_checks();

}  // namespace qprotect
