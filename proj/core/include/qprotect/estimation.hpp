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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qprotect/circuits.hpp"
#include "qprotect/qmath.hpp"

namespace qprotect {

/// Input-output fidelity, exact or shot-sampled.
struct FidelityEstimate {
  double value = 0.0;
  double std_error = 0.0;  // 0 in exact mode
  std::size_t shots = 0;  // 0 in exact mode
  std::optional<std::uint64_t> seed;  // set in sampled mode only

  bool exact() const { return shots == 0; }
};

/// <psi_in|rho_out|psi_in>.
FidelityEstimate fidelity_exact(const StateVector& psi_in,
                                const DensityMatrix& rho_out);

/// Multinomial outcome counts for `shots` draws from `probabilities`.
///
/// Entries down to -1e-10 are treated as rounding noise and clamped to zero;
/// the distribution is then renormalized. Throws ValidationError if the total
/// mass differs from 1 by more than 1e-6 or an entry is more negative than
/// the clamp floor. Deterministic in (probabilities, shots, seed).
std::vector<std::uint64_t> sample_outcomes(std::span<const double> probabilities,
                                           std::size_t shots,
                                           std::uint64_t seed);

/// Shot estimate following the readout protocol: undo the preparation
/// circuit, measure in the computational basis, and report the fraction of
/// all-zeros outcomes. Throws InputError for shots == 0.
FidelityEstimate fidelity_sampled(const CircuitDef& psi_prep,
                                  const DensityMatrix& rho_out,
                                  std::size_t shots, std::uint64_t seed);

}  // namespace qprotect
