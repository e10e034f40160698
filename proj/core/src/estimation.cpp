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

#include "qprotect/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qprotect/error.hpp"
#include "qprotect/rng.hpp"

namespace qprotect {

FidelityEstimate fidelity_exact(const StateVector& psi_in,
                                const DensityMatrix& rho_out) {
  FidelityEstimate est;
  est.value = pure_fidelity(psi_in, rho_out);
  return est;
}

std::vector<std::uint64_t> sample_outcomes(std::span<const double> probabilities,
                                           std::size_t shots,
                                           std::uint64_t seed) {
  constexpr double kClampFloor = -1e-10;
  if (probabilities.empty()) {
    throw InputError("sample_outcomes: empty distribution");
  }
  std::vector<double> cdf(probabilities.size());
  double total = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    if (!(p >= kClampFloor)) {
      throw ValidationError("sample_outcomes: probability " +
                            std::to_string(p) + " at outcome " +
                            std::to_string(i) + " is negative");
    }
    total += std::max(p, 0.0);
    cdf[i] = total;
  }
  if (std::abs(total - 1.0) > 1e-6) {
    throw ValidationError("sample_outcomes: total probability " +
                          std::to_string(total) + " differs from 1");
  }
  for (double& c : cdf) c /= total;

  // Outcomes past the last one with nonzero mass are unreachable.
  std::size_t last = cdf.size() - 1;
  while (last > 0 && cdf[last - 1] >= 1.0) --last;

  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  SplitMix64 rng(seed);
  const auto begin = cdf.begin();
  const auto end = cdf.begin() + static_cast<std::ptrdiff_t>(last);
  for (std::size_t s = 0; s < shots; ++s) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(begin, end, u);
    ++counts[static_cast<std::size_t>(it - begin)];
  }
  return counts;
}

FidelityEstimate fidelity_sampled(const CircuitDef& psi_prep,
                                  const DensityMatrix& rho_out,
                                  std::size_t shots, std::uint64_t seed) {
  if (shots == 0) throw InputError("fidelity_sampled: shots must be >= 1");
  if (psi_prep.n != rho_out.num_qubits()) {
    throw InputError("fidelity_sampled: preparation acts on " +
                     std::to_string(psi_prep.n) + " qubits, state has " +
                     std::to_string(rho_out.num_qubits()));
  }
  const ComplexMatrix prep = compile(psi_prep);
  const ComplexMatrix sigma = prep.adjoint() * rho_out.matrix() * prep;
  std::vector<double> born(sigma.rows());
  for (std::size_t k = 0; k < born.size(); ++k) born[k] = sigma(k, k).real();

  const auto counts = sample_outcomes(born, shots, seed);
  FidelityEstimate est;
  est.shots = shots;
  est.seed = seed;
  est.value = static_cast<double>(counts[0]) / static_cast<double>(shots);
  est.std_error =
      std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(shots));
  return est;
}

}  // namespace qprotect
