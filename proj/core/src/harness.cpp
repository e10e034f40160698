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

#include "qprotect/harness.hpp"

#include <cmath>
#include <exception>
#include <optional>
#include <string>

#include "qprotect/circuits.hpp"
#include "qprotect/error.hpp"
#include "qprotect/estimation.hpp"
#include "qprotect/parallel.hpp"
#include "qprotect/rng.hpp"
#include "qprotect/version.hpp"

namespace qprotect {

std::vector<double> make_p_grid(double start, double stop, std::size_t count) {
  if (count == 0) throw InputError("p grid: count must be >= 1");
  if (count == 1) return {start};
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Interpolate from both ends so the endpoints are exact.
    const double t = static_cast<double>(i) / static_cast<double>(count - 1);
    grid[i] = i + 1 == count ? stop : start + (stop - start) * t;
  }
  return grid;
}

void validate(const SweepConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxQubits) {
    throw InputError("sweep: n=" + std::to_string(cfg.n) + " outside [1, " +
                     std::to_string(kMaxQubits) + "]");
  }
  if (!std::isfinite(cfg.theta)) throw InputError("sweep: theta is not finite");
  if (cfg.kinds.empty()) throw InputError("sweep: no channel kinds selected");
  if (cfg.schemes.empty()) throw InputError("sweep: no schemes selected");
  if (cfg.p_grid.empty()) throw InputError("sweep: p grid is empty");
  for (std::size_t i = 0; i < cfg.p_grid.size(); ++i) {
    const double p = cfg.p_grid[i];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InputError("sweep: p=" + std::to_string(p) + " outside [0, 1]");
    }
    if (i > 0 && !(p > cfg.p_grid[i - 1])) {
      throw InputError("sweep: p grid must be strictly increasing");
    }
  }
  if (cfg.mode == EstimationMode::Sampled && cfg.shots == 0) {
    throw InputError("sweep: shots must be >= 1 in sampled mode");
  }
}

SweepResult run_sweep(const SweepConfig& cfg) {
  validate(cfg);
  const std::size_t n_schemes = cfg.schemes.size();
  const std::size_t n_kinds = cfg.kinds.size();
  const std::size_t n_p = cfg.p_grid.size();
  const std::size_t total = n_schemes * n_kinds * n_p;

  const StateVector psi = input_state(cfg.n, cfg.theta);
  const CircuitDef prep = u_prep(cfg.n, cfg.theta);

  std::vector<std::optional<FidelityPoint>> points(total);
  std::vector<std::string> errors(total);

  parallel_for(total, cfg.width, [&](std::size_t task) {
    const std::size_t pi = task % n_p;
    const std::size_t ki = (task / n_p) % n_kinds;
    const std::size_t si = task / (n_p * n_kinds);
    const Scheme scheme = cfg.schemes[si];
    const ChannelKind kind = cfg.kinds[ki];
    const double p = cfg.p_grid[pi];
    try {
      double xi = 0.0;
      if (cfg.optimize_xi && uses_xi(scheme)) {
        xi = optimize_xi_exact(
                 {scheme, kind, p, cfg.n, cfg.theta, cfg.modification})
                 .xi_star;
      }
      const SchemeInstance inst =
          resolve_scheme(scheme, kind, cfg.n, cfg.theta, xi, cfg.modification);
      const DensityMatrix rho = run_protected(inst, make_channel(kind, p), psi);
      FidelityEstimate est;
      if (cfg.mode == EstimationMode::Exact) {
        est = fidelity_exact(psi, rho);
      } else {
        const std::uint64_t seed =
            point_seed(cfg.base_seed, static_cast<std::uint64_t>(scheme),
                       static_cast<std::uint64_t>(kind), pi);
        est = fidelity_sampled(prep, rho, cfg.shots, seed);
      }
      points[task] = FidelityPoint{p, est.value, est.std_error, xi};
    } catch (const std::exception& e) {
      errors[task] = e.what();
    }
  });

  SweepResult result;
  for (std::size_t si = 0; si < n_schemes; ++si) {
    for (std::size_t ki = 0; ki < n_kinds; ++ki) {
      FidelityCurve curve;
      curve.scheme = cfg.schemes[si];
      curve.kind = cfg.kinds[ki];
      curve.n = cfg.n;
      curve.theta = cfg.theta;
      curve.metadata.mode = cfg.mode;
      curve.metadata.shots =
          cfg.mode == EstimationMode::Sampled ? cfg.shots : 0;
      curve.metadata.base_seed = cfg.base_seed;
      curve.metadata.tool_version = kVersion;
      for (std::size_t pi = 0; pi < n_p; ++pi) {
        const std::size_t task = (si * n_kinds + ki) * n_p + pi;
        if (points[task]) {
          curve.points.push_back(*points[task]);
        } else {
          result.failures.push_back(
              {curve.scheme, curve.kind, cfg.p_grid[pi], errors[task]});
        }
      }
      result.curves.push_back(std::move(curve));
    }
  }
  return result;
}

}  // namespace qprotect
