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
#include <string_view>
#include <vector>

#include "qprotect/channels.hpp"
#include "qprotect/estimation.hpp"
#include "qprotect/schemes.hpp"

namespace qprotect {

enum class EstimationMode { Exact, Sampled };

std::string_view to_string(EstimationMode mode);

/// One scalar problem: maximize the input-output fidelity over xi.
struct XiProblem {
  Scheme scheme = Scheme::IndividualCollective;
  ChannelKind kind = ChannelKind::Dephasing;
  double p = 0.0;
  std::size_t n = 2;
  double theta = 0.0;
  DampingModification modification = DampingModification::CircuitOrder;
};

struct XiOptimum {
  double xi_star = 0.0;  // in [-pi, pi)
  double f_star = 0.0;
  EstimationMode mode = EstimationMode::Exact;
  std::size_t evaluations = 0;
};

struct CalibrationPoint {
  double xi = 0.0;
  FidelityEstimate estimate;
};

struct Calibration {
  XiOptimum optimum;
  std::vector<CalibrationPoint> curve;
};

/// Maps any angle to [-pi, pi).
double wrap_angle(double xi);

/// Exact fidelity of the protected pipeline at angle xi. Accepts any scheme;
/// schemes without a collective angle ignore xi.
double xi_objective(const XiProblem& problem, double xi);

/// Uniform grid of `grid_points` angles over [-pi, pi), then golden-section
/// refinement on the bracket around the best grid point until the bracket is
/// narrower than `tolerance`. Throws InputError for schemes that take no
/// angle or p outside [0, 1].
XiOptimum optimize_xi_exact(const XiProblem& problem,
                            std::size_t grid_points = 181,
                            double tolerance = 1e-6);

/// Shot-sampled calibration curve over a uniform grid on [-pi, pi); the
/// optimum is the grid argmax. Grid point i uses seed hash64({seed, i}), so
/// the curve is reproducible regardless of `width` (worker threads, 0 = all
/// hardware threads).
Calibration calibrate_xi_sampled(const XiProblem& problem, std::size_t shots,
                                 std::uint64_t seed,
                                 std::size_t grid_points = 181,
                                 std::size_t width = 1);

}  // namespace qprotect
