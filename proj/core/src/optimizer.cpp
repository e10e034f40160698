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

#include "qprotect/optimizer.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qprotect/circuits.hpp"
#include "qprotect/error.hpp"
#include "qprotect/parallel.hpp"
#include "qprotect/rng.hpp"

namespace qprotect {

namespace {

constexpr double kPi = std::numbers::pi;

void check_problem(const XiProblem& problem, const char* who) {
  if (!uses_xi(problem.scheme)) {
    throw InputError(std::string(who) + ": scheme " +
                     std::string(to_string(problem.scheme)) +
                     " has no collective angle to optimize");
  }
  if (!(problem.p >= 0.0 && problem.p <= 1.0)) {
    throw InputError(std::string(who) + ": p=" + std::to_string(problem.p) +
                     " outside [0, 1]");
  }
}

double grid_angle(std::size_t i, std::size_t points) {
  return -kPi + 2.0 * kPi * static_cast<double>(i) / static_cast<double>(points);
}

}  // namespace

std::string_view to_string(EstimationMode mode) {
  return mode == EstimationMode::Exact ? "exact" : "sampled";
}

double wrap_angle(double xi) {
  double w = xi - 2.0 * kPi * std::floor((xi + kPi) / (2.0 * kPi));
  // Rounding can land exactly on +pi.
  if (w >= kPi) w -= 2.0 * kPi;
  return w;
}

double xi_objective(const XiProblem& problem, double xi) {
  const StateVector psi = input_state(problem.n, problem.theta);
  const SchemeInstance inst =
      resolve_scheme(problem.scheme, problem.kind, problem.n, problem.theta, xi,
                     problem.modification);
  const KrausChannel ch = make_channel(problem.kind, problem.p);
  return fidelity_exact(psi, run_protected(inst, ch, psi)).value;
}

XiOptimum optimize_xi_exact(const XiProblem& problem, std::size_t grid_points,
                            double tolerance) {
  check_problem(problem, "optimize_xi_exact");
  if (grid_points < 3) {
    throw InputError("optimize_xi_exact: grid_points must be >= 3");
  }
  if (!(tolerance > 0.0)) {
    throw InputError("optimize_xi_exact: tolerance must be positive");
  }

  XiOptimum best;
  best.mode = EstimationMode::Exact;
  std::size_t best_index = 0;
  best.f_star = -1.0;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const double f = xi_objective(problem, grid_angle(i, grid_points));
    ++best.evaluations;
    if (f > best.f_star) {
      best.f_star = f;
      best_index = i;
    }
  }
  best.xi_star = grid_angle(best_index, grid_points);

  const double step = 2.0 * kPi / static_cast<double>(grid_points);
  double a = best.xi_star - step;
  double b = best.xi_star + step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = xi_objective(problem, c);
  double fd = xi_objective(problem, d);
  best.evaluations += 2;
  while (b - a >= tolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = xi_objective(problem, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = xi_objective(problem, d);
    }
    ++best.evaluations;
  }

  const double refined = wrap_angle(0.5 * (a + b));
  const double f_refined = xi_objective(problem, refined);
  ++best.evaluations;
  if (f_refined >= best.f_star) {
    best.xi_star = refined;
    best.f_star = f_refined;
  }
  return best;
}

Calibration calibrate_xi_sampled(const XiProblem& problem, std::size_t shots,
                                 std::uint64_t seed, std::size_t grid_points,
                                 std::size_t width) {
  check_problem(problem, "calibrate_xi_sampled");
  if (shots == 0) throw InputError("calibrate_xi_sampled: shots must be >= 1");
  if (grid_points < 3) {
    throw InputError("calibrate_xi_sampled: grid_points must be >= 3");
  }

  const StateVector psi = input_state(problem.n, problem.theta);
  const CircuitDef prep = u_prep(problem.n, problem.theta);
  const KrausChannel ch = make_channel(problem.kind, problem.p);

  Calibration cal;
  cal.curve.resize(grid_points);
  parallel_for(grid_points, width, [&](std::size_t i) {
    const double xi = grid_angle(i, grid_points);
    const SchemeInstance inst =
        resolve_scheme(problem.scheme, problem.kind, problem.n, problem.theta,
                       xi, problem.modification);
    const DensityMatrix rho = run_protected(inst, ch, psi);
    cal.curve[i] = {xi, fidelity_sampled(prep, rho, shots, hash64({seed, i}))};
  });

  cal.optimum.mode = EstimationMode::Sampled;
  cal.optimum.evaluations = grid_points;
  cal.optimum.f_star = -1.0;
  for (const auto& pt : cal.curve) {
    if (pt.estimate.value > cal.optimum.f_star) {
      cal.optimum.f_star = pt.estimate.value;
      cal.optimum.xi_star = pt.xi;
    }
  }
  return cal;
}

}  // namespace qprotect
