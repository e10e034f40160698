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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "qprotect/circuits.hpp"
#include "qprotect/error.hpp"
#include "qprotect/estimation.hpp"
#include "qprotect/rng.hpp"
#include "qprotect/schemes.hpp"
#include "qprotect/validation.hpp"

using namespace qprotect;

namespace {

constexpr double kTheta = 2 * std::numbers::pi / 3;

DensityMatrix maximally_mixed(std::size_t n) {
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix m = ComplexMatrix::identity(d);
  m *= Complex{1.0 / static_cast<double>(d), 0.0};
  return DensityMatrix(m);
}

}  // namespace

TEST_CASE("SplitMix64 reference stream") {
  // First outputs for seed 0, as published with the generator.
  SplitMix64 g(0);
  CHECK(g() == 0xe220a8397b1dcdafULL);
  CHECK(g() == 0x6e789e6aa1b965f4ULL);
  CHECK(g() == 0x06c45d188009454fULL);
  SplitMix64 u(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("point seeds differ across coordinates") {
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 5; ++s)
    for (std::uint64_t k = 0; k < 3; ++k)
      for (std::uint64_t i = 0; i < 21; ++i) seeds.push_back(point_seed(7, s, k, i));
  std::sort(seeds.begin(), seeds.end());
  CHECK(std::adjacent_find(seeds.begin(), seeds.end()) == seeds.end());
  CHECK(point_seed(7, 1, 2, 3) == point_seed(7, 1, 2, 3));
  CHECK(point_seed(7, 1, 2, 3) != point_seed(8, 1, 2, 3));
  CHECK(hash64({1, 2}) != hash64({2, 1}));
}

TEST_CASE("sample_outcomes") {
  const std::vector<double> point{0.0, 0.0, 1.0, 0.0};
  const auto c = sample_outcomes(point, 500, 3);
  CHECK(c == std::vector<std::uint64_t>{0, 0, 500, 0});

  const std::vector<double> even{0.5, 0.5};
  const auto e = sample_outcomes(even, 1000000, 11);
  CHECK(e[0] + e[1] == 1000000);
  CHECK(std::abs(static_cast<double>(e[0]) - 500000.0) < 5000.0);

  CHECK(sample_outcomes(even, 1000, 5) == sample_outcomes(even, 1000, 5));
  CHECK(sample_outcomes(even, 1000, 5) != sample_outcomes(even, 1000, 6));

  // Rounding-level negatives are tolerated.
  const std::vector<double> tiny{1.0 + 1e-13, -1e-13};
  CHECK(sample_outcomes(tiny, 100, 1)[0] == 100);

  const std::vector<double> negative{1.1, -0.1};
  CHECK_THROWS_AS(sample_outcomes(negative, 10, 1), ValidationError);
  const std::vector<double> short_mass{0.4, 0.4};
  CHECK_THROWS_AS(sample_outcomes(short_mass, 10, 1), ValidationError);
}

TEST_CASE("fidelity_exact") {
  const StateVector psi = input_state(2, kTheta);
  const auto est = fidelity_exact(psi, DensityMatrix::from_pure(psi));
  CHECK(est.exact());
  CHECK(est.std_error == 0.0);
  CHECK(!est.seed.has_value());
  CHECK(std::abs(est.value - 1.0) < 1e-12);
  CHECK(std::abs(fidelity_exact(psi, maximally_mixed(2)).value - 0.25) < 1e-12);
}

TEST_CASE("sampled fidelity of a pure input is exactly one") {
  for (std::size_t n : {1u, 2u, 4u}) {
    const StateVector psi = input_state(n, kTheta);
    const auto est = fidelity_sampled(u_prep(n, kTheta), DensityMatrix::from_pure(psi),
                                      2000, 99);
    CHECK(est.value == 1.0);
    CHECK(est.std_error == 0.0);
    CHECK(est.shots == 2000);
    CHECK(est.seed == 99u);
  }
}

TEST_CASE("sampled fidelity of the maximally mixed state") {
  const auto est = fidelity_sampled(u_prep(2, kTheta), maximally_mixed(2), 100000, 4);
  CHECK(std::abs(est.value - 0.25) < 4 * est.std_error);
  CHECK(std::abs(est.std_error - std::sqrt(est.value * (1 - est.value) / 1e5)) < 1e-15);
}

TEST_CASE("sampled estimate input errors") {
  const StateVector psi = input_state(2, kTheta);
  CHECK_THROWS_AS(fidelity_sampled(u_prep(2, kTheta), DensityMatrix::from_pure(psi), 0, 1),
                  InputError);
  CHECK_THROWS_AS(fidelity_sampled(u_prep(3, kTheta), DensityMatrix::from_pure(psi), 10, 1),
                  InputError);
}

TEST_CASE("sampled estimates cover the exact value") {
  // Random mixed states: 4-sigma coverage on each, and the reported standard
  // error against the spread over many seeds.
  for (std::uint64_t s = 0; s < 10; ++s) {
    const DensityMatrix rho = random_density_matrix(2, 1000 + s);
    const double exact = fidelity_exact(input_state(2, kTheta), rho).value;
    const auto est = fidelity_sampled(u_prep(2, kTheta), rho, 20000, s);
    CHECK(std::abs(est.value - exact) <= 4 * est.std_error + 1e-12);
  }

  const DensityMatrix rho = random_density_matrix(2, 77);
  const double exact = fidelity_exact(input_state(2, kTheta), rho).value;
  std::vector<double> values;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    values.push_back(fidelity_sampled(u_prep(2, kTheta), rho, 2000, seed).value);
  }
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / 200.0;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  const double spread = std::sqrt(var / 199.0);
  const double predicted = std::sqrt(exact * (1 - exact) / 2000.0);
  CHECK(spread < 1.3 * predicted);
  CHECK(spread > predicted / 1.3);
  CHECK(std::abs(mean - exact) < 4 * predicted / std::sqrt(200.0));
}

TEST_CASE("error shrinks with shot count") {
  const DensityMatrix rho = random_density_matrix(2, 5);
  const double exact = fidelity_exact(input_state(2, kTheta), rho).value;
  double previous = 1.0;
  for (std::size_t shots : {100u, 10000u, 1000000u}) {
    const auto est = fidelity_sampled(u_prep(2, kTheta), rho, shots, 8);
    CHECK(est.std_error < previous);
    CHECK(std::abs(est.value - exact) <= 4 * est.std_error + 1e-12);
    previous = est.std_error;
  }
}
