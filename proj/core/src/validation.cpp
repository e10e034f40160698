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

#include "qprotect/validation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "qprotect/channels.hpp"
#include "qprotect/circuits.hpp"
#include "qprotect/harness.hpp"
#include "qprotect/rng.hpp"
#include "qprotect/schemes.hpp"

namespace qprotect {

DensityMatrix random_density_matrix(std::size_t n, std::uint64_t seed) {
  const std::size_t d = std::size_t{1} << n;
  SplitMix64 rng(seed);
  ComplexMatrix g(d, d);
  for (auto& z : g.data()) z = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= 1.0 / tr;
  // Exact Hermitian symmetry after rounding.
  for (std::size_t r = 0; r < d; ++r) {
    rho(r, r) = rho(r, r).real();
    for (std::size_t c = r + 1; c < d; ++c) rho(c, r) = std::conj(rho(r, c));
  }
  return DensityMatrix(std::move(rho));
}

namespace {

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

// Every Kraus product A_{k1} (x) ... (x) A_{kn} applied to the whole register.
ComplexMatrix full_register_kraus_sum(const ComplexMatrix& rho,
                                      const KrausChannel& ch, std::size_t n) {
  const auto kraus = ch.kraus();
  const std::size_t m = kraus.size();
  std::size_t combos = 1;
  for (std::size_t q = 0; q < n; ++q) combos *= m;
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t idx = 0; idx < combos; ++idx) {
    ComplexMatrix a = ComplexMatrix::identity(1);
    std::size_t rest = idx;
    for (std::size_t q = 0; q < n; ++q) {
      a = tensor(a, kraus[rest % m]);
      rest /= m;
    }
    out += a * rho * a.adjoint();
  }
  return out;
}

CheckResult guarded(std::string name,
                    const std::function<std::pair<bool, std::string>()>& body) {
  try {
    auto [ok, detail] = body();
    return {std::move(name), ok, std::move(detail)};
  } catch (const std::exception& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

std::vector<CheckResult> run_self_checks() {
  const auto grid101 = make_p_grid(0.0, 1.0, 101);
  std::vector<CheckResult> results;

  results.push_back(guarded("kraus-completeness", [&] {
    double worst = 0.0;
    for (ChannelKind k : kAllChannelKinds) {
      for (double p : grid101) {
        worst = std::max(worst, make_channel(k, p).completeness_error());
      }
    }
    return std::pair{worst <= 1e-12, "max deviation " + sci(worst)};
  }));

  results.push_back(guarded("choi-positivity", [&] {
    double lowest = 1.0;
    for (ChannelKind k : kAllChannelKinds) {
      for (double p : grid101) {
        lowest = std::min(lowest, min_eigenvalue(choi_matrix(make_channel(k, p))));
      }
    }
    return std::pair{lowest >= -1e-10, "min eigenvalue " + sci(lowest)};
  }));

  results.push_back(guarded("product-channel-oracle", [&] {
    double worst = 0.0;
    SplitMix64 draw(0x5eed);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t n = 1 + draw() % 3;
      const ChannelKind k = kAllChannelKinds[draw() % 3];
      const double p = draw.uniform();
      const DensityMatrix rho = random_density_matrix(n, draw());
      const KrausChannel ch = make_channel(k, p);
      worst = std::max(worst,
                       max_abs_diff(apply_product_channel(rho, ch).matrix(),
                                    full_register_kraus_sum(rho.matrix(), ch, n)));
    }
    return std::pair{worst <= 1e-10, "max entry deviation " + sci(worst)};
  }));

  results.push_back(guarded("compiled-circuits", [&] {
    double worst = 0.0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (const CircuitDef& c :
           {u_prep(n, 0.7), b_op(n, -1.3), d_op(n), x_all(n)}) {
        ComplexMatrix product = ComplexMatrix::identity(std::size_t{1} << n);
        for (const auto& g : c.gates) product = embed_gate(g, n) * product;
        const ComplexMatrix compiled = compile(c);
        worst = std::max(worst, max_abs_diff(compiled, product));
        worst = std::max(
            worst, max_abs_diff(compiled * compiled.adjoint(),
                                ComplexMatrix::identity(compiled.rows())));
      }
      worst = std::max(worst, max_abs_diff(compile(b_op(n, 0.0)),
                                           compile(d_op(n))));
    }
    return std::pair{worst <= 1e-12, "max entry deviation " + sci(worst)};
  }));

  results.push_back(guarded("input-state", [&] {
    double worst = 0.0;
    for (std::size_t n = 1; n <= 6; ++n) {
      for (double theta : {0.0, std::numbers::pi / 4, kDefaultTheta,
                           std::numbers::pi}) {
        const StateVector psi = input_state(n, theta);
        const double c = std::cos(theta / 2.0);
        const double s = std::sin(theta / 2.0);
        const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
        for (std::size_t b = 0; b < psi.dim(); ++b) {
          const int parity = std::popcount(b) % 2;
          const double expected = amp * (c + (parity ? -s : s));
          worst = std::max(worst, std::abs(psi[b] - Complex{expected, 0.0}));
        }
      }
    }
    return std::pair{worst <= 1e-12, "max amplitude deviation " + sci(worst)};
  }));

  results.push_back(guarded("zero-strength-identity", [&] {
    double worst = 0.0;
    for (std::size_t n : {2u, 4u}) {
      const StateVector psi = input_state(n, kDefaultTheta);
      for (Scheme s : kAllSchemes) {
        for (ChannelKind k : kAllChannelKinds) {
          const auto inst = resolve_scheme(s, k, n, kDefaultTheta, 0.0);
          const double f =
              pure_fidelity(psi, run_protected(inst, make_channel(k, 0.0), psi));
          worst = std::max(worst, std::abs(1.0 - f));
        }
      }
    }
    return std::pair{worst <= 1e-12, "max |1 - F| " + sci(worst)};
  }));

  results.push_back(guarded("coll-coll-exactness", [&] {
    double worst = 0.0;
    for (std::size_t n : {2u, 4u}) {
      const StateVector psi = input_state(n, kDefaultTheta);
      for (ChannelKind k : kAllChannelKinds) {
        const auto inst =
            resolve_scheme(Scheme::CollectiveCollective, k, n, kDefaultTheta, 0.0);
        for (double p : make_p_grid(0.0, 1.0, kDefaultGridPoints)) {
          const double f =
              pure_fidelity(psi, run_protected(inst, make_channel(k, p), psi));
          const double expected =
              k == ChannelKind::Depolarizing
                  ? std::pow(1.0 - p / 2.0, static_cast<double>(n))
                  : 1.0;
          worst = std::max(worst, std::abs(f - expected));
        }
      }
    }
    return std::pair{worst <= 1e-12, "max deviation " + sci(worst)};
  }));

  return results;
}

}  // namespace qprotect
