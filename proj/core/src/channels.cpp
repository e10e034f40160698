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

#include "qprotect/channels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qprotect/error.hpp"

namespace qprotect {

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::AmplitudeDamping:
      return "amplitude-damping";
    case ChannelKind::Dephasing:
      return "dephasing";
    case ChannelKind::Depolarizing:
      return "depolarizing";
  }
  return "unknown";
}

std::optional<ChannelKind> parse_channel_kind(std::string_view name) {
  if (name == "amplitude-damping" || name == "damping" || name == "amp") {
    return ChannelKind::AmplitudeDamping;
  }
  if (name == "dephasing" || name == "deph") return ChannelKind::Dephasing;
  if (name == "depolarizing" || name == "depol") {
    return ChannelKind::Depolarizing;
  }
  return std::nullopt;
}

double KrausChannel::completeness_error() const {
  ComplexMatrix sum(2, 2);
  for (const auto& a : kraus_) sum += a.adjoint() * a;
  return max_abs_diff(sum, ComplexMatrix::identity(2));
}

ComplexMatrix KrausChannel::apply_local(const ComplexMatrix& rho) const {
  ComplexMatrix out(2, 2);
  for (const auto& a : kraus_) out += a * rho * a.adjoint();
  return out;
}

KrausChannel make_channel(ChannelKind kind, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError("channel strength p=" + std::to_string(p) +
                     " outside [0, 1]");
  }
  std::vector<ComplexMatrix> kraus;
  switch (kind) {
    case ChannelKind::AmplitudeDamping:
      kraus.push_back({{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}});
      kraus.push_back({{0.0, std::sqrt(p)}, {0.0, 0.0}});
      break;
    case ChannelKind::Dephasing:
      kraus.push_back(std::sqrt(1.0 - p) * gates::identity2());
      kraus.push_back({{std::sqrt(p), 0.0}, {0.0, 0.0}});
      kraus.push_back({{0.0, 0.0}, {0.0, std::sqrt(p)}});
      break;
    case ChannelKind::Depolarizing: {
      const double w = std::sqrt(p / 4.0);
      kraus.push_back(std::sqrt(1.0 - 0.75 * p) * gates::identity2());
      kraus.push_back(w * gates::pauli_x());
      kraus.push_back(w * gates::pauli_y());
      kraus.push_back(w * gates::pauli_z());
      break;
    }
  }
  return KrausChannel(kind, p, std::move(kraus));
}

ComplexMatrix apply_kraus_on_qubit(const ComplexMatrix& rho,
                                   std::span<const ComplexMatrix> kraus,
                                   std::size_t qubit, std::size_t n) {
  const std::size_t dim = std::size_t{1} << n;
  if (rho.rows() != dim || rho.cols() != dim) {
    throw InputError("apply_kraus_on_qubit: operator is not " +
                     std::to_string(dim) + "x" + std::to_string(dim));
  }
  if (qubit >= n) {
    throw InputError("apply_kraus_on_qubit: qubit " + std::to_string(qubit) +
                     " out of range for " + std::to_string(n) + " qubits");
  }
  const std::size_t bit = std::size_t{1} << (n - 1 - qubit);
  ComplexMatrix out(dim, dim);
  // Each 2x2 block indexed by the target bit of (row, col) transforms as
  // A block A^dagger; blocks are labelled by the remaining bits.
  for (std::size_t r0 = 0; r0 < dim; ++r0) {
    if (r0 & bit) continue;
    for (std::size_t c0 = 0; c0 < dim; ++c0) {
      if (c0 & bit) continue;
      const std::size_t rs[2] = {r0, r0 | bit};
      const std::size_t cs[2] = {c0, c0 | bit};
      Complex block[2][2];
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) block[i][j] = rho(rs[i], cs[j]);
      }
      for (const auto& a : kraus) {
        Complex tmp[2][2];
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            tmp[i][j] = a(i, 0) * block[0][j] + a(i, 1) * block[1][j];
          }
        }
        for (int i = 0; i < 2; ++i) {
          for (int j = 0; j < 2; ++j) {
            out(rs[i], cs[j]) += tmp[i][0] * std::conj(a(j, 0)) +
                                 tmp[i][1] * std::conj(a(j, 1));
          }
        }
      }
    }
  }
  return out;
}

DensityMatrix apply_product_channel(const DensityMatrix& rho,
                                    const KrausChannel& ch,
                                    std::span<const std::size_t> order) {
  const std::size_t n = rho.num_qubits();
  std::vector<bool> seen(n, false);
  if (order.size() != n) {
    throw InputError("apply_product_channel: order must list every qubit once");
  }
  for (std::size_t q : order) {
    if (q >= n || seen[q]) {
      throw InputError("apply_product_channel: order is not a permutation");
    }
    seen[q] = true;
  }
  ComplexMatrix m = rho.matrix();
  for (std::size_t q : order) m = apply_kraus_on_qubit(m, ch.kraus(), q, n);
  return DensityMatrix(std::move(m));
}

DensityMatrix apply_product_channel(const DensityMatrix& rho,
                                    const KrausChannel& ch) {
  std::vector<std::size_t> order(rho.num_qubits());
  for (std::size_t q = 0; q < order.size(); ++q) order[q] = q;
  return apply_product_channel(rho, ch, order);
}

ComplexMatrix choi_matrix(const KrausChannel& ch) {
  ComplexMatrix choi(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      ComplexMatrix unit(2, 2);
      unit(i, j) = 1.0;
      choi += tensor(unit, ch.apply_local(unit));
    }
  }
  return choi;
}

}  // namespace qprotect
