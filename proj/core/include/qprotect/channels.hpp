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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qprotect/qmath.hpp"

namespace qprotect {

enum class ChannelKind { AmplitudeDamping, Dephasing, Depolarizing };

inline constexpr std::array<ChannelKind, 3> kAllChannelKinds = {
    ChannelKind::AmplitudeDamping, ChannelKind::Dephasing,
    ChannelKind::Depolarizing};

/// "amplitude-damping", "dephasing", "depolarizing".
std::string_view to_string(ChannelKind kind);
std::optional<ChannelKind> parse_channel_kind(std::string_view name);

/// Single-qubit decoherence channel at strength p, as a Kraus set.
class KrausChannel {
 public:
  ChannelKind kind() const { return kind_; }
  double strength() const { return p_; }
  std::span<const ComplexMatrix> kraus() const { return kraus_; }

  /// Largest entry of |sum_k A_k^dagger A_k - I|.
  double completeness_error() const;

  /// The 2x2 map applied to a single-qubit operator.
  ComplexMatrix apply_local(const ComplexMatrix& rho) const;

  friend KrausChannel make_channel(ChannelKind kind, double p);

 private:
  KrausChannel(ChannelKind kind, double p, std::vector<ComplexMatrix> kraus)
      : kind_(kind), p_(p), kraus_(std::move(kraus)) {}

  ChannelKind kind_;
  double p_;
  std::vector<ComplexMatrix> kraus_;
};

/// Kraus sets:
///   amplitude damping  {[[1,0],[0,sqrt(1-p)]], [[0,sqrt(p)],[0,0]]}
///   dephasing          {sqrt(1-p) I, sqrt(p) |0><0|, sqrt(p) |1><1|}
///   depolarizing       {sqrt(1-3p/4) I, sqrt(p/4) X, sqrt(p/4) Y, sqrt(p/4) Z}
/// Throws InputError unless p is in [0, 1].
KrausChannel make_channel(ChannelKind kind, double p);

/// sum_k A_k rho A_k^dagger with A_k acting on `qubit` only.
ComplexMatrix apply_kraus_on_qubit(const ComplexMatrix& rho,
                                   std::span<const ComplexMatrix> kraus,
                                   std::size_t qubit, std::size_t n);

/// The n-fold product channel, applied qubit by qubit from 0 to n-1.
DensityMatrix apply_product_channel(const DensityMatrix& rho,
                                    const KrausChannel& ch);

/// Same map, visiting qubits in the given order (a permutation of 0..n-1).
DensityMatrix apply_product_channel(const DensityMatrix& rho,
                                    const KrausChannel& ch,
                                    std::span<const std::size_t> order);

/// 4x4 Choi operator sum_ij |i><j| (x) E(|i><j|).
ComplexMatrix choi_matrix(const KrausChannel& ch);

}  // namespace qprotect
