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
#include <string_view>

#include "qprotect/channels.hpp"
#include "qprotect/qmath.hpp"

namespace qprotect {

enum class Scheme {
  Unprotected,
  IndividualIndividual,
  IndividualCollective,
  CollectiveIndividual,
  CollectiveCollective,
};

inline constexpr std::array<Scheme, 5> kAllSchemes = {
    Scheme::Unprotected, Scheme::IndividualIndividual,
    Scheme::IndividualCollective, Scheme::CollectiveIndividual,
    Scheme::CollectiveCollective};

/// "unprotected", "ind-ind", "ind-coll", "coll-ind", "coll-coll".
std::string_view to_string(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

/// True for the two mixed schemes, whose collective operator takes an angle.
bool uses_xi(Scheme scheme);

/// How the bit-flip modification for amplitude damping composes with D and
/// B(xi).
///
/// CircuitOrder applies D, then X^n for pre-processing, and X^n, then B(xi)
/// for post-processing. This moves the dominant amplitude of the input family
/// onto |0...0>, the damping fixed point. MatrixOrder reads the products as
/// matrices (X^n first for D); on the input family with even n that prefix is
/// a global phase, so the modification has no effect there.
enum class DampingModification { CircuitOrder, MatrixOrder };

/// Resolved pre/post-processing pair.
struct SchemeInstance {
  Scheme scheme = Scheme::Unprotected;
  std::size_t n = 0;
  double theta = 0.0;
  double xi = 0.0;
  ChannelKind channel_kind = ChannelKind::Dephasing;
  ComplexMatrix u;  // pre-processing
  ComplexMatrix v;  // post-processing
};

/// Protected input state cos(theta/2)|+..+> + sin(theta/2)|-..->.
StateVector input_state(std::size_t n, double theta);

/// Builds (U, V):
///
///   scheme      U              V
///   ind-ind     D              D
///   ind-coll    D              B(xi)
///   coll-ind    B(xi)^dagger   D
///   coll-coll   U_prep^dagger  U_prep
///
/// For amplitude damping every scheme but coll-coll uses the bit-flipped
/// operators: pre D -> X^n D, post B(xi) -> B(xi) X^n, and their adjoints
/// where D or B appear on the other side.
SchemeInstance resolve_scheme(
    Scheme scheme, ChannelKind kind, std::size_t n, double theta, double xi,
    DampingModification modification = DampingModification::CircuitOrder);

/// V E[U |psi><psi| U^dagger] V^dagger with E the n-fold product channel.
/// Throws InputError if the channel kind or dimensions do not match.
DensityMatrix run_protected(const SchemeInstance& inst, const KrausChannel& ch,
                            const StateVector& psi_in);

}  // namespace qprotect
