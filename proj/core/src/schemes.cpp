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

#include "qprotect/schemes.hpp"

#include <cmath>
#include <string>

#include "qprotect/circuits.hpp"
#include "qprotect/error.hpp"

namespace qprotect {

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::Unprotected:
      return "unprotected";
    case Scheme::IndividualIndividual:
      return "ind-ind";
    case Scheme::IndividualCollective:
      return "ind-coll";
    case Scheme::CollectiveIndividual:
      return "coll-ind";
    case Scheme::CollectiveCollective:
      return "coll-coll";
  }
  return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  for (Scheme s : kAllSchemes) {
    if (name == to_string(s)) return s;
  }
  if (name == "none") return Scheme::Unprotected;
  return std::nullopt;
}

bool uses_xi(Scheme scheme) {
  return scheme == Scheme::IndividualCollective ||
         scheme == Scheme::CollectiveIndividual;
}

StateVector input_state(std::size_t n, double theta) {
  return prepare(u_prep(n, theta));
}

SchemeInstance resolve_scheme(Scheme scheme, ChannelKind kind, std::size_t n,
                              double theta, double xi,
                              DampingModification modification) {
  if (!std::isfinite(theta) || !std::isfinite(xi)) {
    throw InputError("resolve_scheme: theta and xi must be finite");
  }
  SchemeInstance inst;
  inst.scheme = scheme;
  inst.n = n;
  inst.theta = theta;
  inst.xi = uses_xi(scheme) ? xi : 0.0;
  inst.channel_kind = kind;

  if (scheme == Scheme::Unprotected) {
    d_op(n);  // validates n
    inst.u = ComplexMatrix::identity(std::size_t{1} << n);
    inst.v = inst.u;
    return inst;
  }
  if (scheme == Scheme::CollectiveCollective) {
    inst.v = compile(u_prep(n, theta));
    inst.u = inst.v.adjoint();
    return inst;
  }

  // Pre-processing individual operator and post-processing collective one.
  CircuitDef pre_individual = d_op(n);
  CircuitDef post_collective = b_op(n, inst.xi);
  if (kind == ChannelKind::AmplitudeDamping) {
    if (modification == DampingModification::CircuitOrder) {
      pre_individual = pre_individual.then(x_all(n));
      post_collective = x_all(n).then(post_collective);
    } else {
      pre_individual = x_all(n).then(pre_individual);
      post_collective = post_collective.then(x_all(n));
    }
  }

  switch (scheme) {
    case Scheme::IndividualIndividual:
      inst.u = compile(pre_individual);
      inst.v = inst.u.adjoint();
      break;
    case Scheme::IndividualCollective:
      inst.u = compile(pre_individual);
      inst.v = compile(post_collective);
      break;
    case Scheme::CollectiveIndividual:
      inst.u = compile(post_collective).adjoint();
      inst.v = compile(pre_individual).adjoint();
      break;
    default:
      break;
  }
  return inst;
}

DensityMatrix run_protected(const SchemeInstance& inst, const KrausChannel& ch,
                            const StateVector& psi_in) {
  if (ch.kind() != inst.channel_kind) {
    throw InputError("run_protected: scheme resolved for " +
                     std::string(to_string(inst.channel_kind)) +
                     " but channel is " + std::string(to_string(ch.kind())));
  }
  if (psi_in.dim() != inst.u.rows()) {
    throw InputError("run_protected: input state has dimension " +
                     std::to_string(psi_in.dim()) + ", scheme expects " +
                     std::to_string(inst.u.rows()));
  }
  const DensityMatrix rho_in = DensityMatrix::from_pure(psi_in);
  const DensityMatrix noisy =
      apply_product_channel(apply_unitary(rho_in, inst.u), ch);
  return apply_unitary(noisy, inst.v);
}

}  // namespace qprotect
