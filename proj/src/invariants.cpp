// SPDX-License-Identifier: Apache-2.0

#include "luq/invariants.hpp"

namespace luq {

namespace {

// Trace-power vector Tr(A^k), k = 1..max_power, through the spectrum.
std::vector<double> trace_powers(const ComplexMatrix& m, unsigned max_power) {
  SpectralData sd = eig_hermitian(m);
  std::vector<double> out(max_power);
  for (unsigned k = 1; k <= max_power; ++k)
    out[k - 1] = power_sum(sd.eigenvalues, k);
  return out;
}

std::vector<double> global_powers(const ComplexMatrix& rho,
                                  unsigned max_power) {
  return trace_powers(rho, max_power);
}

}  // namespace

InvariantSet invariants_bipartite(const MixedState& state,
                                  BipartiteVariant variant) {
  if (state.arity() != 2) {
    throw Error(ErrorCode::WrongArity,
                "invariants_bipartite needs a 2-party state");
  }
  const std::size_t M = state.dims()[0];
  const std::size_t N = state.dims()[1];
  ReducedFamily fam = reduced_family_bipartite(state);

  InvariantSet s;
  s.tag = variant == BipartiteVariant::A ? 'a' : 'b';
  s.global = global_powers(state.matrix(), static_cast<unsigned>(M * N));
  s.weights = fam.weights;
  const auto& mats = variant == BipartiteVariant::A ? fam.left : fam.right;
  const unsigned max_power =
      static_cast<unsigned>(variant == BipartiteVariant::A ? M : N);
  for (const ComplexMatrix& m : mats)
    s.per_branch.push_back(trace_powers(m, max_power));
  return s;
}

InvariantSet invariants_pure3(const PureState& state, int pivot,
                              SideVariant variant) {
  auto [tau, fam] = reduced_family_pure3(state, pivot);
  const std::size_t left_dim = tau.dims()[0];
  const std::size_t right_dim = tau.dims()[1];

  InvariantSet s;
  switch (pivot) {
    case 1: s.tag = variant == SideVariant::Left ? 'c' : 'd'; break;
    case 2: s.tag = variant == SideVariant::Left ? 'e' : 'f'; break;
    default: s.tag = variant == SideVariant::Left ? 'c' : 'd'; break;
  }
  s.pivot = pivot;
  s.global = global_powers(tau.matrix(),
                           static_cast<unsigned>(left_dim * right_dim));
  s.weights = fam.weights;
  const auto& mats = variant == SideVariant::Left ? fam.left : fam.right;
  const unsigned max_power = static_cast<unsigned>(
      variant == SideVariant::Left ? left_dim : right_dim);
  for (const ComplexMatrix& m : mats)
    s.per_branch.push_back(trace_powers(m, max_power));
  return s;
}

InvariantSet invariants_mixed3(const MixedState& state,
                               Mixed3Variant variant) {
  if (state.arity() != 3) {
    throw Error(ErrorCode::WrongArity,
                "invariants_mixed3 needs a 3-party state");
  }
  const std::size_t K = state.dims()[0];
  const std::size_t M = state.dims()[1];
  const std::size_t N = state.dims()[2];
  Mixed3Hierarchy h = mixed3_hierarchy(state);

  InvariantSet s;
  s.tag = variant == Mixed3Variant::G ? 'g' : 'h';
  s.global = global_powers(state.matrix(), static_cast<unsigned>(K * M * N));
  s.weights = h.outer.weights;

  // θᵢ²³ is K×K, so its powers are capped at K; higher powers are
  // redundant by Cayley–Hamilton.
  const unsigned outer_power = static_cast<unsigned>(
      variant == Mixed3Variant::G ? M : K);
  const unsigned inner_power = static_cast<unsigned>(
      variant == Mixed3Variant::G ? M : N);
  const auto& outer_mats =
      variant == Mixed3Variant::G ? h.outer.right : h.outer.left;
  for (const ComplexMatrix& m : outer_mats)
    s.per_branch.push_back(trace_powers(m, outer_power));

  for (const ReducedFamily& inner : h.inner) {
    s.inner_weights.push_back(inner.weights);
    const auto& mats =
        variant == Mixed3Variant::G ? inner.left : inner.right;
    std::vector<std::vector<double>> rows;
    for (const ComplexMatrix& m : mats)
      rows.push_back(trace_powers(m, inner_power));
    s.per_inner.push_back(std::move(rows));
  }
  return s;
}

}  // namespace luq
