// SPDX-License-Identifier: Apache-2.0

#ifndef LUQ_ZOO_HPP
#define LUQ_ZOO_HPP

#include <string>
#include <utility>
#include <vector>

#include "luq/state.hpp"

namespace luq {

enum class FamilyId {
  Gamma0Even,   // pair-swapped permutation branches, even local dimension
  Gamma0Odd,    // the |φ⟩ pattern with diagonal fixed point, odd dimension
  TriPPair,     // K=2, M=N=3 pure pair with Schmidt weights (p, 1-p)
  TriAbcPair,   // K=M=N=3 pure pair with Schmidt weights (α, β, γ)
  TriMixed,     // orthogonal-branch tripartite mixture
};

FamilyId parse_family_id(const std::string& name);
const char* family_id_name(FamilyId id);

struct FamilySpec {
  FamilyId family;
  std::size_t local_dim = 0;     // gamma0 families only
  std::vector<double> weights;   // strictly positive, sum 1

  void validate() const;
};

/// Bipartite constructions: mixtures of maximally entangled permutation
/// branches. Rank 2 or 3 according to the weight count.
MixedState build_gamma0(const FamilySpec& spec);

/// Tripartite pure example pairs; both members land in the pivot-1
/// commutation class by construction.
std::pair<PureState, PureState> build_tripartite_pair(const FamilySpec& spec);

/// Regression input for the mixed-tripartite class: a mixture of mutually
/// orthogonal branches obtained by shifting a tripartite family state on
/// the first subsystem. Membership is asserted at construction.
MixedState build_tripartite_mixed(const FamilySpec& spec);

}  // namespace luq

#endif  // LUQ_ZOO_HPP
