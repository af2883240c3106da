// SPDX-License-Identifier: Apache-2.0

#ifndef LUQ_INVARIANTS_HPP
#define LUQ_INVARIANTS_HPP

#include <vector>

#include "luq/state.hpp"

namespace luq {

/// Labeled multiset of trace-power invariants. `tag` is the family
/// letter; `pivot` disambiguates the pure-tripartite cut (0 for
/// bipartite and mixed-tripartite families, 1..3 otherwise).
struct InvariantSet {
  char tag = '?';
  int pivot = 0;
  /// Tr(ρ^γ) (or K_γ); global[γ-1] holds power γ.
  std::vector<double> global;
  /// Outer branch eigenvalues, descending; the pairing key.
  std::vector<double> weights;
  /// Trace-power vector per outer branch.
  std::vector<std::vector<double>> per_branch;
  /// Inner-layer pairing weights (αⱼⁱ), by outer branch. Empty except for
  /// the mixed-tripartite families.
  std::vector<std::vector<double>> inner_weights;
  /// Trace-power vector per inner branch, by outer branch.
  std::vector<std::vector<std::vector<double>>> per_inner;
};

enum class BipartiteVariant { A, B };
enum class SideVariant { Left, Right };
enum class Mixed3Variant { G, H };

/// Invariant sets (a)/(b) for a bipartite mixed state.
InvariantSet invariants_bipartite(const MixedState& state,
                                  BipartiteVariant variant);

/// Invariant sets (c)/(d), (e)/(f) and the pivot-3 analogue for a
/// tripartite pure state. Left = the I_α family, Right = the J_β family;
/// the K_γ globals are always included.
InvariantSet invariants_pure3(const PureState& state, int pivot,
                              SideVariant variant);

/// Invariant sets (g)/(h) for a tripartite mixed state. The
/// global power range runs to KMN (a superset of the stated MN, still LU
/// invariant); the θ²³ powers are capped at K.
InvariantSet invariants_mixed3(const MixedState& state, Mixed3Variant variant);

}  // namespace luq

#endif  // LUQ_INVARIANTS_HPP
