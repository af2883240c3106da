// SPDX-License-Identifier: Apache-2.0

#ifndef LUQ_JUDGE_HPP
#define LUQ_JUDGE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "luq/class_gate.hpp"
#include "luq/invariants.hpp"
#include "luq/state.hpp"

namespace luq {

/// Default absolute tolerance for invariant comparison (values ≤ 1).
inline constexpr double kDefaultCompareTol = 1e-9;
/// find_lu_witness succeeds when best overlap ≥ 1 − kWitnessTol.
inline constexpr double kWitnessTol = 1e-6;

enum class ClassTag { Gamma0, Gamma1, Gamma2, Gamma3, Gamma };

const char* class_tag_name(ClassTag tag);

struct ComparisonResult {
  bool equal = false;
  double worst_mismatch = 0.0;
  /// pairing[i] = index of the y-branch matched with x-branch i.
  std::vector<int> pairing;
};

enum class Decision { Equivalent, Inequivalent, NotInClass, Indeterminate };

const char* decision_name(Decision d);

struct Verdict {
  Decision decision = Decision::Indeterminate;
  double evidence = 0.0;  // worst invariant mismatch observed
  std::vector<int> pairing;
  ClassTag class_checked = ClassTag::Gamma0;
};

struct WitnessResult {
  bool found = false;
  std::optional<std::vector<ComplexMatrix>> factors;
  double overlap = 0.0;  // in [0, 1]
  int restarts_used = 0;
};

/// Elementwise comparison of two invariant sets. Branches are paired by
/// descending weight; branches inside a degenerate weight cluster (gap
/// ≤ tol) are matched by optimal assignment over trace-power vectors.
ComparisonResult compare_invariants(const InvariantSet& x,
                                    const InvariantSet& y,
                                    double tol = kDefaultCompareTol);

/// Complete-invariant decision. Both variants of the class's invariant family
/// are computed and must agree; disagreement yields Indeterminate.
Verdict decide_equivalence(const MixedState& s1, const MixedState& s2,
                           ClassTag tag, double tol = kDefaultCompareTol,
                           double gate_tol = kDefaultGateTol);
Verdict decide_equivalence(const PureState& s1, const PureState& s2,
                           ClassTag tag, double tol = kDefaultCompareTol,
                           double gate_tol = kDefaultGateTol);

/// Alternating-maximization search for an explicit local-unitary witness,
/// with closed-form per-factor polar updates and seeded random restarts.
WitnessResult find_lu_witness(const PureState& s1, const PureState& s2,
                              int budget = 64, std::uint64_t seed = 0);
WitnessResult find_lu_witness(const MixedState& s1, const MixedState& s2,
                              int budget = 64, std::uint64_t seed = 0);

/// Σ|min(λ, 0)| over the eigenvalues of the partial transpose across the
/// cut; positive negativity certifies NPPT entanglement. `cut` holds the
/// 1-based labels of one side of the bipartition.
double negativity(const MixedState& state, const std::vector<int>& cut);

}  // namespace luq

#endif  // LUQ_JUDGE_HPP
