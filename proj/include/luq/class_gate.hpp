// SPDX-License-Identifier: Apache-2.0

#ifndef LUQ_CLASS_GATE_HPP
#define LUQ_CLASS_GATE_HPP

#include <optional>
#include <utility>

#include "luq/state.hpp"

namespace luq {

/// Default relative tolerance for the commutation tests.
inline constexpr double kDefaultGateTol = 1e-10;
/// Full-rank test: smallest eigenvalue > kRankCutoff · largest.
inline constexpr double kRankCutoff = 1e-10;

struct MembershipReport {
  bool verdict = false;
  /// Largest relative commutator norm ‖[A,B]‖_F / max(1, ‖A‖_F·‖B‖_F).
  double max_commutator_norm = 0.0;
  /// Smallest λ_min / (kRankCutoff·λ_max) over the rank-checked matrices;
  /// full rank everywhere iff ≥ 1.
  double min_rank_margin = 0.0;
  std::optional<std::pair<int, int>> failing_pair;
};

/// Γ₀ membership for a bipartite mixed state: pairwise commutation within
/// {ρᵢ} and within {θᵢ}, with every ρᵢ full rank.
MembershipReport check_gamma0(const MixedState& state,
                              double tol = kDefaultGateTol);

/// Γ₁/Γ₂/Γ₃ membership for a tripartite pure state (pivot 1/2/3).
MembershipReport check_gamma_pure3(const PureState& state, int pivot,
                                   double tol = kDefaultGateTol);

/// Γ membership for a tripartite mixed state: outer commutation among
/// {ρᵢ} and {θᵢ²³} with θᵢ²³ full rank, plus cross-branch commutation of
/// all ξ and η with every ξₜⁱ full rank.
MembershipReport check_gamma_mixed3(const MixedState& state,
                                    double tol = kDefaultGateTol);

}  // namespace luq

#endif  // LUQ_CLASS_GATE_HPP
