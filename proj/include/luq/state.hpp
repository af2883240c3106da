// SPDX-License-Identifier: Apache-2.0

#ifndef LUQ_STATE_HPP
#define LUQ_STATE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "luq/complex_matrix.hpp"
#include "luq/linalg.hpp"

namespace luq {

/// Pure state over 2 or 3 labeled subsystems. Amplitudes are stored in
/// row-major multi-index order: (i,j,k) ↦ i·(M·N) + j·N + k.
class PureState {
public:
  PureState(std::vector<std::size_t> dims, std::vector<cplx> amplitudes);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const std::vector<cplx>& amplitudes() const { return amps_; }
  std::size_t arity() const { return dims_.size(); }
  std::size_t total_dim() const;

private:
  std::vector<std::size_t> dims_;
  std::vector<cplx> amps_;
};

/// Unit-trace positive-semidefinite density matrix with its subsystem
/// dimension signature.
class MixedState {
public:
  MixedState(std::vector<std::size_t> dims, ComplexMatrix matrix);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t arity() const { return dims_.size(); }

  static MixedState projector(const PureState& psi);

private:
  std::vector<std::size_t> dims_;
  ComplexMatrix mat_;
};

/// Per-eigenbranch reduced matrix families: the λᵢ (or αⱼⁱ) weights with
/// the ρ-type matrices on the left and the θ-type matrices on the right.
struct ReducedFamily {
  std::vector<double> weights;
  std::vector<ComplexMatrix> left;
  std::vector<ComplexMatrix> right;
};

/// Matricization of a 3-party pure state. pivot selects the cut:
/// 1 → 1-23 (K×MN), 2 → 2-13 (M×KN), 3 → 3-12 (N×KM). Column composite
/// indices follow the row-major rule on the remaining subsystems in their
/// original order.
ComplexMatrix unfold(const PureState& state, int pivot);

/// M×N coefficient matrix of a bipartite pure state.
ComplexMatrix unfold_bipartite(const PureState& state);

/// Reduced density matrix on the kept subsystems (row-major composite
/// ordering preserved). keep holds 1-based labels.
ComplexMatrix partial_trace(const MixedState& state,
                            const std::vector<int>& keep);

/// Spectral decomposition of a density matrix into weighted orthonormal
/// pure branches; branches below the zero cutoff are dropped, weights
/// descending, branch phases fixed deterministically.
std::vector<std::pair<double, PureState>> spectral_branches(
    const MixedState& state);

/// Spectral-branch family for a bipartite mixed state: left[i] = Tr₂|νᵢ⟩⟨νᵢ|,
/// right[i] = (Tr₁|νᵢ⟩⟨νᵢ|)*.
ReducedFamily reduced_family_bipartite(const MixedState& state);

/// Pivot-cut reduction of a 3-party pure state: tau is the partial trace
/// over the pivot subsystem as a 2-party mixed state; the family comes
/// from tau's spectral branches.
std::pair<MixedState, ReducedFamily> reduced_family_pure3(
    const PureState& state, int pivot);

struct Mixed3Hierarchy {
  ReducedFamily outer;               // left: θᵢ²³ (K×K); right: ρᵢ (MN×MN)
  std::vector<ReducedFamily> inner;  // inner[i]: ξⱼⁱ (M×M), ηⱼⁱ (N×N)
};

/// Two-level reduction of a tripartite mixed state via the 1-23 unfolding
/// of each spectral branch.
Mixed3Hierarchy mixed3_hierarchy(const MixedState& state);

PureState apply_local_unitary(const PureState& state,
                              const std::vector<ComplexMatrix>& factors);
MixedState apply_local_unitary(const MixedState& state,
                               const std::vector<ComplexMatrix>& factors);

/// Descending singular values of the bipartite unfolding.
std::vector<double> schmidt_coefficients(const PureState& state);

}  // namespace luq

#endif  // LUQ_STATE_HPP
