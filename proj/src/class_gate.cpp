// SPDX-License-Identifier: Apache-2.0

#include "luq/class_gate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace luq {

namespace {

double relative_commutator_norm(const ComplexMatrix& a,
                                const ComplexMatrix& b) {
  const double scale =
      std::max(1.0, a.frobenius_norm() * b.frobenius_norm());
  return commutator(a, b).frobenius_norm() / scale;
}

struct GateAccumulator {
  double max_comm = 0.0;
  double min_margin = std::numeric_limits<double>::infinity();
  std::optional<std::pair<int, int>> worst_pair;

  void commutation(const std::vector<ComplexMatrix>& mats) {
    for (std::size_t i = 0; i < mats.size(); ++i)
      for (std::size_t j = i + 1; j < mats.size(); ++j)
        record(relative_commutator_norm(mats[i], mats[j]),
               static_cast<int>(i), static_cast<int>(j));
  }

  void cross_commutation(const std::vector<ComplexMatrix>& xs, int tag_x,
                         const std::vector<ComplexMatrix>& ys, int tag_y) {
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < ys.size(); ++j)
        record(relative_commutator_norm(xs[i], ys[j]), tag_x, tag_y);
  }

  void record(double norm, int i, int j) {
    if (norm > max_comm) {
      max_comm = norm;
      worst_pair = {i, j};
    }
  }

  void full_rank(const ComplexMatrix& m) {
    SpectralData sd = eig_hermitian(m);
    const double top = sd.eigenvalues.empty() ? 0.0 : sd.eigenvalues.front();
    const double bottom = sd.eigenvalues.empty() ? 0.0 : sd.eigenvalues.back();
    const double margin =
        top > 0.0 ? std::max(0.0, bottom) / (kRankCutoff * top) : 0.0;
    min_margin = std::min(min_margin, margin);
  }

  MembershipReport report(double tol) const {
    MembershipReport r;
    r.max_commutator_norm = max_comm;
    r.min_rank_margin =
        std::isinf(min_margin) ? 0.0 : min_margin;
    r.verdict = max_comm <= tol && r.min_rank_margin >= 1.0;
    if (!r.verdict && max_comm > tol) r.failing_pair = worst_pair;
    return r;
  }
};

MembershipReport gate_family(const ReducedFamily& fam, double tol) {
  GateAccumulator acc;
  acc.commutation(fam.left);
  acc.commutation(fam.right);
  for (const ComplexMatrix& m : fam.left) acc.full_rank(m);
  return acc.report(tol);
}

}  // namespace

MembershipReport check_gamma0(const MixedState& state, double tol) {
  if (state.arity() != 2) {
    throw Error(ErrorCode::WrongArity, "check_gamma0 needs a 2-party state");
  }
  return gate_family(reduced_family_bipartite(state), tol);
}

MembershipReport check_gamma_pure3(const PureState& state, int pivot,
                                   double tol) {
  auto [tau, fam] = reduced_family_pure3(state, pivot);
  return gate_family(fam, tol);
}

MembershipReport check_gamma_mixed3(const MixedState& state, double tol) {
  if (state.arity() != 3) {
    throw Error(ErrorCode::WrongArity, "check_gamma_mixed3 needs 3 parties");
  }
  const std::size_t K = state.dims()[0];
  if (K > state.dims()[1] || K > state.dims()[2]) {
    throw Error(ErrorCode::DimensionOrder,
                "requires K <= M and K <= N");
  }

  Mixed3Hierarchy h = mixed3_hierarchy(state);
  GateAccumulator acc;
  acc.commutation(h.outer.right);  // the ρᵢ
  acc.commutation(h.outer.left);   // the θᵢ²³
  for (const ComplexMatrix& m : h.outer.left) acc.full_rank(m);

  // The inner condition quantifies over all pairs (i,t),(k,l), including i = k.
  for (std::size_t i = 0; i < h.inner.size(); ++i) {
    for (std::size_t k = i; k < h.inner.size(); ++k) {
      if (i == k) {
        acc.commutation(h.inner[i].left);
        acc.commutation(h.inner[i].right);
      } else {
        acc.cross_commutation(h.inner[i].left, static_cast<int>(i),
                              h.inner[k].left, static_cast<int>(k));
        acc.cross_commutation(h.inner[i].right, static_cast<int>(i),
                              h.inner[k].right, static_cast<int>(k));
      }
    }
    for (const ComplexMatrix& xi : h.inner[i].left) acc.full_rank(xi);
  }
  return acc.report(tol);
}

}  // namespace luq
