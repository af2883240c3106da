// SPDX-License-Identifier: Apache-2.0

#include "luq/judge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace luq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double vector_mismatch(const std::vector<double>& a,
                       const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::ShapeMismatch, "invariant vector lengths differ");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Pair two weight-sorted branch lists, matching branches inside each
// degenerate weight cluster by brute-force optimal assignment on the
// trace-power vectors. Returns the worst per-pair mismatch; the pairing
// comes back through `pairing`.
double pair_branches(const std::vector<double>& wx,
                     const std::vector<std::vector<double>>& vx,
                     const std::vector<double>& wy,
                     const std::vector<std::vector<double>>& vy, double tol,
                     std::vector<int>& pairing) {
  if (wx.size() != wy.size()) return kInf;
  // Weights-only sets (no per-branch vectors) pair purely by weight.
  const bool with_vectors = !vx.empty() || !vy.empty();
  if (with_vectors && (vx.size() != wx.size() || vy.size() != wy.size())) {
    throw Error(ErrorCode::ShapeMismatch,
                "per-branch invariant count does not match the weight count");
  }
  const std::size_t n = wx.size();
  pairing.assign(n, -1);
  double worst = 0.0;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && wx[end - 1] - wx[end] <= tol) ++end;
    const std::size_t len = end - start;
    if (len > 8) {
      throw Error(ErrorCode::Internal, "degenerate cluster too large to pair");
    }
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    double best = kInf;
    std::vector<int> best_perm = perm;
    do {
      double cost = 0.0;
      for (std::size_t i = 0; i < len; ++i) {
        const std::size_t xi = start + i;
        const std::size_t yi = start + perm[i];
        cost = std::max(cost, std::abs(wx[xi] - wy[yi]));
        if (with_vectors) cost = std::max(cost, vector_mismatch(vx[xi], vy[yi]));
      }
      if (cost < best) {
        best = cost;
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t i = 0; i < len; ++i)
      pairing[start + i] = static_cast<int>(start + best_perm[i]);
    worst = std::max(worst, best);
    start = end;
  }
  return worst;
}

}  // namespace

const char* class_tag_name(ClassTag tag) {
  switch (tag) {
    case ClassTag::Gamma0: return "gamma0";
    case ClassTag::Gamma1: return "gamma1";
    case ClassTag::Gamma2: return "gamma2";
    case ClassTag::Gamma3: return "gamma3";
    case ClassTag::Gamma: return "gamma";
  }
  return "?";
}

const char* decision_name(Decision d) {
  switch (d) {
    case Decision::Equivalent: return "equivalent";
    case Decision::Inequivalent: return "inequivalent";
    case Decision::NotInClass: return "not-in-class";
    case Decision::Indeterminate: return "indeterminate";
  }
  return "?";
}

ComparisonResult compare_invariants(const InvariantSet& x,
                                    const InvariantSet& y, double tol) {
  if (x.tag != y.tag || x.pivot != y.pivot) {
    throw Error(ErrorCode::FamilyMismatch,
                "invariant sets have different family tags");
  }
  if (x.global.size() != y.global.size()) {
    throw Error(ErrorCode::ShapeMismatch, "global invariant lengths differ");
  }

  ComparisonResult r;
  r.worst_mismatch = vector_mismatch(x.global, y.global);

  const double branch_worst =
      pair_branches(x.weights, x.per_branch, y.weights, y.per_branch, tol,
                    r.pairing);
  r.worst_mismatch = std::max(r.worst_mismatch, branch_worst);

  if (!x.per_inner.empty() || !y.per_inner.empty()) {
    if (x.per_inner.size() != y.per_inner.size()) {
      r.worst_mismatch = kInf;
    } else if (std::isfinite(branch_worst)) {
      for (std::size_t i = 0; i < x.per_inner.size(); ++i) {
        const std::size_t yi = static_cast<std::size_t>(r.pairing[i]);
        std::vector<int> inner_pairing;
        r.worst_mismatch = std::max(
            r.worst_mismatch,
            pair_branches(x.inner_weights[i], x.per_inner[i],
                          y.inner_weights[yi], y.per_inner[yi], tol,
                          inner_pairing));
      }
    }
  }

  r.equal = r.worst_mismatch <= tol;
  return r;
}

namespace {

struct VariantPair {
  InvariantSet first, second;
};

Verdict judge_from_variants(bool in_class_1, bool in_class_2,
                            const VariantPair& a, const VariantPair& b,
                            ClassTag tag, double tol) {
  Verdict v;
  v.class_checked = tag;
  if (!in_class_1 || !in_class_2) {
    v.decision = Decision::NotInClass;
    return v;
  }
  const ComparisonResult ra = compare_invariants(a.first, a.second, tol);
  const ComparisonResult rb = compare_invariants(b.first, b.second, tol);
  v.evidence = std::max(ra.worst_mismatch, rb.worst_mismatch);
  v.pairing = ra.pairing;
  if (ra.equal != rb.equal) {
    // Either variant alone suffices in exact arithmetic; disagreement
    // flags a numerical problem.
    v.decision = Decision::Indeterminate;
  } else {
    v.decision = ra.equal ? Decision::Equivalent : Decision::Inequivalent;
  }
  return v;
}

}  // namespace

Verdict decide_equivalence(const MixedState& s1, const MixedState& s2,
                           ClassTag tag, double tol, double gate_tol) {
  if (s1.dims() != s2.dims()) {
    throw Error(ErrorCode::DimensionMismatch,
                "states have different dimension signatures");
  }
  if (tag == ClassTag::Gamma0) {
    if (s1.arity() != 2) {
      throw Error(ErrorCode::WrongArity, "gamma0 needs bipartite states");
    }
    const bool in1 = check_gamma0(s1, gate_tol).verdict;
    const bool in2 = check_gamma0(s2, gate_tol).verdict;
    VariantPair a{invariants_bipartite(s1, BipartiteVariant::A),
                  invariants_bipartite(s2, BipartiteVariant::A)};
    VariantPair b{invariants_bipartite(s1, BipartiteVariant::B),
                  invariants_bipartite(s2, BipartiteVariant::B)};
    return judge_from_variants(in1, in2, a, b, tag, tol);
  }
  if (tag == ClassTag::Gamma) {
    if (s1.arity() != 3) {
      throw Error(ErrorCode::WrongArity, "gamma needs tripartite states");
    }
    const bool in1 = check_gamma_mixed3(s1, gate_tol).verdict;
    const bool in2 = check_gamma_mixed3(s2, gate_tol).verdict;
    VariantPair g{invariants_mixed3(s1, Mixed3Variant::G),
                  invariants_mixed3(s2, Mixed3Variant::G)};
    VariantPair h{invariants_mixed3(s1, Mixed3Variant::H),
                  invariants_mixed3(s2, Mixed3Variant::H)};
    return judge_from_variants(in1, in2, g, h, tag, tol);
  }
  throw Error(ErrorCode::FamilyMismatch,
              "class tag requires pure tripartite states");
}

Verdict decide_equivalence(const PureState& s1, const PureState& s2,
                           ClassTag tag, double tol, double gate_tol) {
  if (s1.dims() != s2.dims()) {
    throw Error(ErrorCode::DimensionMismatch,
                "states have different dimension signatures");
  }
  int pivot;
  switch (tag) {
    case ClassTag::Gamma1: pivot = 1; break;
    case ClassTag::Gamma2: pivot = 2; break;
    case ClassTag::Gamma3: pivot = 3; break;
    default:
      throw Error(ErrorCode::FamilyMismatch,
                  "class tag requires mixed states");
  }
  const bool in1 = check_gamma_pure3(s1, pivot, gate_tol).verdict;
  const bool in2 = check_gamma_pure3(s2, pivot, gate_tol).verdict;
  VariantPair left{invariants_pure3(s1, pivot, SideVariant::Left),
                   invariants_pure3(s2, pivot, SideVariant::Left)};
  VariantPair right{invariants_pure3(s1, pivot, SideVariant::Right),
                    invariants_pure3(s2, pivot, SideVariant::Right)};
  return judge_from_variants(in1, in2, left, right, tag, tol);
}

// ---------------------------------------------------------------------------
// Witness search
// ---------------------------------------------------------------------------

namespace {

constexpr int kMaxSweeps = 500;
constexpr double kSweepConvergence = 1e-12;

ComplexMatrix kron_all(const std::vector<ComplexMatrix>& factors) {
  ComplexMatrix u = factors[0];
  for (std::size_t s = 1; s < factors.size(); ++s) u = kron(u, factors[s]);
  return u;
}

// Unitary maximizing Re Tr(V·G): the adjoint of G's polar unitary factor.
ComplexMatrix polar_maximizer(const ComplexMatrix& g) {
  SvdResult sv = svd(g);
  return sv.v * sv.u.adjoint();
}

std::vector<ComplexMatrix> identity_factors(
    const std::vector<std::size_t>& dims) {
  std::vector<ComplexMatrix> f;
  for (std::size_t d : dims) f.push_back(ComplexMatrix::identity(d));
  return f;
}

std::vector<ComplexMatrix> random_factors(const std::vector<std::size_t>& dims,
                                          std::uint64_t seed) {
  std::vector<ComplexMatrix> f;
  for (std::size_t s = 0; s < dims.size(); ++s)
    f.push_back(random_unitary(dims[s], derive_seed(seed, s)));
  return f;
}

std::vector<cplx> apply_full(const ComplexMatrix& u,
                             const std::vector<cplx>& v) {
  std::vector<cplx> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    cplx s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) s += u(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

std::size_t slot_stride(const std::vector<std::size_t>& dims,
                        std::size_t slot) {
  std::size_t stride = 1;
  for (std::size_t s = slot + 1; s < dims.size(); ++s) stride *= dims[s];
  return stride;
}

// Flat indices of the composite basis grouped so that index = base +
// a·stride sweeps slot `slot` with the rest fixed.
std::vector<std::size_t> rest_bases(const std::vector<std::size_t>& dims,
                                    std::size_t slot) {
  const std::size_t stride = slot_stride(dims, slot);
  std::vector<std::size_t> bases;
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  for (std::size_t idx = 0; idx < total; ++idx) {
    const std::size_t a = (idx / stride) % dims[slot];
    if (a == 0) bases.push_back(idx);
  }
  return bases;
}

double pure_overlap(const std::vector<cplx>& target,
                    const std::vector<cplx>& transformed) {
  cplx ip = 0.0;
  for (std::size_t i = 0; i < target.size(); ++i)
    ip += std::conj(target[i]) * transformed[i];
  return std::norm(ip);
}

// One alternating-maximization run for the pure objective
// |⟨s2|(⊗V)|s1⟩|²; each factor update is exactly optimal, so the sweep
// objective is monotone.
double pure_witness_run(const PureState& s1, const PureState& s2,
                        std::vector<ComplexMatrix>& factors, int max_sweeps) {
  const auto& dims = s1.dims();
  double prev = pure_overlap(s2.amplitudes(),
                             apply_full(kron_all(factors), s1.amplitudes()));
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    for (std::size_t k = 0; k < dims.size(); ++k) {
      std::vector<ComplexMatrix> others = factors;
      others[k] = ComplexMatrix::identity(dims[k]);
      const std::vector<cplx> t =
          apply_full(kron_all(others), s1.amplitudes());
      const std::size_t stride = slot_stride(dims, k);
      const std::vector<std::size_t> bases = rest_bases(dims, k);
      // C[p][q] = Σ_rest conj(s2[p at k]) · t[q at k]
      ComplexMatrix c(dims[k], dims[k]);
      for (std::size_t p = 0; p < dims[k]; ++p)
        for (std::size_t q = 0; q < dims[k]; ++q) {
          cplx s = 0.0;
          for (std::size_t base : bases)
            s += std::conj(s2.amplitudes()[base + p * stride]) *
                 t[base + q * stride];
          c(p, q) = s;
        }
      factors[k] = polar_maximizer(c.transpose());
    }
    const double cur = pure_overlap(
        s2.amplitudes(), apply_full(kron_all(factors), s1.amplitudes()));
    if (cur - prev < kSweepConvergence) {
      prev = std::max(prev, cur);
      break;
    }
    prev = cur;
  }
  return prev;
}

// Partial trace of a full operator over every slot except `slot`.
ComplexMatrix trace_out_others(const ComplexMatrix& s,
                               const std::vector<std::size_t>& dims,
                               std::size_t slot) {
  const std::size_t d = dims[slot];
  const std::size_t stride = slot_stride(dims, slot);
  const std::vector<std::size_t> bases = rest_bases(dims, slot);
  ComplexMatrix g(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      cplx sum = 0.0;
      for (std::size_t base : bases)
        sum += s(base + a * stride, base + b * stride);
      g(a, b) = sum;
    }
  return g;
}

double mixed_cross_term(const ComplexMatrix& u, const ComplexMatrix& rho,
                        const ComplexMatrix& sigma) {
  return ((u * rho * u.adjoint()) * sigma).trace().real();
}

// Alternating run for the mixed objective. The per-factor subproblem is
// linearized around the current iterate, so updates are accepted only if
// the true cross term does not decrease.
double mixed_witness_run(const MixedState& s1, const MixedState& s2,
                         std::vector<ComplexMatrix>& factors, int max_sweeps,
                         double purity_sum) {
  const auto& dims = s1.dims();
  const ComplexMatrix& rho = s1.matrix();
  const ComplexMatrix& sigma = s2.matrix();
  ComplexMatrix u = kron_all(factors);
  double cross = mixed_cross_term(u, rho, sigma);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double sweep_start = cross;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      std::vector<ComplexMatrix> others = factors;
      others[k] = ComplexMatrix::identity(dims[k]);
      const ComplexMatrix w = kron_all(others);
      const ComplexMatrix s = rho * u.adjoint() * sigma * w;
      const ComplexMatrix g = trace_out_others(s, dims, k);
      const ComplexMatrix candidate = polar_maximizer(g);
      std::vector<ComplexMatrix> trial = factors;
      trial[k] = candidate;
      const ComplexMatrix u_trial = kron_all(trial);
      const double trial_cross = mixed_cross_term(u_trial, rho, sigma);
      if (trial_cross >= cross - 1e-15) {
        factors = std::move(trial);
        u = u_trial;
        cross = trial_cross;
      }
    }
    if (cross - sweep_start < kSweepConvergence) break;
  }
  return 1.0 - (purity_sum - 2.0 * cross) / 2.0;
}

}  // namespace

WitnessResult find_lu_witness(const PureState& s1, const PureState& s2,
                              int budget, std::uint64_t seed) {
  if (s1.dims() != s2.dims()) {
    throw Error(ErrorCode::DimensionMismatch,
                "witness search needs equal dimension signatures");
  }
  WitnessResult best;
  for (int r = 0; r < std::max(1, budget); ++r) {
    std::vector<ComplexMatrix> factors =
        r == 0 ? identity_factors(s1.dims())
               : random_factors(s1.dims(), derive_seed(seed, r));
    const double overlap = pure_witness_run(s1, s2, factors, kMaxSweeps);
    best.restarts_used = r + 1;
    if (overlap > best.overlap) {
      best.overlap = overlap;
      best.factors = factors;
    }
    if (best.overlap >= 1.0 - kWitnessTol) break;
  }
  best.found = best.overlap >= 1.0 - kWitnessTol;
  if (!best.found) best.factors.reset();
  return best;
}

WitnessResult find_lu_witness(const MixedState& s1, const MixedState& s2,
                              int budget, std::uint64_t seed) {
  if (s1.dims() != s2.dims()) {
    throw Error(ErrorCode::DimensionMismatch,
                "witness search needs equal dimension signatures");
  }
  const double purity_sum =
      (s1.matrix() * s1.matrix()).trace().real() +
      (s2.matrix() * s2.matrix()).trace().real();

  // Branch-aligned warm start: a pure witness between the dominant
  // eigenbranches is often already close to the global optimum.
  std::optional<std::vector<ComplexMatrix>> aligned;
  {
    const auto b1 = spectral_branches(s1);
    const auto b2 = spectral_branches(s2);
    if (!b1.empty() && !b2.empty()) {
      std::vector<ComplexMatrix> f = identity_factors(s1.dims());
      pure_witness_run(b1.front().second, b2.front().second, f, 100);
      aligned = std::move(f);
    }
  }

  WitnessResult best;
  for (int r = 0; r < std::max(1, budget); ++r) {
    std::vector<ComplexMatrix> factors;
    if (r == 0) {
      factors = identity_factors(s1.dims());
    } else if (r == 1 && aligned) {
      factors = *aligned;
    } else {
      factors = random_factors(s1.dims(), derive_seed(seed, r));
    }
    const double overlap =
        mixed_witness_run(s1, s2, factors, kMaxSweeps, purity_sum);
    best.restarts_used = r + 1;
    if (overlap > best.overlap) {
      best.overlap = overlap;
      best.factors = factors;
    }
    if (best.overlap >= 1.0 - kWitnessTol) break;
  }
  best.found = best.overlap >= 1.0 - kWitnessTol;
  if (!best.found) best.factors.reset();
  return best;
}

double negativity(const MixedState& state, const std::vector<int>& cut) {
  const std::size_t arity = state.arity();
  std::vector<bool> in_cut(arity, false);
  for (int label : cut) {
    if (label < 1 || static_cast<std::size_t>(label) > arity) {
      throw Error(ErrorCode::BadCut, "cut label out of range");
    }
    if (in_cut[label - 1]) {
      throw Error(ErrorCode::BadCut, "duplicate cut label");
    }
    in_cut[label - 1] = true;
  }
  if (cut.empty() || cut.size() >= arity) {
    throw Error(ErrorCode::BadCut,
                "cut must split the labels into two nonempty sets");
  }

  const auto& dims = state.dims();
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;

  auto unflatten = [&](std::size_t flat) {
    std::vector<std::size_t> idx(arity);
    for (std::size_t s = arity; s-- > 0;) {
      idx[s] = flat % dims[s];
      flat /= dims[s];
    }
    return idx;
  };
  auto flat = [&](const std::vector<std::size_t>& idx) {
    std::size_t f = 0;
    for (std::size_t s = 0; s < arity; ++s) f = f * dims[s] + idx[s];
    return f;
  };

  ComplexMatrix pt(total, total);
  for (std::size_t r = 0; r < total; ++r) {
    std::vector<std::size_t> ri = unflatten(r);
    for (std::size_t c = 0; c < total; ++c) {
      std::vector<std::size_t> ci = unflatten(c);
      std::vector<std::size_t> rs = ri, cs = ci;
      for (std::size_t s = 0; s < arity; ++s) {
        if (in_cut[s]) std::swap(rs[s], cs[s]);
      }
      pt(r, c) = state.matrix()(flat(rs), flat(cs));
    }
  }

  SpectralData sd = eig_hermitian(pt);
  double neg = 0.0;
  for (double lam : sd.eigenvalues)
    if (lam < 0.0) neg += -lam;
  return neg;
}

}  // namespace luq
