// SPDX-License-Identifier: Apache-2.0

#include "luq/zoo.hpp"

#include <cmath>

#include "luq/class_gate.hpp"

namespace luq {

namespace {

// A branch given as a list of (row, col) basis kets with uniform
// amplitude 1/√(count).
PureState permutation_state(std::size_t m,
                            const std::vector<std::pair<std::size_t,
                                                        std::size_t>>& kets) {
  std::vector<cplx> amps(m * m, 0.0);
  const double w = 1.0 / std::sqrt(static_cast<double>(kets.size()));
  for (auto [i, j] : kets) amps[i * m + j] = w;
  return PureState({m, m}, std::move(amps));
}

using KetList = std::vector<std::pair<std::size_t, std::size_t>>;

// |ψ₁⟩: fixed points 0 and d, pairs 2t+1 ↔ 2t+2.
KetList even_psi1(std::size_t m) {
  const std::size_t d = m - 1;
  KetList k{{0, 0}};
  for (std::size_t t = 1; t + 1 <= d - 1; t += 2) {
    k.push_back({t, t + 1});
    k.push_back({t + 1, t});
  }
  k.push_back({d, d});
  return k;
}

// |ψ₂⟩: pairs 2t ↔ 2t+1, no fixed points.
KetList even_psi2(std::size_t m) {
  KetList k;
  for (std::size_t t = 0; t + 1 < m; t += 2) {
    k.push_back({t, t + 1});
    k.push_back({t + 1, t});
  }
  return k;
}

// |ψ₃⟩: the transposition 0 ↔ 2, everything else fixed.
KetList even_psi3(std::size_t m) {
  KetList k{{0, 2}, {2, 0}};
  for (std::size_t t = 0; t < m; ++t) {
    if (t != 0 && t != 2) k.push_back({t, t});
  }
  return k;
}

// |φ₁⟩: fixed point 0, pairs 2t+1 ↔ 2t+2.
KetList odd_phi1(std::size_t m) {
  KetList k{{0, 0}};
  for (std::size_t t = 1; t + 1 < m; t += 2) {
    k.push_back({t, t + 1});
    k.push_back({t + 1, t});
  }
  return k;
}

// |φ₂⟩: pairs 2t ↔ 2t+1, diagonal fixed point d.
KetList odd_phi2(std::size_t m) {
  const std::size_t d = m - 1;
  KetList k;
  for (std::size_t t = 0; t + 1 < d; t += 2) {
    k.push_back({t, t + 1});
    k.push_back({t + 1, t});
  }
  k.push_back({d, d});
  return k;
}

// |φ₃⟩: the anti-diagonal |t, d−t⟩.
KetList odd_phi3(std::size_t m) {
  const std::size_t d = m - 1;
  KetList k;
  for (std::size_t t = 0; t < m; ++t) k.push_back({t, d - t});
  return k;
}

MixedState mix_pure(const std::vector<std::size_t>& dims,
                    const std::vector<double>& weights,
                    const std::vector<PureState>& branches) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  ComplexMatrix m(total, total);
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const auto& amps = branches[b].amplitudes();
    for (std::size_t i = 0; i < total; ++i)
      for (std::size_t j = 0; j < total; ++j)
        m(i, j) += weights[b] * amps[i] * std::conj(amps[j]);
  }
  return MixedState(dims, std::move(m));
}

// The tripartite pure families, parameterized by the Schmidt weights of the
// first subsystem. shift rotates the first-subsystem index cyclically,
// which produces mutually orthogonal copies.
PureState tri_family_member(const std::vector<double>& schmidt,
                            bool primed, std::size_t shift) {
  const std::size_t k = schmidt.size();  // 2 or 3
  const std::size_t m = 3, n = 3;
  // jk-support of branch i: unprimed uses {0i', 1(i'+2), 2(i'+1)} style
  // permutations; primed shifts the column by the row index.
  std::vector<cplx> amps(k * m * n, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    const double a = std::sqrt(schmidt[i] / 3.0);
    const std::size_t row = (i + shift) % k;
    for (std::size_t j = 0; j < m; ++j) {
      // unprimed member: |Ψ⟩ branch i holds kets |i, j, (i−j) mod 3⟩;
      // primed member: |Ψ'⟩ branch i holds kets |i, j, (i+j) mod 3⟩.
      const std::size_t col = primed ? (i + j) % 3 : (3 + i - j) % 3;
      amps[(row * m + j) * n + col] = a;
    }
  }
  return PureState({k, m, n}, std::move(amps));
}

}  // namespace

FamilyId parse_family_id(const std::string& name) {
  if (name == "gamma0-even") return FamilyId::Gamma0Even;
  if (name == "gamma0-odd") return FamilyId::Gamma0Odd;
  if (name == "tri-p-pair") return FamilyId::TriPPair;
  if (name == "tri-abc-pair") return FamilyId::TriAbcPair;
  if (name == "tri-mixed") return FamilyId::TriMixed;
  throw Error(ErrorCode::BadSpec, "unknown family id: " + name);
}

const char* family_id_name(FamilyId id) {
  switch (id) {
    case FamilyId::Gamma0Even: return "gamma0-even";
    case FamilyId::Gamma0Odd: return "gamma0-odd";
    case FamilyId::TriPPair: return "tri-p-pair";
    case FamilyId::TriAbcPair: return "tri-abc-pair";
    case FamilyId::TriMixed: return "tri-mixed";
  }
  return "?";
}

void FamilySpec::validate() const {
  if (weights.empty()) {
    throw Error(ErrorCode::BadWeightCount, "weights must be nonempty");
  }
  double sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) {
      throw Error(ErrorCode::BadSpec, "weights must be strictly positive");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw Error(ErrorCode::BadSpec, "weights must sum to 1");
  }
  switch (family) {
    case FamilyId::Gamma0Even:
      if (local_dim < 4 || local_dim % 2 != 0) {
        throw Error(ErrorCode::BadDimensionParity,
                    "gamma0-even needs an even local dimension >= 4");
      }
      break;
    case FamilyId::Gamma0Odd:
      if (local_dim < 5 || local_dim % 2 != 1) {
        throw Error(ErrorCode::BadDimensionParity,
                    "gamma0-odd needs an odd local dimension >= 5");
      }
      break;
    case FamilyId::TriPPair:
      if (weights.size() != 2) {
        throw Error(ErrorCode::BadWeightCount, "tri-p-pair needs 2 weights");
      }
      break;
    case FamilyId::TriAbcPair:
      if (weights.size() != 3) {
        throw Error(ErrorCode::BadWeightCount, "tri-abc-pair needs 3 weights");
      }
      break;
    case FamilyId::TriMixed:
      if (weights.size() > 3) {
        throw Error(ErrorCode::BadWeightCount,
                    "tri-mixed needs at most 3 weights");
      }
      break;
  }
  if ((family == FamilyId::Gamma0Even || family == FamilyId::Gamma0Odd) &&
      (weights.size() < 2 || weights.size() > 3)) {
    throw Error(ErrorCode::BadWeightCount, "gamma0 needs 2 or 3 weights");
  }
}

MixedState build_gamma0(const FamilySpec& spec) {
  spec.validate();
  if (spec.family != FamilyId::Gamma0Even &&
      spec.family != FamilyId::Gamma0Odd) {
    throw Error(ErrorCode::BadSpec, "not a gamma0 family");
  }
  const std::size_t m = spec.local_dim;
  const bool even = spec.family == FamilyId::Gamma0Even;
  std::vector<PureState> branches;
  branches.push_back(permutation_state(m, even ? even_psi1(m) : odd_phi1(m)));
  branches.push_back(permutation_state(m, even ? even_psi2(m) : odd_phi2(m)));
  if (spec.weights.size() == 3) {
    branches.push_back(
        permutation_state(m, even ? even_psi3(m) : odd_phi3(m)));
  }
  MixedState rho = mix_pure({m, m}, spec.weights, branches);
  // The generalized patterns are asserted, not assumed.
  const MembershipReport gate = check_gamma0(rho, 1e-12);
  if (!gate.verdict) {
    throw Error(ErrorCode::BadSpec,
                "gamma0 construction failed its membership assertion "
                "(degenerate weight choice?)");
  }
  return rho;
}

std::pair<PureState, PureState> build_tripartite_pair(const FamilySpec& spec) {
  spec.validate();
  if (spec.family != FamilyId::TriPPair &&
      spec.family != FamilyId::TriAbcPair) {
    throw Error(ErrorCode::BadSpec, "not a tripartite pair family");
  }
  return {tri_family_member(spec.weights, false, 0),
          tri_family_member(spec.weights, true, 0)};
}

MixedState build_tripartite_mixed(const FamilySpec& spec) {
  spec.validate();
  if (spec.family != FamilyId::TriMixed) {
    throw Error(ErrorCode::BadSpec, "not the tri-mixed family");
  }
  // Branch states are first-subsystem shifts of a fixed pure-family member;
  // their ket supports are disjoint, so they are exactly orthogonal.
  const std::vector<double> internal =
      spec.weights.size() == 2 ? std::vector<double>{0.3, 0.7}
                               : std::vector<double>{0.5, 0.3, 0.2};
  const std::size_t k = internal.size();
  std::vector<PureState> branches;
  for (std::size_t s = 0; s < spec.weights.size(); ++s)
    branches.push_back(tri_family_member(internal, false, s));

  for (std::size_t a = 0; a < branches.size(); ++a)
    for (std::size_t b = a + 1; b < branches.size(); ++b) {
      cplx ip = 0.0;
      for (std::size_t i = 0; i < branches[a].amplitudes().size(); ++i)
        ip += std::conj(branches[a].amplitudes()[i]) *
              branches[b].amplitudes()[i];
      if (std::abs(ip) > 1e-12) {
        throw Error(ErrorCode::NonOrthogonalBranches,
                    "tri-mixed branches are not orthogonal");
      }
    }

  MixedState rho = mix_pure({k, 3, 3}, spec.weights, branches);
  const MembershipReport gate = check_gamma_mixed3(rho, 1e-12);
  if (!gate.verdict) {
    throw Error(ErrorCode::BadSpec,
                "tri-mixed construction failed its membership assertion");
  }
  return rho;
}

}  // namespace luq
