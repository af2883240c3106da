// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "luq/judge.hpp"
#include "luq/zoo.hpp"

using namespace luq;
using namespace luq::testing;

namespace {

PureState tri_p_state(double p, bool primed) {
  auto [s1, s2] =
      build_tripartite_pair(FamilySpec{FamilyId::TriPPair, 0, {p, 1 - p}});
  return primed ? s2 : s1;
}

}  // namespace

TEST_CASE("compare_invariants: reflexivity") {
  const MixedState rho =
      build_gamma0(FamilySpec{FamilyId::Gamma0Even, 4, {0.3, 0.7}});
  InvariantSet inv = invariants_bipartite(rho, BipartiteVariant::A);
  ComparisonResult r = compare_invariants(inv, inv);
  CHECK(r.equal);
  CHECK(r.worst_mismatch == 0.0);
}

TEST_CASE("compare_invariants: distinct weights are detected") {
  // K₂ differs: 0.3²+0.7² = 0.58 vs 0.4²+0.6² = 0.52.
  InvariantSet a = invariants_pure3(tri_p_state(0.3, false), 1,
                                    SideVariant::Left);
  InvariantSet b = invariants_pure3(tri_p_state(0.4, false), 1,
                                    SideVariant::Left);
  ComparisonResult r = compare_invariants(a, b);
  CHECK(!r.equal);
  CHECK(r.worst_mismatch >= 0.01);
}

TEST_CASE("compare_invariants: family mismatch throws") {
  const PureState s = tri_p_state(0.3, false);
  InvariantSet left = invariants_pure3(s, 1, SideVariant::Left);
  InvariantSet right = invariants_pure3(s, 1, SideVariant::Right);
  CHECK_THROWS_AS(compare_invariants(left, right), Error);
}

TEST_CASE("compare_invariants: LU image matches") {
  const PureState s = tri_p_state(0.3, false);
  const PureState moved =
      apply_local_unitary(s, random_factors(s.dims(), 99));
  for (auto v : {SideVariant::Left, SideVariant::Right}) {
    ComparisonResult r = compare_invariants(invariants_pure3(s, 1, v),
                                            invariants_pure3(moved, 1, v));
    CHECK(r.equal);
    CHECK(r.worst_mismatch <= 1e-9);
  }
}

TEST_CASE("decide_equivalence: the tripartite pair is equivalent") {
  for (double p : {0.1, 0.3}) {
    Verdict v = decide_equivalence(tri_p_state(p, false),
                                   tri_p_state(p, true), ClassTag::Gamma1);
    CHECK(v.decision == Decision::Equivalent);
    CHECK(v.evidence <= 1e-9);
  }
}

TEST_CASE("decide_equivalence: different weights are inequivalent") {
  Verdict v = decide_equivalence(tri_p_state(0.3, false),
                                 tri_p_state(0.4, false), ClassTag::Gamma1);
  CHECK(v.decision == Decision::Inequivalent);
  CHECK(v.evidence >= 0.01);
}

TEST_CASE("decide_equivalence: out-of-class states are flagged") {
  Verdict v = decide_equivalence(tri_p_state(0.3, false),
                                 random_pure({2, 3, 3}, 7), ClassTag::Gamma1);
  CHECK(v.decision == Decision::NotInClass);
}

TEST_CASE("decide_equivalence: gamma0 states") {
  const MixedState a =
      build_gamma0(FamilySpec{FamilyId::Gamma0Even, 4, {0.3, 0.7}});
  const MixedState b =
      apply_local_unitary(a, random_factors(a.dims(), 123));
  const MixedState c =
      build_gamma0(FamilySpec{FamilyId::Gamma0Even, 4, {0.4, 0.6}});
  CHECK(decide_equivalence(a, b, ClassTag::Gamma0, 1e-9, 1e-8).decision ==
        Decision::Equivalent);
  CHECK(decide_equivalence(a, c, ClassTag::Gamma0).decision ==
        Decision::Inequivalent);
}

TEST_CASE("decide_equivalence: tripartite mixed states") {
  const MixedState a =
      build_tripartite_mixed(FamilySpec{FamilyId::TriMixed, 0, {0.6, 0.4}});
  const MixedState b =
      apply_local_unitary(a, random_factors(a.dims(), 321));
  const MixedState c =
      build_tripartite_mixed(FamilySpec{FamilyId::TriMixed, 0, {0.7, 0.3}});
  CHECK(decide_equivalence(a, b, ClassTag::Gamma, 1e-9, 1e-8).decision ==
        Decision::Equivalent);
  CHECK(decide_equivalence(a, c, ClassTag::Gamma).decision ==
        Decision::Inequivalent);
}

TEST_CASE("decide_equivalence: dimension signatures must match") {
  CHECK_THROWS_AS(decide_equivalence(random_pure({2, 3, 3}, 1),
                                     random_pure({3, 3, 3}, 2),
                                     ClassTag::Gamma1),
                  Error);
}

TEST_CASE("find_lu_witness: pure LU image is recovered") {
  const PureState s = tri_p_state(0.3, false);
  const PureState moved =
      apply_local_unitary(s, random_factors(s.dims(), 55));
  WitnessResult w = find_lu_witness(s, moved, 16, 1);
  CHECK(w.found);
  CHECK(w.overlap >= 1.0 - 1e-6);
  REQUIRE(w.factors.has_value());
  // The returned factors really map s onto moved.
  const PureState image = apply_local_unitary(s, *w.factors);
  cplx ip = 0.0;
  for (std::size_t i = 0; i < image.amplitudes().size(); ++i)
    ip += std::conj(moved.amplitudes()[i]) * image.amplitudes()[i];
  CHECK(std::abs(ip) >= 1.0 - 1e-6);
}

TEST_CASE("find_lu_witness: the tripartite pair is connected") {
  WitnessResult w =
      find_lu_witness(tri_p_state(0.3, false), tri_p_state(0.3, true), 64, 2);
  CHECK(w.found);
  CHECK(w.overlap >= 1.0 - 1e-6);
}

TEST_CASE("find_lu_witness: inequivalent states stay separated") {
  // Schmidt-fidelity bound: best overlap ≤ (Σ√(pᵢqᵢ))² ≈ 0.989 < 1 − 1e-3.
  WitnessResult w =
      find_lu_witness(tri_p_state(0.3, false), tri_p_state(0.4, false), 16, 3);
  CHECK(!w.found);
  CHECK(w.overlap <= 1.0 - 1e-3);
}

TEST_CASE("find_lu_witness: mixed LU image is recovered") {
  const MixedState a =
      build_gamma0(FamilySpec{FamilyId::Gamma0Even, 4, {0.3, 0.7}});
  const MixedState moved =
      apply_local_unitary(a, random_factors(a.dims(), 77));
  WitnessResult w = find_lu_witness(a, moved, 32, 4);
  CHECK(w.found);
  CHECK(w.overlap >= 1.0 - 1e-6);
  REQUIRE(w.factors.has_value());
  const MixedState image = apply_local_unitary(a, *w.factors);
  // overlap ≥ 1 − 1e-6 bounds the Frobenius distance by √(2e-6).
  CHECK(matrix_distance(image.matrix(), moved.matrix()) <= 2e-3);
}

TEST_CASE("find_lu_witness: mixed states with different spectra") {
  const MixedState a =
      build_gamma0(FamilySpec{FamilyId::Gamma0Even, 4, {0.3, 0.7}});
  const MixedState c =
      build_gamma0(FamilySpec{FamilyId::Gamma0Even, 4, {0.45, 0.55}});
  WitnessResult w = find_lu_witness(a, c, 8, 5);
  CHECK(!w.found);
  CHECK(w.overlap <= 1.0 - 1e-3);
}

TEST_CASE("negativity: known values") {
  // Bell state across 1|2: negativity 1/2 (analytic).
  const double r = 1.0 / std::sqrt(2.0);
  const MixedState bell =
      MixedState::projector(PureState({2, 2}, {r, 0.0, 0.0, r}));
  CHECK(negativity(bell, {1}) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(negativity(bell, {2}) == doctest::Approx(0.5).epsilon(1e-10));

  // Product state: zero.
  const MixedState product =
      MixedState::projector(PureState({2, 2}, {1.0, 0.0, 0.0, 0.0}));
  CHECK(negativity(product, {1}) <= 1e-12);
}

TEST_CASE("negativity: subset validation") {
  const MixedState rho = random_mixed({2, 2}, 9);
  CHECK_THROWS_AS(negativity(rho, {}), Error);
  CHECK_THROWS_AS(negativity(rho, {1, 2}), Error);
  CHECK_THROWS_AS(negativity(rho, {3}), Error);
}

TEST_CASE("class_tag and decision names") {
  CHECK(std::string(class_tag_name(ClassTag::Gamma0)) == "gamma0");
  CHECK(std::string(class_tag_name(ClassTag::Gamma)) == "gamma");
  CHECK(std::string(decision_name(Decision::Equivalent)) == "equivalent");
}
