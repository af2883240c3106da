// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "helpers.hpp"
#include "luq/invariants.hpp"
#include "luq/zoo.hpp"

using namespace luq;
using namespace luq::testing;

namespace {

PureState permute_first_two(const PureState& s) {
  // (1,2,3) → (2,1,3): turns a pivot-1 family into a pivot-2 one.
  const std::size_t K = s.dims()[0], M = s.dims()[1], N = s.dims()[2];
  std::vector<cplx> out(K * M * N);
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < M; ++j)
      for (std::size_t k = 0; k < N; ++k)
        out[(j * K + i) * N + k] = s.amplitudes()[(i * M + j) * N + k];
  return PureState({M, K, N}, std::move(out));
}

}  // namespace

TEST_CASE("branch invariants of the two-weight tripartite pair") {
  // Maximally entangled 3x3 branches: Tr(ρᵢ) = 1, Tr(ρᵢ²) = 1/3.
  for (double p : {0.1, 0.3}) {
    auto [s1, s2] = build_tripartite_pair(
        FamilySpec{FamilyId::TriPPair, 0, {p, 1.0 - p}});
    for (const PureState* s : {&s1, &s2}) {
      InvariantSet inv = invariants_pure3(*s, 1, SideVariant::Left);
      CHECK(inv.tag == 'c');
      CHECK(inv.pivot == 1);
      REQUIRE(inv.weights.size() == 2);
      CHECK(inv.weights[0] == doctest::Approx(std::max(p, 1 - p)).epsilon(1e-10));
      for (const auto& powers : inv.per_branch) {
        CHECK(powers[0] == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(powers[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("branch invariants of the three-weight tripartite pair") {
  auto [s1, s2] = build_tripartite_pair(
      FamilySpec{FamilyId::TriAbcPair, 0, {0.5, 0.3, 0.2}});
  InvariantSet inv = invariants_pure3(s1, 1, SideVariant::Right);
  CHECK(inv.tag == 'd');
  for (const auto& powers : inv.per_branch) {
    CHECK(powers[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(powers[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(powers[2] == doctest::Approx(1.0 / 9.0).epsilon(1e-10));
  }
}

TEST_CASE("global invariants are spectrum power sums") {
  // K₂ of the p-family reduction equals p² + (1-p)² by hand.
  const double p = 0.3;
  auto [s1, s2] =
      build_tripartite_pair(FamilySpec{FamilyId::TriPPair, 0, {p, 1 - p}});
  InvariantSet inv = invariants_pure3(s1, 1, SideVariant::Left);
  CHECK(inv.global[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(inv.global[1] ==
        doctest::Approx(p * p + (1 - p) * (1 - p)).epsilon(1e-10));
}

TEST_CASE("bipartite invariants of a known mixture") {
  // gamma0 zoo state: ρᵢ = I/M for every permutation branch, so the
  // per-branch powers are M·(1/M)^k and the globals are the weight sums.
  const std::size_t m = 4;
  const MixedState rho =
      build_gamma0(FamilySpec{FamilyId::Gamma0Even, m, {0.3, 0.7}});
  for (BipartiteVariant variant : {BipartiteVariant::A, BipartiteVariant::B}) {
    InvariantSet inv = invariants_bipartite(rho, variant);
    CHECK(inv.tag == (variant == BipartiteVariant::A ? 'a' : 'b'));
    REQUIRE(inv.weights.size() == 2);
    CHECK(inv.weights[0] == doctest::Approx(0.7).epsilon(1e-10));
    CHECK(inv.weights[1] == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(inv.global[1] ==
          doctest::Approx(0.09 + 0.49).epsilon(1e-10));
    for (const auto& powers : inv.per_branch) {
      REQUIRE(powers.size() == m);
      for (std::size_t k = 1; k <= m; ++k)
        CHECK(powers[k - 1] ==
              doctest::Approx(m * std::pow(1.0 / m, k)).epsilon(1e-9));
    }
  }
}

TEST_CASE("pivot-2 and pivot-3 tags") {
  const PureState psi = random_pure({2, 3, 3}, 91);
  CHECK(invariants_pure3(psi, 2, SideVariant::Left).tag == 'e');
  CHECK(invariants_pure3(psi, 2, SideVariant::Right).tag == 'f');
  CHECK(invariants_pure3(psi, 3, SideVariant::Left).tag == 'c');
  CHECK(invariants_pure3(psi, 3, SideVariant::Left).pivot == 3);
}

TEST_CASE("mixed3 invariants structure") {
  const MixedState rho =
      build_tripartite_mixed(FamilySpec{FamilyId::TriMixed, 0, {0.6, 0.4}});
  for (Mixed3Variant variant : {Mixed3Variant::G, Mixed3Variant::H}) {
    InvariantSet inv = invariants_mixed3(rho, variant);
    CHECK(inv.tag == (variant == Mixed3Variant::G ? 'g' : 'h'));
    REQUIRE(inv.weights.size() == 2);
    CHECK(inv.weights[0] == doctest::Approx(0.6).epsilon(1e-10));
    CHECK(inv.per_inner.size() == 2);
    CHECK(inv.inner_weights.size() == 2);
    // Global range runs over the full composite dimension.
    CHECK(inv.global.size() == rho.matrix().rows());
    CHECK(inv.global[0] == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("invariants are LU invariant (non-degenerate spectra)") {
  // Families a, b
  const MixedState g0 =
      build_gamma0(FamilySpec{FamilyId::Gamma0Even, 4, {0.3, 0.7}});
  // Families c, d (pivot 1)
  auto [p1, p2] =
      build_tripartite_pair(FamilySpec{FamilyId::TriPPair, 0, {0.3, 0.7}});
  // Families e, f via a subsystem permutation of the same state
  const PureState perm = permute_first_two(p1);
  // Families g, h
  const MixedState tm =
      build_tripartite_mixed(FamilySpec{FamilyId::TriMixed, 0, {0.6, 0.4}});

  auto expect_close = [](const InvariantSet& a, const InvariantSet& b) {
    REQUIRE(a.global.size() == b.global.size());
    for (std::size_t i = 0; i < a.global.size(); ++i)
      CHECK(std::abs(a.global[i] - b.global[i]) <= 1e-9);
    REQUIRE(a.weights.size() == b.weights.size());
    for (std::size_t i = 0; i < a.weights.size(); ++i) {
      CHECK(std::abs(a.weights[i] - b.weights[i]) <= 1e-9);
      for (std::size_t k = 0; k < a.per_branch[i].size(); ++k)
        CHECK(std::abs(a.per_branch[i][k] - b.per_branch[i][k]) <= 1e-9);
    }
  };

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    {
      const MixedState moved =
          apply_local_unitary(g0, random_factors(g0.dims(), seed));
      for (auto v : {BipartiteVariant::A, BipartiteVariant::B})
        expect_close(invariants_bipartite(g0, v),
                     invariants_bipartite(moved, v));
    }
    {
      const PureState moved =
          apply_local_unitary(p1, random_factors(p1.dims(), seed + 10));
      for (auto v : {SideVariant::Left, SideVariant::Right})
        expect_close(invariants_pure3(p1, 1, v),
                     invariants_pure3(moved, 1, v));
    }
    {
      const PureState moved =
          apply_local_unitary(perm, random_factors(perm.dims(), seed + 20));
      for (auto v : {SideVariant::Left, SideVariant::Right})
        expect_close(invariants_pure3(perm, 2, v),
                     invariants_pure3(moved, 2, v));
    }
    {
      const MixedState moved =
          apply_local_unitary(tm, random_factors(tm.dims(), seed + 30));
      for (auto v : {Mixed3Variant::G, Mixed3Variant::H})
        expect_close(invariants_mixed3(tm, v), invariants_mixed3(moved, v));
    }
  }
}

TEST_CASE("arity validation") {
  CHECK_THROWS_AS(invariants_bipartite(random_mixed({2, 2, 2}, 7),
                                       BipartiteVariant::A),
                  Error);
  CHECK_THROWS_AS(invariants_mixed3(random_mixed({2, 2}, 7),
                                    Mixed3Variant::G),
                  Error);
}
