// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "luq/linalg.hpp"

using namespace luq;
using namespace luq::testing;

TEST_CASE("eig: known real symmetric 2x2") {
  // [[2,1],[1,2]] has eigenvalues 3 and 1 (analytic).
  ComplexMatrix a(2, 2, {2.0, 1.0, 1.0, 2.0});
  SpectralData sd = eig_hermitian(a);
  REQUIRE(sd.eigenvalues.size() == 2);
  CHECK(sd.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(sd.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig: known complex Hermitian 2x2") {
  // [[1, -i],[i, 1]] has eigenvalues 2 and 0 (analytic).
  ComplexMatrix a(2, 2,
                  {cplx(1, 0), cplx(0, -1), cplx(0, 1), cplx(1, 0)});
  SpectralData sd = eig_hermitian(a);
  CHECK(sd.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(sd.eigenvalues[1]) < 1e-12);
  CHECK(sd.rank == 1);
}

TEST_CASE("eig: reconstruction and orthonormality on random Hermitian") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const std::size_t n = 1 + seed % 20;
    const ComplexMatrix a = random_hermitian(n, seed);
    SpectralData sd = eig_hermitian(a);

    // V Λ V† = A
    ComplexMatrix lam =
        ComplexMatrix::diagonal(sd.eigenvalues);
    const ComplexMatrix recon = sd.vectors * lam * sd.vectors.adjoint();
    CHECK(matrix_distance(recon, a) <= 1e-12 * std::max(1.0, a.frobenius_norm()));

    // V†V = I
    CHECK(matrix_distance(sd.vectors.adjoint() * sd.vectors,
                          ComplexMatrix::identity(n)) <= 1e-12);

    // descending order
    for (std::size_t i = 0; i + 1 < sd.eigenvalues.size(); ++i)
      CHECK(sd.eigenvalues[i] >= sd.eigenvalues[i + 1]);
  }
}

TEST_CASE("eig: input validation") {
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix(2, 3)), Error);
  ComplexMatrix nh(2, 2, {cplx(0, 0), cplx(1, 0), cplx(2, 0), cplx(0, 0)});
  CHECK_THROWS_AS(eig_hermitian(nh), Error);
}

TEST_CASE("eig: projector rank") {
  // |+><+| on C^2: eigenvalues 1 and 0.
  ComplexMatrix p(2, 2, {0.5, 0.5, 0.5, 0.5});
  SpectralData sd = eig_hermitian(p);
  CHECK(sd.rank == 1);
  CHECK(sd.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("svd: known diagonal matrix") {
  ComplexMatrix a(2, 2, {3.0, 0.0, 0.0, -2.0});
  SvdResult r = svd(a);
  CHECK(r.singulars[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.singulars[1] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("svd: factorization properties on random matrices") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const std::size_t rows = 1 + seed % 7;
    const std::size_t cols = 1 + (seed / 7) % 7;
    const ComplexMatrix a = random_matrix(rows, cols, seed);
    SvdResult r = svd(a);

    CHECK(r.u.is_unitary(1e-10));
    CHECK(r.v.is_unitary(1e-10));

    ComplexMatrix sigma(rows, cols);
    for (std::size_t i = 0; i < r.singulars.size(); ++i)
      sigma(i, i) = r.singulars[i];
    CHECK(matrix_distance(r.u * sigma * r.v.adjoint(), a) <=
          1e-10 * std::max(1.0, a.frobenius_norm()));

    // Independent oracle: σᵢ² are the eigenvalues of A†A.
    SpectralData gram = eig_hermitian(a.adjoint() * a);
    for (std::size_t i = 0; i < r.singulars.size(); ++i) {
      const double expected =
          std::sqrt(std::max(0.0, gram.eigenvalues[i]));
      CHECK(std::abs(r.singulars[i] - expected) <= 1e-10);
    }

    for (std::size_t i = 0; i + 1 < r.singulars.size(); ++i)
      CHECK(r.singulars[i] >= r.singulars[i + 1]);
  }
}

TEST_CASE("random_unitary: unitarity and determinism") {
  const ComplexMatrix u1 = random_unitary(5, 42);
  const ComplexMatrix u2 = random_unitary(5, 42);
  const ComplexMatrix u3 = random_unitary(5, 43);
  CHECK(u1.is_unitary(1e-12));
  CHECK(matrix_distance(u1, u2) == 0.0);
  CHECK(matrix_distance(u1, u3) > 1e-3);
}

TEST_CASE("random_unitary: Haar first-moment sanity") {
  // E|U_00|^2 = 1/dim for the Haar measure.
  const std::size_t dim = 3;
  double acc = 0.0;
  const int samples = 600;
  for (int s = 0; s < samples; ++s)
    acc += std::norm(random_unitary(dim, 1000 + s)(0, 0));
  CHECK(acc / samples == doctest::Approx(1.0 / dim).epsilon(0.15));
}

TEST_CASE("power_sum matches direct evaluation") {
  std::vector<double> lam{0.5, 0.3, 0.2};
  CHECK(power_sum(lam, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(power_sum(lam, 2) ==
        doctest::Approx(0.25 + 0.09 + 0.04).epsilon(1e-15));
  CHECK(power_sum(lam, 3) ==
        doctest::Approx(0.125 + 0.027 + 0.008).epsilon(1e-15));
}

TEST_CASE("derive_seed: deterministic and stream-separated") {
  CHECK(derive_seed(7, 0) == derive_seed(7, 0));
  CHECK(derive_seed(7, 0) != derive_seed(7, 1));
  CHECK(derive_seed(7, 0) != derive_seed(8, 0));
}

TEST_CASE("trace_power matches explicit matrix products") {
  const ComplexMatrix h = random_hermitian(5, 77);
  ComplexMatrix h3 = h * h * h;
  CHECK(trace_power(h, 3) ==
        doctest::Approx(h3.trace().real()).epsilon(1e-10));
  CHECK(trace_power(h, 1) ==
        doctest::Approx(h.trace().real()).epsilon(1e-12));
}
