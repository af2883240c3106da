// SPDX-License-Identifier: Apache-2.0

#ifndef LUQ_TESTS_HELPERS_HPP
#define LUQ_TESTS_HELPERS_HPP

#include <cmath>
#include <random>
#include <vector>

#include "luq/complex_matrix.hpp"
#include "luq/linalg.hpp"
#include "luq/state.hpp"

namespace luq::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = cplx(gauss(rng), gauss(rng));
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  ComplexMatrix g = random_matrix(n, n, seed);
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
  return h;
}

inline PureState random_pure(const std::vector<std::size_t>& dims,
                             std::uint64_t seed) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<cplx> amps(total);
  double nrm = 0.0;
  for (cplx& z : amps) {
    z = cplx(gauss(rng), gauss(rng));
    nrm += std::norm(z);
  }
  nrm = std::sqrt(nrm);
  for (cplx& z : amps) z /= nrm;
  return PureState(dims, std::move(amps));
}

/// Full-rank random density matrix: ρ = GG† / Tr(GG†).
inline MixedState random_mixed(const std::vector<std::size_t>& dims,
                               std::uint64_t seed) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  const ComplexMatrix g = random_matrix(total, total, seed);
  ComplexMatrix rho = g * g.adjoint();
  const cplx tr = rho.trace();
  for (cplx& z : rho.entries()) z /= tr;
  return MixedState(dims, std::move(rho));
}

inline std::vector<ComplexMatrix> random_factors(
    const std::vector<std::size_t>& dims, std::uint64_t seed) {
  std::vector<ComplexMatrix> f;
  for (std::size_t s = 0; s < dims.size(); ++s)
    f.push_back(random_unitary(dims[s], derive_seed(seed, s)));
  return f;
}

inline double matrix_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).frobenius_norm();
}

}  // namespace luq::testing

#endif  // LUQ_TESTS_HELPERS_HPP
