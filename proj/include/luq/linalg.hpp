// SPDX-License-Identifier: Apache-2.0

#ifndef LUQ_LINALG_HPP
#define LUQ_LINALG_HPP

#include <cstdint>
#include <vector>

#include "luq/complex_matrix.hpp"

namespace luq {

/// Eigenvalue treated as zero when |λ| ≤ kEigZeroCutoff · max|λ|.
inline constexpr double kEigZeroCutoff = 1e-12;
/// Singular value treated as zero when σ ≤ kSvdZeroCutoff · σ_max.
inline constexpr double kSvdZeroCutoff = 1e-10;

/// Result of a Hermitian eigendecomposition A = V Λ V†.
/// Eigenvalues sorted descending; eigenvectors are the columns of
/// `vectors`, in matching order.
struct SpectralData {
  std::vector<double> eigenvalues;
  ComplexMatrix vectors;
  std::size_t rank = 0;  // eigenvalues above the zero cutoff
};

struct SvdResult {
  ComplexMatrix u;                 // rows × rows, unitary
  std::vector<double> singulars;   // min(rows, cols), descending
  ComplexMatrix v;                 // cols × cols, unitary; A = U Σ V†
};

/// Hermitian eigendecomposition via cyclic Jacobi rotations. Sweeps until
/// the off-diagonal Frobenius norm drops below 1e-14·‖A‖_F.
SpectralData eig_hermitian(const ComplexMatrix& a);

/// SVD built from the Hermitian eigendecomposition of the smaller Gram
/// matrix; the missing factor is recovered as A·v/σ plus an orthonormal
/// completion of the null space.
SvdResult svd(const ComplexMatrix& a);

/// Haar-distributed unitary: complex Ginibre sample orthonormalized by
/// modified Gram–Schmidt (positive-diagonal R). Deterministic per seed.
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

/// Σ λᵢᵏ over an eigenvalue list.
double power_sum(const std::vector<double>& eigenvalues, unsigned k);

/// splitmix64 step; used to derive independent sub-seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace luq

#endif  // LUQ_LINALG_HPP
