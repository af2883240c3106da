// SPDX-License-Identifier: Apache-2.0

#include "luq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace luq {

namespace {

double off_diagonal_norm(const ComplexMatrix& h) {
  double s = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j)
      if (i != j) s += std::norm(h(i, j));
  return std::sqrt(s);
}

// Rotate each column's first significant entry to the positive real axis.
void fix_column_phases(ComplexMatrix& v) {
  for (std::size_t j = 0; j < v.cols(); ++j) {
    double maxabs = 0.0;
    for (std::size_t i = 0; i < v.rows(); ++i)
      maxabs = std::max(maxabs, std::abs(v(i, j)));
    if (maxabs == 0.0) continue;
    for (std::size_t i = 0; i < v.rows(); ++i) {
      const double a = std::abs(v(i, j));
      if (a > 1e-12 * maxabs) {
        const cplx phase = std::conj(v(i, j)) / a;
        for (std::size_t k = 0; k < v.rows(); ++k) v(k, j) *= phase;
        break;
      }
    }
  }
}

// Append orthonormal columns drawn from the standard basis until `cols`
// holds a full basis of dimension d.
void complete_orthonormal(std::vector<std::vector<cplx>>& cols, std::size_t d) {
  for (std::size_t e = 0; e < d && cols.size() < d; ++e) {
    std::vector<cplx> v(d, 0.0);
    v[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : cols) {
        cplx ip = 0.0;
        for (std::size_t i = 0; i < d; ++i) ip += std::conj(q[i]) * v[i];
        for (std::size_t i = 0; i < d; ++i) v[i] -= ip * q[i];
      }
    }
    double nrm = 0.0;
    for (const cplx& z : v) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm > 1e-8) {
      for (cplx& z : v) z /= nrm;
      cols.push_back(std::move(v));
    }
  }
}

}  // namespace

SpectralData eig_hermitian(const ComplexMatrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::NotSquare, "eig_hermitian needs a square matrix");
  }
  if (!a.is_hermitian()) {
    throw Error(ErrorCode::NotHermitian,
                "eig_hermitian input fails the symmetry tolerance");
  }
  const std::size_t n = a.rows();

  // Symmetrize to kill tolerance-level asymmetry before iterating.
  ComplexMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double norm = h.frobenius_norm();
  const double target = 1e-14 * norm;

  if (norm > 0.0 && n > 1) {
    // A skipped pivot must be small enough that all skipped entries
    // together stay below the convergence target.
    const double skip = target / static_cast<double>(n);
    for (int sweep = 0; sweep < 100; ++sweep) {
      if (off_diagonal_norm(h) <= target) break;
      for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
          const cplx apq = h(p, q);
          const double r = std::abs(apq);
          if (r <= skip) continue;
          const cplx w = apq / r;  // unit phase of the pivot
          const double app = h(p, p).real();
          const double aqq = h(q, q).real();
          const double tau = (aqq - app) / (2.0 * r);
          double t;
          if (tau == 0.0) {
            t = 1.0;
          } else {
            t = -std::copysign(1.0, tau) /
                (std::abs(tau) + std::sqrt(1.0 + tau * tau));
          }
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const double s = t * c;
          const cplx ws = std::conj(w) * s;
          const cplx wc = std::conj(w) * c;
          // Columns: H ← H·J, with J acting on the (p,q) plane.
          for (std::size_t k = 0; k < n; ++k) {
            const cplx hp = h(k, p);
            const cplx hq = h(k, q);
            h(k, p) = c * hp + ws * hq;
            h(k, q) = -s * hp + wc * hq;
          }
          // Rows: H ← J†·H.
          for (std::size_t k = 0; k < n; ++k) {
            const cplx hp = h(p, k);
            const cplx hq = h(q, k);
            h(p, k) = c * hp + w * s * hq;
            h(q, k) = -s * hp + w * c * hq;
          }
          h(p, q) = 0.0;
          h(q, p) = 0.0;
          for (std::size_t k = 0; k < n; ++k) {
            const cplx vp = v(k, p);
            const cplx vq = v(k, q);
            v(k, p) = c * vp + ws * vq;
            v(k, q) = -s * vp + wc * vq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = h(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });

  SpectralData out;
  out.eigenvalues.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = diag[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
  }
  fix_column_phases(out.vectors);

  double maxabs = 0.0;
  for (double lam : out.eigenvalues) maxabs = std::max(maxabs, std::abs(lam));
  out.rank = 0;
  for (double lam : out.eigenvalues)
    if (std::abs(lam) > kEigZeroCutoff * maxabs && maxabs > 0.0) ++out.rank;
  return out;
}

SvdResult svd(const ComplexMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t k = std::min(m, n);
  const bool rows_smaller = m <= n;

  const ComplexMatrix gram =
      rows_smaller ? a * a.adjoint() : a.adjoint() * a;
  SpectralData sd = eig_hermitian(gram);

  std::vector<double> sing(k, 0.0);
  for (std::size_t i = 0; i < k; ++i)
    sing[i] = std::sqrt(std::max(0.0, sd.eigenvalues[i]));
  const double smax = sing.empty() ? 0.0 : sing[0];
  const double cutoff = kSvdZeroCutoff * smax;

  const std::size_t other_dim = rows_smaller ? n : m;
  std::vector<std::vector<cplx>> other_cols;
  const ComplexMatrix pre = rows_smaller ? a.adjoint() : a;
  for (std::size_t j = 0; j < k; ++j) {
    if (sing[j] <= cutoff || sing[j] == 0.0) break;
    std::vector<cplx> col(other_dim, 0.0);
    for (std::size_t i = 0; i < other_dim; ++i) {
      cplx s = 0.0;
      for (std::size_t t = 0; t < pre.cols(); ++t)
        s += pre(i, t) * sd.vectors(t, j);
      col[i] = s / sing[j];
    }
    other_cols.push_back(std::move(col));
  }
  complete_orthonormal(other_cols, other_dim);

  ComplexMatrix other(other_dim, other_dim);
  for (std::size_t j = 0; j < other_dim; ++j)
    for (std::size_t i = 0; i < other_dim; ++i)
      other(i, j) = other_cols[j][i];

  SvdResult out;
  out.singulars = std::move(sing);
  if (rows_smaller) {
    out.u = sd.vectors;
    out.v = std::move(other);
  } else {
    out.u = std::move(other);
    out.v = sd.vectors;
  }
  return out;
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim < 1) {
    throw Error(ErrorCode::BadSpec, "random_unitary needs dim >= 1");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = cplx(re, im) / std::sqrt(2.0);
    }

  // Modified Gram–Schmidt with re-orthogonalization; the implicit R has a
  // positive diagonal, which makes Q Haar distributed.
  ComplexMatrix q(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<cplx> v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = g(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t jj = 0; jj < j; ++jj) {
        cplx ip = 0.0;
        for (std::size_t i = 0; i < dim; ++i) ip += std::conj(q(i, jj)) * v[i];
        for (std::size_t i = 0; i < dim; ++i) v[i] -= ip * q(i, jj);
      }
    }
    double nrm = 0.0;
    for (const cplx& z : v) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) {
      throw Error(ErrorCode::Internal, "degenerate Ginibre sample");
    }
    for (std::size_t i = 0; i < dim; ++i) q(i, j) = v[i] / nrm;
  }
  return q;
}

double power_sum(const std::vector<double>& eigenvalues, unsigned k) {
  double s = 0.0;
  for (double lam : eigenvalues) s += std::pow(lam, static_cast<double>(k));
  return s;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace luq
