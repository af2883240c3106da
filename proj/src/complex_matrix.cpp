// SPDX-License-Identifier: Apache-2.0

#include "luq/complex_matrix.hpp"

#include <cmath>
#include <utility>

#include "luq/linalg.hpp"

namespace luq {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::ShapeMismatch,
                "entry count does not match rows*cols");
  }
  if (!all_finite()) {
    throw Error(ErrorCode::ShapeMismatch, "non-finite matrix entry");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    m.data_[i] = std::conj(data_[i]);
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix addition shape mismatch");
  }
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    m.data_[i] = data_[i] + other.data_[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch,
                "matrix subtraction shape mismatch");
  }
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    m.data_[i] = data_[i] - other.data_[i];
  return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (cols_ != other.rows_) {
    throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  }
  ComplexMatrix m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx aik = (*this)(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        m(i, j) += aik * other(k, j);
      }
    }
  }
  return m;
}

ComplexMatrix ComplexMatrix::operator*(cplx scalar) const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i)
    m.data_[i] = data_[i] * scalar;
  return m;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) {
    throw Error(ErrorCode::NotSquare, "trace of non-square matrix");
  }
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

bool ComplexMatrix::all_finite() const {
  for (const cplx& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  double dev = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      dev += std::norm((*this)(i, j) - std::conj((*this)(j, i))) *
             (i == j ? 1.0 : 2.0);
    }
  }
  return std::sqrt(dev) <= tol * std::max(1.0, frobenius_norm());
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (!is_square()) return false;
  ComplexMatrix g = adjoint() * (*this);
  return (g - identity(rows_)).frobenius_norm() <= tol;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch,
                "commutator needs square matrices of equal dimension");
  }
  return a * b - b * a;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const cplx w = a(ia, ja);
      if (w == cplx(0.0, 0.0)) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          m(ia * b.rows() + ib, ja * b.cols() + jb) = w * b(ib, jb);
    }
  return m;
}

double trace_power(const ComplexMatrix& a, unsigned k) {
  if (!a.is_square()) {
    throw Error(ErrorCode::NotSquare, "trace_power of non-square matrix");
  }
  if (k == 0 || k > a.rows() * a.rows()) {
    throw Error(ErrorCode::BadSpec, "trace_power exponent out of range");
  }
  if (!a.is_hermitian()) {
    throw Error(ErrorCode::NotHermitian, "trace_power needs a Hermitian input");
  }
  SpectralData sd = eig_hermitian(a);
  double s = 0.0;
  for (double lam : sd.eigenvalues) s += std::pow(lam, static_cast<double>(k));
  return s;
}

}  // namespace luq
