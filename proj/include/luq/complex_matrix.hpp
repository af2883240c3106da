// SPDX-License-Identifier: Apache-2.0

#ifndef LUQ_COMPLEX_MATRIX_HPP
#define LUQ_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "luq/errors.hpp"

namespace luq {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major storage. The workhorse value type for
/// every reduced matrix and unfolding in the library.
class ComplexMatrix {
public:
  ComplexMatrix() : rows_(0), cols_(0) {}

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}

  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<double>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cplx>& entries() const { return data_; }
  std::vector<cplx>& entries() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix operator*(cplx scalar) const;

  cplx trace() const;
  double frobenius_norm() const;
  bool all_finite() const;

  /// ‖A − A†‖_F ≤ tol·max(1, ‖A‖_F)
  bool is_hermitian(double tol = 1e-10) const;
  /// ‖U†U − I‖_F ≤ tol
  bool is_unitary(double tol = 1e-8) const;

private:
  std::size_t rows_, cols_;
  std::vector<cplx> data_;
};

/// AB − BA for square matrices of equal dimension.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tensor (Kronecker) product, blocks ordered by a's index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(A^k) for Hermitian A, computed through the eigenvalues.
double trace_power(const ComplexMatrix& a, unsigned k);

}  // namespace luq

#endif  // LUQ_COMPLEX_MATRIX_HPP
