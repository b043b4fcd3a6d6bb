#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "berange/types.hpp"

namespace berange {

/// Square complex matrix, row-major.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), a_(n * n) {}
  /// Throws InvalidParameter unless `rows` is square with n >= 1 and finite entries.
  static DenseMatrix from_rows(const std::vector<std::vector<Complex>>& rows);
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const Complex> d);

  std::size_t size() const { return n_; }
  Complex& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  std::span<const Complex> data() const { return a_; }

  DenseMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  /// max_ij |A_ij - conj(A_ji)|
  double hermitian_defect() const;

  friend DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y);
  friend DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y);

 private:
  std::size_t n_ = 0;
  std::vector<Complex> a_;
};

/// u* A v
Complex quadratic_form(const DenseMatrix& a, std::span<const Complex> u, std::span<const Complex> v);

}  // namespace berange
