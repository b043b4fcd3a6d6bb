#include "berange/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "berange/error.hpp"
#include "berange/simd.hpp"

namespace berange {

DenseMatrix DenseMatrix::from_rows(const std::vector<std::vector<Complex>>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) throw InvalidParameter("matrix must have at least one row");
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InvalidParameter("matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_finite(rows[i][j])) throw InvalidParameter("matrix entries must be finite");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::diagonal(std::span<const Complex> d) {
  DenseMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex DenseMatrix::trace() const {
  Complex t{};
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex& z : a_) s += abs_sq(z);
  return std::sqrt(s);
}

double DenseMatrix::hermitian_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

DenseMatrix operator*(const DenseMatrix& x, const DenseMatrix& y) {
  const std::size_t n = x.n_;
  DenseMatrix out(n);
  const auto& k = simd::active();
  // Row i of the product accumulates x(i,l) * (row l of y).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      const Complex s = x(i, l);
      if (s == Complex{}) continue;
      k.complex_axpy(s, y.a_.data() + l * n, out.a_.data() + i * n, n);
    }
  return out;
}

DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
  DenseMatrix out(x.n_);
  for (std::size_t i = 0; i < x.a_.size(); ++i) out.a_[i] = x.a_[i] - y.a_[i];
  return out;
}

Complex quadratic_form(const DenseMatrix& a, std::span<const Complex> u, std::span<const Complex> v) {
  const std::size_t n = a.size();
  Complex total{};
  for (std::size_t i = 0; i < n; ++i) {
    Complex row{};
    for (std::size_t j = 0; j < n; ++j) row += a(i, j) * v[j];
    total += std::conj(u[i]) * row;
  }
  return total;
}

}  // namespace berange
