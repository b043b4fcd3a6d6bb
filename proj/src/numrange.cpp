#include "berange/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "berange/error.hpp"
#include "berange/simd.hpp"

namespace berange {
namespace {

constexpr int kMaxSweeps = 30;

// Column-major square complex workspace.
struct ColMajor {
  std::size_t n = 0;
  std::vector<Complex> a;

  explicit ColMajor(std::size_t size) : n(size), a(size * size) {}
  Complex& at(std::size_t i, std::size_t j) { return a[j * n + i]; }
  const Complex& at(std::size_t i, std::size_t j) const { return a[j * n + i]; }
  Complex* col(std::size_t j) { return a.data() + j * n; }
  const Complex* col(std::size_t j) const { return a.data() + j * n; }
};

ColMajor to_col_major(const DenseMatrix& m) {
  ColMajor out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out.at(i, j) = m(i, j);
  return out;
}

// x * y, columns accumulated with axpy.
ColMajor multiply(const ColMajor& x, const ColMajor& y) {
  const std::size_t n = x.n;
  ColMajor out(n);
  const auto& k = simd::active();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      const Complex s = y.at(l, j);
      if (s != Complex{}) k.complex_axpy(s, x.col(l), out.col(j), n);
    }
  return out;
}

ColMajor adjoint(const ColMajor& x) {
  ColMajor out(x.n);
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t j = 0; j < x.n; ++j) out.at(j, i) = std::conj(x.at(i, j));
  return out;
}

// Removes the rounding asymmetry left by a change of basis.
void hermitize(ColMajor& h) {
  for (std::size_t j = 0; j < h.n; ++j) {
    h.at(j, j) = h.at(j, j).real();
    for (std::size_t i = j + 1; i < h.n; ++i) {
      const Complex x = 0.5 * (h.at(i, j) + std::conj(h.at(j, i)));
      h.at(i, j) = x;
      h.at(j, i) = std::conj(x);
    }
  }
}

double off_diagonal_norm(const ColMajor& h) {
  double s = 0.0;
  for (std::size_t j = 0; j < h.n; ++j)
    for (std::size_t i = 0; i < h.n; ++i)
      if (i != j) s += abs_sq(h.at(i, j));
  return std::sqrt(s);
}

double frobenius(const ColMajor& h) {
  double s = 0.0;
  for (const Complex& z : h.a) s += abs_sq(z);
  return std::sqrt(s);
}

struct JacobiResult {
  int sweeps = 0;
  double off = 0.0;
};

// Diagonalizes Hermitian h in place, applying every rotation to v as well.
JacobiResult cyclic_jacobi(ColMajor& h, ColMajor& v) {
  const std::size_t n = h.n;
  const auto& k = simd::active();
  for (std::size_t i = 0; i < n; ++i) h.at(i, i) = h.at(i, i).real();
  const double scale = frobenius(h);
  JacobiResult result;
  result.off = off_diagonal_norm(h);
  if (scale == 0.0) return result;
  const double target = 1e-13 * scale;
  const double skip = 1e-17 * scale / static_cast<double>(n);

  while (result.off > target && result.sweeps < kMaxSweeps) {
    ++result.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = h.at(p, q);
        const double mag = std::abs(g);
        if (mag <= skip) continue;
        const double a = h.at(p, p).real();
        const double b = h.at(q, q).real();
        const Complex phase_conj = std::conj(g) / mag;
        const double theta = (b - a) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex m00 = c, m01 = s, m10 = -s * phase_conj, m11 = c * phase_conj;

        k.complex_rotate(h.col(p), h.col(q), n, m00, m01, m10, m11);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          h.at(p, r) = std::conj(h.at(r, p));
          h.at(q, r) = std::conj(h.at(r, q));
        }
        h.at(p, p) = a - t * mag;
        h.at(q, q) = b + t * mag;
        h.at(p, q) = 0.0;
        h.at(q, p) = 0.0;
        k.complex_rotate(v.col(p), v.col(q), n, m00, m01, m10, m11);
      }
    result.off = off_diagonal_norm(h);
  }
  return result;
}

EigenDecomposition finish(const ColMajor& h, const ColMajor& v, const JacobiResult& jr) {
  const std::size_t n = h.n;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return h.at(x, x).real() > h.at(y, y).real(); });
  EigenDecomposition out;
  out.values.reserve(n);
  out.vectors = DenseMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values.push_back(h.at(order[j], order[j]).real());
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v.at(i, order[j]);
  }
  out.sweeps = jr.sweeps;
  out.off_diagonal = jr.off;
  return out;
}

void require_hermitian(const DenseMatrix& h) {
  double biggest = 1.0;
  for (const Complex& z : h.data()) biggest = std::max(biggest, std::abs(z));
  if (h.hermitian_defect() > 1e-12 * biggest)
    throw ContractViolation("hermitian_eigs: input is not Hermitian");
}

}  // namespace

DenseMatrix truncate_composition(const SymbolSpec& symbol, std::size_t n, const KernelSpace& space) {
  if (n < 2) throw InvalidParameter("truncation order must be >= 2");
  if (!space.on_disk()) throw InvalidParameter("truncation needs the Hardy or Bergman space");
  if (!validate_self_map(symbol)) throw NotSelfMap();
  const std::vector<Series> powers = power_series_table(symbol, n, n);
  DenseMatrix a(n);
  const bool bergman = space.kind() == SpaceKind::Bergman;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      Complex v = powers[k][j];
      if (bergman) v *= std::sqrt(static_cast<double>(k + 1) / static_cast<double>(j + 1));
      a(j, k) = v;
    }
  return a;
}

EigenDecomposition hermitian_eigs(const DenseMatrix& h) {
  return hermitian_eigs(h, DenseMatrix::identity(h.size()));
}

EigenDecomposition hermitian_eigs(const DenseMatrix& h, const DenseMatrix& basis) {
  require_hermitian(h);
  if (basis.size() != h.size()) throw InvalidParameter("hermitian_eigs: basis size mismatch");
  ColMajor v = to_col_major(basis);
  ColMajor w = to_col_major(h);
  bool identity = true;
  for (std::size_t i = 0; i < h.size() && identity; ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      if (basis(i, j) != (i == j ? Complex(1.0) : Complex{})) {
        identity = false;
        break;
      }
  if (!identity) {
    w = multiply(adjoint(v), multiply(w, v));
    hermitize(w);
  }
  const JacobiResult jr = cyclic_jacobi(w, v);
  return finish(w, v, jr);
}

NumericalRangeBoundary numerical_range_boundary(const DenseMatrix& a, std::size_t angle_count) {
  if (angle_count < 16) throw InvalidParameter("numerical_range_boundary needs >= 16 angles");
  const std::size_t n = a.size();
  NumericalRangeBoundary out;
  out.angles.reserve(angle_count);

  ColMajor v(n);
  for (std::size_t i = 0; i < n; ++i) v.at(i, i) = 1.0;
  bool warm = false;
  std::vector<Complex> top(n);

  for (std::size_t m = 0; m < angle_count; ++m) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(angle_count);
    const Complex e = std::polar(1.0, theta);
    ColMajor h(n);
    for (std::size_t i = 0; i < n; ++i) {
      h.at(i, i) = (e * a(i, i)).real();
      for (std::size_t j = i + 1; j < n; ++j) {
        const Complex x = 0.5 * (e * a(i, j) + std::conj(e * a(j, i)));
        h.at(i, j) = x;
        h.at(j, i) = std::conj(x);
      }
    }
    // Successive angles are close, so the previous eigenbasis nearly diagonalizes H_theta.
    if (warm) {
      h = multiply(adjoint(v), multiply(h, v));
      hermitize(h);
    }
    cyclic_jacobi(h, v);
    warm = true;

    std::size_t best = 0;
    for (std::size_t j = 1; j < n; ++j)
      if (h.at(j, j).real() > h.at(best, best).real()) best = j;
    std::copy(v.col(best), v.col(best) + n, top.begin());
    double norm_sq = 0.0;
    for (const Complex& z : top) norm_sq += abs_sq(z);
    const Complex p = quadratic_form(a, top, top) / norm_sq;

    out.angles.push_back(theta);
    out.support_points.push_back(p);
    out.support_values.push_back(h.at(best, best).real());
    out.radius = std::max(out.radius, std::abs(p));
  }
  return out;
}

double numerical_radius(const DenseMatrix& a, std::size_t angle_count) {
  return numerical_range_boundary(a, angle_count).radius;
}

double EllipticalRange::major_axis() const {
  return std::sqrt(minor_axis * minor_axis + abs_sq(focus1 - focus2));
}

double EllipticalRange::boundary_residual(Complex p) const {
  return std::abs(std::abs(p - focus1) + std::abs(p - focus2) - major_axis());
}

EllipticalRange elliptical_range_oracle(const DenseMatrix& a) {
  if (a.size() != 2) throw InvalidParameter("elliptical range oracle needs a 2x2 matrix");
  const Complex tr = a(0, 0) + a(1, 1);
  const Complex det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const Complex disc = std::sqrt(0.25 * tr * tr - det);
  const Complex l1 = 0.5 * tr + disc;
  const Complex l2 = 0.5 * tr - disc;
  double tr_ata = 0.0;
  for (const Complex& z : a.data()) tr_ata += abs_sq(z);
  const double minor_sq = tr_ata - abs_sq(l1) - abs_sq(l2);
  return {l1, l2, std::sqrt(std::max(0.0, minor_sq))};
}

}  // namespace berange
