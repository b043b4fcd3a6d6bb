#include <limits>

#include "simd_internal.hpp"

namespace berange::simd {
namespace {

void moebius_transform(const MoebiusCoeffs& m, const double* re, const double* im,
                       double* out_re, double* out_im, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) detail::moebius_one(m, re[i], im[i], out_re[i], out_im[i]);
}

void polynomial_transform(const Complex* c, std::size_t len, const double* re, const double* im,
                          double* out_re, double* out_im, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    detail::polynomial_one(c, len, re[i], im[i], out_re[i], out_im[i]);
}

double min_dist_sq(double qx, double qy, const double* xs, const double* ys, std::size_t n) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - qx;
    const double dy = ys[i] - qy;
    const double d = dx * dx + dy * dy;
    if (d < best) best = d;
  }
  return best;
}

void complex_axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    double yr = y[i].real(), yi = y[i].imag();
    detail::cmul_add(ar, ai, x[i].real(), x[i].imag(), yr, yi);
    y[i] = Complex(yr, yi);
  }
}

void complex_rotate(Complex* x, Complex* y, std::size_t n, Complex m00, Complex m01, Complex m10,
                    Complex m11) {
  for (std::size_t i = 0; i < n; ++i) detail::rotate_one(x[i], y[i], m00, m01, m10, m11);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Backend::Scalar, moebius_transform, polynomial_transform,
                                 min_dist_sq,     complex_axpy,      complex_rotate};
  return table;
}

}  // namespace berange::simd
