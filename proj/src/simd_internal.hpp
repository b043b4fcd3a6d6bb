#pragma once

#include "berange/simd.hpp"

namespace berange::simd::detail {

// Scalar single-element bodies shared by every backend for loop tails. Keep
// the operation order in sync with the vector bodies.

inline void moebius_one(const MoebiusCoeffs& m, double x, double y, double& tr, double& ti) {
  const double ar = m.a.real(), ai = m.a.imag();
  const double br = m.b.real(), bi = m.b.imag();
  const double cr = m.c.real(), ci = m.c.imag();
  const double dr = m.d.real(), di = m.d.imag();
  const double mod = x * x + y * y;
  const double s = 1.0 - mod;
  const double czr = cr * x - ci * y;
  const double czi = cr * y + ci * x;
  const double bzr = br * x + bi * y;
  const double bzi = bi * x - br * y;
  const double denr = (dr - ar * mod) + (czr - bzr);
  const double deni = (di - ai * mod) + (czi - bzi);
  const double numr = s * (czr + dr);
  const double numi = s * (czi + di);
  const double q = denr * denr + deni * deni;
  tr = (numr * denr + numi * deni) / q;
  ti = (numi * denr - numr * deni) / q;
}

inline void polynomial_one(const Complex* c, std::size_t len, double x, double y, double& tr,
                           double& ti) {
  double pr = 0.0, pi = 0.0;
  for (std::size_t k = len; k-- > 0;) {
    const double nr = (pr * x - pi * y) + c[k].real();
    const double ni = (pr * y + pi * x) + c[k].imag();
    pr = nr;
    pi = ni;
  }
  const double s = 1.0 - (x * x + y * y);
  const double wr = x * pr + y * pi;
  const double wi = x * pi - y * pr;
  const double denr = 1.0 - wr;
  const double deni = 0.0 - wi;
  const double q = denr * denr + deni * deni;
  tr = (s * denr) / q;
  ti = (0.0 - s * deni) / q;
}

inline void cmul_add(double ar, double ai, double xr, double xi, double& yr, double& yi) {
  yr = yr + (ar * xr - ai * xi);
  yi = yi + (ar * xi + ai * xr);
}

inline void rotate_one(Complex& x, Complex& y, Complex m00, Complex m01, Complex m10,
                       Complex m11) {
  const double xr = x.real(), xi = x.imag(), yr = y.real(), yi = y.imag();
  const double nxr = (m00.real() * xr - m00.imag() * xi) + (m10.real() * yr - m10.imag() * yi);
  const double nxi = (m00.real() * xi + m00.imag() * xr) + (m10.real() * yi + m10.imag() * yr);
  const double nyr = (m01.real() * xr - m01.imag() * xi) + (m11.real() * yr - m11.imag() * yi);
  const double nyi = (m01.real() * xi + m01.imag() * xr) + (m11.real() * yi + m11.imag() * yr);
  x = Complex(nxr, nxi);
  y = Complex(nyr, nyi);
}

const KernelTable* avx2_table();  // nullptr when not built
const KernelTable* neon_table();  // nullptr when not built

}  // namespace berange::simd::detail
