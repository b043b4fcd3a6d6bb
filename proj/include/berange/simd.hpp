#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference and, where
// the target supports it, an AVX2 (x86-64) or NEON (aarch64) variant. All
// variants perform the same IEEE operations in the same order without fused
// multiply-add, so their results are bit-identical; tests assert this.

#include <cstddef>
#include <span>
#include <string_view>

#include "berange/types.hpp"

namespace berange::simd {

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

/// Coefficients of z -> (a z + b) / (c z + d).
struct MoebiusCoeffs {
  Complex a{1.0, 0.0};
  Complex b{0.0, 0.0};
  Complex c{0.0, 0.0};
  Complex d{1.0, 0.0};
};

struct KernelTable {
  Backend backend;

  // Hardy-space composition transform (1-|z|^2) / (1 - conj(z) phi(z)) for a
  // Moebius symbol, evaluated as (1-|z|^2)(cz+d) / ((d - a|z|^2) + (cz - b conj z)).
  void (*moebius_transform)(const MoebiusCoeffs& m, const double* re, const double* im,
                            double* out_re, double* out_im, std::size_t n);

  // Same transform for a polynomial symbol; coefficients in increasing degree, interleaved.
  void (*polynomial_transform)(const Complex* coeffs, std::size_t degree_plus_one,
                               const double* re, const double* im, double* out_re,
                               double* out_im, std::size_t n);

  // min_i (xs[i]-qx)^2 + (ys[i]-qy)^2; +inf for n == 0.
  double (*min_dist_sq)(double qx, double qy, const double* xs, const double* ys,
                        std::size_t n);

  // y[i] += alpha * x[i]
  void (*complex_axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t n);

  // (x[i], y[i]) <- (m00 x[i] + m10 y[i], m01 x[i] + m11 y[i])
  void (*complex_rotate)(Complex* x, Complex* y, std::size_t n, Complex m00, Complex m01,
                         Complex m10, Complex m11);
};

const KernelTable& scalar_kernels();

/// Kernel table for a backend; throws InvalidParameter when the CPU or build lacks it.
const KernelTable& kernels_for(Backend b);

bool backend_available(Backend b);

/// Table used by the library: the best available backend unless overridden.
const KernelTable& active();

Backend active_backend();

/// Pins the library to one backend (tests use this to compare paths end to end).
void force_backend(Backend b);

/// Restores automatic selection.
void reset_backend();

// Span conveniences over the active table.
inline double min_dist_sq(double qx, double qy, std::span<const double> xs,
                          std::span<const double> ys) {
  return active().min_dist_sq(qx, qy, xs.data(), ys.data(), xs.size());
}

inline void complex_axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  active().complex_axpy(alpha, x.data(), y.data(), x.size());
}

}  // namespace berange::simd
