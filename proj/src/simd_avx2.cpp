// Compiled with -mavx2 only; entered solely after a runtime CPU check.

#include <immintrin.h>

#include <limits>

#include "simd_internal.hpp"

namespace berange::simd {
namespace {

void moebius_transform(const MoebiusCoeffs& m, const double* re, const double* im,
                       double* out_re, double* out_im, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d ar = _mm256_set1_pd(m.a.real()), ai = _mm256_set1_pd(m.a.imag());
  const __m256d br = _mm256_set1_pd(m.b.real()), bi = _mm256_set1_pd(m.b.imag());
  const __m256d cr = _mm256_set1_pd(m.c.real()), ci = _mm256_set1_pd(m.c.imag());
  const __m256d dr = _mm256_set1_pd(m.d.real()), di = _mm256_set1_pd(m.d.imag());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(re + i);
    const __m256d y = _mm256_loadu_pd(im + i);
    const __m256d mod = _mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y));
    const __m256d s = _mm256_sub_pd(one, mod);
    const __m256d czr = _mm256_sub_pd(_mm256_mul_pd(cr, x), _mm256_mul_pd(ci, y));
    const __m256d czi = _mm256_add_pd(_mm256_mul_pd(cr, y), _mm256_mul_pd(ci, x));
    const __m256d bzr = _mm256_add_pd(_mm256_mul_pd(br, x), _mm256_mul_pd(bi, y));
    const __m256d bzi = _mm256_sub_pd(_mm256_mul_pd(bi, x), _mm256_mul_pd(br, y));
    const __m256d denr =
        _mm256_add_pd(_mm256_sub_pd(dr, _mm256_mul_pd(ar, mod)), _mm256_sub_pd(czr, bzr));
    const __m256d deni =
        _mm256_add_pd(_mm256_sub_pd(di, _mm256_mul_pd(ai, mod)), _mm256_sub_pd(czi, bzi));
    const __m256d numr = _mm256_mul_pd(s, _mm256_add_pd(czr, dr));
    const __m256d numi = _mm256_mul_pd(s, _mm256_add_pd(czi, di));
    const __m256d q = _mm256_add_pd(_mm256_mul_pd(denr, denr), _mm256_mul_pd(deni, deni));
    const __m256d tr =
        _mm256_div_pd(_mm256_add_pd(_mm256_mul_pd(numr, denr), _mm256_mul_pd(numi, deni)), q);
    const __m256d ti =
        _mm256_div_pd(_mm256_sub_pd(_mm256_mul_pd(numi, denr), _mm256_mul_pd(numr, deni)), q);
    _mm256_storeu_pd(out_re + i, tr);
    _mm256_storeu_pd(out_im + i, ti);
  }
  for (; i < n; ++i) detail::moebius_one(m, re[i], im[i], out_re[i], out_im[i]);
}

void polynomial_transform(const Complex* c, std::size_t len, const double* re, const double* im,
                          double* out_re, double* out_im, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(re + i);
    const __m256d y = _mm256_loadu_pd(im + i);
    __m256d pr = zero, pi = zero;
    for (std::size_t k = len; k-- > 0;) {
      const __m256d nr = _mm256_add_pd(_mm256_sub_pd(_mm256_mul_pd(pr, x), _mm256_mul_pd(pi, y)),
                                       _mm256_set1_pd(c[k].real()));
      const __m256d ni = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(pr, y), _mm256_mul_pd(pi, x)),
                                       _mm256_set1_pd(c[k].imag()));
      pr = nr;
      pi = ni;
    }
    const __m256d s = _mm256_sub_pd(one, _mm256_add_pd(_mm256_mul_pd(x, x), _mm256_mul_pd(y, y)));
    const __m256d wr = _mm256_add_pd(_mm256_mul_pd(x, pr), _mm256_mul_pd(y, pi));
    const __m256d wi = _mm256_sub_pd(_mm256_mul_pd(x, pi), _mm256_mul_pd(y, pr));
    const __m256d denr = _mm256_sub_pd(one, wr);
    const __m256d deni = _mm256_sub_pd(zero, wi);
    const __m256d q = _mm256_add_pd(_mm256_mul_pd(denr, denr), _mm256_mul_pd(deni, deni));
    _mm256_storeu_pd(out_re + i, _mm256_div_pd(_mm256_mul_pd(s, denr), q));
    _mm256_storeu_pd(out_im + i, _mm256_div_pd(_mm256_sub_pd(zero, _mm256_mul_pd(s, deni)), q));
  }
  for (; i < n; ++i) detail::polynomial_one(c, len, re[i], im[i], out_re[i], out_im[i]);
}

double min_dist_sq(double qx, double qy, const double* xs, const double* ys, std::size_t n) {
  const __m256d vx = _mm256_set1_pd(qx), vy = _mm256_set1_pd(qy);
  __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vx);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vy);
    best = _mm256_min_pd(best, _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = lanes[0];
  for (int k = 1; k < 4; ++k)
    if (lanes[k] < out) out = lanes[k];
  for (; i < n; ++i) {
    const double dx = xs[i] - qx;
    const double dy = ys[i] - qy;
    const double d = dx * dx + dy * dy;
    if (d < out) out = d;
  }
  return out;
}

// Interleaved complex doubles: one __m256d holds two complex values.
inline __m256d cmul(__m256d x, __m256d wr, __m256d wi) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(x, wr), _mm256_mul_pd(swapped, wi));
}

void complex_axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const __m256d wr = _mm256_set1_pd(alpha.real()), wi = _mm256_set1_pd(alpha.imag());
  auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul(xv, wr, wi)));
  }
  for (; i < n; ++i) {
    double yr = y[i].real(), yi = y[i].imag();
    detail::cmul_add(alpha.real(), alpha.imag(), x[i].real(), x[i].imag(), yr, yi);
    y[i] = Complex(yr, yi);
  }
}

void complex_rotate(Complex* x, Complex* y, std::size_t n, Complex m00, Complex m01, Complex m10,
                    Complex m11) {
  const __m256d a0r = _mm256_set1_pd(m00.real()), a0i = _mm256_set1_pd(m00.imag());
  const __m256d a1r = _mm256_set1_pd(m01.real()), a1i = _mm256_set1_pd(m01.imag());
  const __m256d b0r = _mm256_set1_pd(m10.real()), b0i = _mm256_set1_pd(m10.imag());
  const __m256d b1r = _mm256_set1_pd(m11.real()), b1i = _mm256_set1_pd(m11.imag());
  auto* xd = reinterpret_cast<double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    const __m256d nx = _mm256_add_pd(cmul(xv, a0r, a0i), cmul(yv, b0r, b0i));
    const __m256d ny = _mm256_add_pd(cmul(xv, a1r, a1i), cmul(yv, b1r, b1i));
    _mm256_storeu_pd(xd + 2 * i, nx);
    _mm256_storeu_pd(yd + 2 * i, ny);
  }
  for (; i < n; ++i) detail::rotate_one(x[i], y[i], m00, m01, m10, m11);
}

}  // namespace

namespace detail {
const KernelTable* avx2_table() {
  static const KernelTable table{Backend::Avx2, moebius_transform, polynomial_transform,
                                 min_dist_sq,   complex_axpy,      complex_rotate};
  return &table;
}
}  // namespace detail

}  // namespace berange::simd
