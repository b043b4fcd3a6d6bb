// aarch64 always has Advanced SIMD, so this variant needs no runtime probe.

#include <arm_neon.h>

#include <limits>

#include "simd_internal.hpp"

namespace berange::simd {
namespace {

void moebius_transform(const MoebiusCoeffs& m, const double* re, const double* im,
                       double* out_re, double* out_im, std::size_t n) {
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t ar = vdupq_n_f64(m.a.real()), ai = vdupq_n_f64(m.a.imag());
  const float64x2_t br = vdupq_n_f64(m.b.real()), bi = vdupq_n_f64(m.b.imag());
  const float64x2_t cr = vdupq_n_f64(m.c.real()), ci = vdupq_n_f64(m.c.imag());
  const float64x2_t dr = vdupq_n_f64(m.d.real()), di = vdupq_n_f64(m.d.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(re + i);
    const float64x2_t y = vld1q_f64(im + i);
    const float64x2_t mod = vaddq_f64(vmulq_f64(x, x), vmulq_f64(y, y));
    const float64x2_t s = vsubq_f64(one, mod);
    const float64x2_t czr = vsubq_f64(vmulq_f64(cr, x), vmulq_f64(ci, y));
    const float64x2_t czi = vaddq_f64(vmulq_f64(cr, y), vmulq_f64(ci, x));
    const float64x2_t bzr = vaddq_f64(vmulq_f64(br, x), vmulq_f64(bi, y));
    const float64x2_t bzi = vsubq_f64(vmulq_f64(bi, x), vmulq_f64(br, y));
    const float64x2_t denr = vaddq_f64(vsubq_f64(dr, vmulq_f64(ar, mod)), vsubq_f64(czr, bzr));
    const float64x2_t deni = vaddq_f64(vsubq_f64(di, vmulq_f64(ai, mod)), vsubq_f64(czi, bzi));
    const float64x2_t numr = vmulq_f64(s, vaddq_f64(czr, dr));
    const float64x2_t numi = vmulq_f64(s, vaddq_f64(czi, di));
    const float64x2_t q = vaddq_f64(vmulq_f64(denr, denr), vmulq_f64(deni, deni));
    vst1q_f64(out_re + i,
              vdivq_f64(vaddq_f64(vmulq_f64(numr, denr), vmulq_f64(numi, deni)), q));
    vst1q_f64(out_im + i,
              vdivq_f64(vsubq_f64(vmulq_f64(numi, denr), vmulq_f64(numr, deni)), q));
  }
  for (; i < n; ++i) detail::moebius_one(m, re[i], im[i], out_re[i], out_im[i]);
}

void polynomial_transform(const Complex* c, std::size_t len, const double* re, const double* im,
                          double* out_re, double* out_im, std::size_t n) {
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t x = vld1q_f64(re + i);
    const float64x2_t y = vld1q_f64(im + i);
    float64x2_t pr = zero, pi = zero;
    for (std::size_t k = len; k-- > 0;) {
      const float64x2_t nr =
          vaddq_f64(vsubq_f64(vmulq_f64(pr, x), vmulq_f64(pi, y)), vdupq_n_f64(c[k].real()));
      const float64x2_t ni =
          vaddq_f64(vaddq_f64(vmulq_f64(pr, y), vmulq_f64(pi, x)), vdupq_n_f64(c[k].imag()));
      pr = nr;
      pi = ni;
    }
    const float64x2_t s = vsubq_f64(one, vaddq_f64(vmulq_f64(x, x), vmulq_f64(y, y)));
    const float64x2_t wr = vaddq_f64(vmulq_f64(x, pr), vmulq_f64(y, pi));
    const float64x2_t wi = vsubq_f64(vmulq_f64(x, pi), vmulq_f64(y, pr));
    const float64x2_t denr = vsubq_f64(one, wr);
    const float64x2_t deni = vsubq_f64(zero, wi);
    const float64x2_t q = vaddq_f64(vmulq_f64(denr, denr), vmulq_f64(deni, deni));
    vst1q_f64(out_re + i, vdivq_f64(vmulq_f64(s, denr), q));
    vst1q_f64(out_im + i, vdivq_f64(vsubq_f64(zero, vmulq_f64(s, deni)), q));
  }
  for (; i < n; ++i) detail::polynomial_one(c, len, re[i], im[i], out_re[i], out_im[i]);
}

double min_dist_sq(double qx, double qy, const double* xs, const double* ys, std::size_t n) {
  const float64x2_t vx = vdupq_n_f64(qx), vy = vdupq_n_f64(qy);
  float64x2_t best = vdupq_n_f64(std::numeric_limits<double>::infinity());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t dx = vsubq_f64(vld1q_f64(xs + i), vx);
    const float64x2_t dy = vsubq_f64(vld1q_f64(ys + i), vy);
    best = vminq_f64(best, vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy)));
  }
  double out = vminvq_f64(best);
  for (; i < n; ++i) {
    const double dx = xs[i] - qx;
    const double dy = ys[i] - qy;
    const double d = dx * dx + dy * dy;
    if (d < out) out = d;
  }
  return out;
}

// One complex value per register: lanes (re, im).
inline float64x2_t cmul(float64x2_t x, double wr, double wi) {
  const float64x2_t swapped = vextq_f64(x, x, 1);
  const float64x2_t t1 = vmulq_n_f64(x, wr);
  const float64x2_t t2 = vmulq_n_f64(swapped, wi);
  // (t1.re - t2.re, t1.im + t2.im)
  const float64x2_t sign = {-1.0, 1.0};
  return vaddq_f64(t1, vmulq_f64(t2, sign));
}

void complex_axpy(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  auto* xd = reinterpret_cast<const double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xd + 2 * i);
    vst1q_f64(yd + 2 * i, vaddq_f64(vld1q_f64(yd + 2 * i), cmul(xv, alpha.real(), alpha.imag())));
  }
}

void complex_rotate(Complex* x, Complex* y, std::size_t n, Complex m00, Complex m01, Complex m10,
                    Complex m11) {
  auto* xd = reinterpret_cast<double*>(x);
  auto* yd = reinterpret_cast<double*>(y);
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xd + 2 * i);
    const float64x2_t yv = vld1q_f64(yd + 2 * i);
    const float64x2_t nx =
        vaddq_f64(cmul(xv, m00.real(), m00.imag()), cmul(yv, m10.real(), m10.imag()));
    const float64x2_t ny =
        vaddq_f64(cmul(xv, m01.real(), m01.imag()), cmul(yv, m11.real(), m11.imag()));
    vst1q_f64(xd + 2 * i, nx);
    vst1q_f64(yd + 2 * i, ny);
  }
}

}  // namespace

namespace detail {
const KernelTable* neon_table() {
  static const KernelTable table{Backend::Neon, moebius_transform, polynomial_transform,
                                 min_dist_sq,   complex_axpy,      complex_rotate};
  return &table;
}
}  // namespace detail

}  // namespace berange::simd
