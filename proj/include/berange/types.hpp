#pragma once

#include <cmath>
#include <complex>

namespace berange {

/// A point of the complex plane. Every range (Berezin or numerical) is a set of these.
using Complex = std::complex<double>;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline double abs_sq(Complex z) { return z.real() * z.real() + z.imag() * z.imag(); }

}  // namespace berange
