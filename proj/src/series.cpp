#include <algorithm>
#include <cmath>

#include "berange/error.hpp"
#include "berange/simd.hpp"
#include "berange/symbols.hpp"

namespace berange {

Series truncated_mul(const Series& a, const Series& b, std::size_t n) {
  Series out(n, Complex{});
  const std::size_t na = std::min(a.size(), n);
  for (std::size_t i = 0; i < na; ++i) {
    if (a[i] == Complex{}) continue;
    const std::size_t len = std::min(b.size(), n - i);
    simd::active().complex_axpy(a[i], b.data(), out.data() + i, len);
  }
  return out;
}

Series reciprocal_linear_series(Complex c, Complex d, std::size_t n) {
  if (!(std::abs(d) > std::abs(c)))
    throw ExpansionDivergence("series of 1/(cz+d) diverges on the closed disk (|d| <= |c|)");
  Series out(n);
  const Complex ratio = -c / d;
  Complex term = 1.0 / d;
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = term;
    term *= ratio;
  }
  return out;
}

}  // namespace berange
