#pragma once

// Helpers shared by the test binaries: seeded random inputs and slow but
// obviously-correct reference computations.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "berange/matrix.hpp"
#include "berange/types.hpp"

namespace berange::test {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  Complex in_disk(double r_max) {
    const double r = r_max * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(0.0, 2.0 * M_PI));
  }
  Complex gaussian() {
    std::normal_distribution<double> n;
    return {n(gen_), n(gen_)};
  }
  DenseMatrix matrix(std::size_t n) {
    DenseMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = gaussian();
    return a;
  }
  DenseMatrix hermitian(std::size_t n) {
    const DenseMatrix a = matrix(n);
    DenseMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Hardy composition transform straight from the kernel formula.
inline Complex hardy_transform_ref(Complex z, Complex phi_z) {
  return (1.0 - std::norm(z)) / (1.0 - std::conj(z) * phi_z);
}

inline Complex blaschke_ref(Complex alpha, Complex z) { return (z - alpha) / (1.0 - std::conj(alpha) * z); }

/// Naive triple loop.
inline DenseMatrix matmul_ref(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

inline double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline double min_distance_ref(const std::vector<Complex>& pts, Complex q) {
  double best = INFINITY;
  for (const Complex& p : pts) best = std::min(best, std::abs(p - q));
  return best;
}

}  // namespace berange::test
