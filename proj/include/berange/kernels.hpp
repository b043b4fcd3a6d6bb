#pragma once

// Reproducing kernels of the supported spaces.
//   Hardy H^2 (Szego kernel)  k_w(z) = 1 / (1 - conj(w) z)
//   Bergman A^2               k_w(z) = 1 / (1 - conj(w) z)^2
//   C^n, standard basis       k_i(j) = [i == j]
// Points of C^n are basis indices carried in the real part (imaginary part 0).

#include <cstddef>
#include <string>

#include "berange/types.hpp"

namespace berange {

enum class SpaceKind { Hardy, Bergman, FiniteDim };

class KernelSpace {
 public:
  static KernelSpace hardy() { return KernelSpace(SpaceKind::Hardy, 0); }
  static KernelSpace bergman() { return KernelSpace(SpaceKind::Bergman, 0); }
  /// Throws InvalidParameter for n == 0.
  static KernelSpace finite_dim(std::size_t n);

  SpaceKind kind() const { return kind_; }
  /// Dimension for FiniteDim, 0 otherwise.
  std::size_t dimension() const { return n_; }
  bool on_disk() const { return kind_ != SpaceKind::FiniteDim; }

  std::string name() const;

  bool operator==(const KernelSpace&) const = default;

 private:
  KernelSpace(SpaceKind kind, std::size_t n) : kind_(kind), n_(n) {}
  SpaceKind kind_;
  std::size_t n_;
};

/// Points with |z| >= 1 - kDiskGuard are outside every disk space.
inline constexpr double kDiskGuard = 1e-12;

/// Throws OutOfDomain unless x is a valid point of the space.
void require_in_domain(const KernelSpace& space, Complex x);

/// Basis index of a FiniteDim point after validation.
std::size_t basis_index(const KernelSpace& space, Complex x);

/// k_w(z).
Complex kernel_eval(const KernelSpace& space, Complex w, Complex z);

/// ||k_x||^2 = k_x(x) > 0.
double kernel_norm_sq(const KernelSpace& space, Complex x);

}  // namespace berange
