#include "berange/kernels.hpp"

#include <cmath>

#include "berange/error.hpp"

namespace berange {

KernelSpace KernelSpace::finite_dim(std::size_t n) {
  if (n == 0) throw InvalidParameter("FiniteDim space requires n >= 1");
  return KernelSpace(SpaceKind::FiniteDim, n);
}

std::string KernelSpace::name() const {
  switch (kind_) {
    case SpaceKind::Hardy: return "hardy";
    case SpaceKind::Bergman: return "bergman";
    case SpaceKind::FiniteDim: return "finite(" + std::to_string(n_) + ")";
  }
  return "?";
}

void require_in_domain(const KernelSpace& space, Complex x) {
  if (!is_finite(x)) throw OutOfDomain("point is not finite");
  if (space.on_disk()) {
    if (std::abs(x) >= 1.0 - kDiskGuard) throw OutOfDomain("point outside the open unit disk");
    return;
  }
  const double r = x.real();
  if (x.imag() != 0.0 || r != std::floor(r) || r < 0.0 ||
      r >= static_cast<double>(space.dimension()))
    throw OutOfDomain("point is not a basis index of " + space.name());
}

std::size_t basis_index(const KernelSpace& space, Complex x) {
  require_in_domain(space, x);
  return static_cast<std::size_t>(x.real());
}

Complex kernel_eval(const KernelSpace& space, Complex w, Complex z) {
  require_in_domain(space, w);
  require_in_domain(space, z);
  switch (space.kind()) {
    case SpaceKind::Hardy: return 1.0 / (1.0 - std::conj(w) * z);
    case SpaceKind::Bergman: {
      const Complex h = 1.0 / (1.0 - std::conj(w) * z);
      return h * h;
    }
    case SpaceKind::FiniteDim: return w == z ? Complex(1.0) : Complex(0.0);
  }
  return {};
}

double kernel_norm_sq(const KernelSpace& space, Complex x) {
  require_in_domain(space, x);
  switch (space.kind()) {
    case SpaceKind::Hardy: return 1.0 / (1.0 - abs_sq(x));
    case SpaceKind::Bergman: {
      const double h = 1.0 / (1.0 - abs_sq(x));
      return h * h;
    }
    case SpaceKind::FiniteDim: return 1.0;
  }
  return 0.0;
}

}  // namespace berange
