#include <atomic>
#include <string>

#include "berange/error.hpp"
#include "simd_internal.hpp"

namespace berange::simd {

namespace detail {
#if !defined(BERANGE_HAVE_AVX2)
const KernelTable* avx2_table() { return nullptr; }
#endif
#if !defined(BERANGE_HAVE_NEON)
const KernelTable* neon_table() { return nullptr; }
#endif
}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if defined(BERANGE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* best_table() {
  if (cpu_has_avx2() && detail::avx2_table()) return detail::avx2_table();
  if (detail::neon_table()) return detail::neon_table();
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& override_slot() {
  static std::atomic<const KernelTable*> slot{nullptr};
  return slot;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2: return cpu_has_avx2() && detail::avx2_table() != nullptr;
    case Backend::Neon: return detail::neon_table() != nullptr;
  }
  return false;
}

const KernelTable& kernels_for(Backend b) {
  if (!backend_available(b))
    throw InvalidParameter("SIMD backend unavailable: " + std::string(backend_name(b)));
  switch (b) {
    case Backend::Avx2: return *detail::avx2_table();
    case Backend::Neon: return *detail::neon_table();
    case Backend::Scalar: break;
  }
  return scalar_kernels();
}

const KernelTable& active() {
  if (const KernelTable* forced = override_slot().load(std::memory_order_acquire)) return *forced;
  static const KernelTable* const best = best_table();
  return *best;
}

Backend active_backend() { return active().backend; }

void force_backend(Backend b) { override_slot().store(&kernels_for(b), std::memory_order_release); }

void reset_backend() { override_slot().store(nullptr, std::memory_order_release); }

}  // namespace berange::simd
