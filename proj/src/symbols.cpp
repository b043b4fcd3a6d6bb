#include "berange/symbols.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "berange/error.hpp"
#include "berange/kernels.hpp"

namespace berange {
namespace {

std::string fmt(Complex z) {
  std::ostringstream os;
  os.precision(6);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex p{};
  for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * z + *it;
  return p;
}

}  // namespace

SymbolSpec SymbolSpec::elliptic(Complex zeta) {
  if (!is_finite(zeta) || std::abs(std::abs(zeta) - 1.0) > 1e-12)
    throw InvalidParameter("elliptic symbol requires |zeta| = 1");
  return SymbolSpec(Elliptic{zeta});
}

SymbolSpec SymbolSpec::blaschke(Complex alpha) {
  if (!is_finite(alpha) || !(std::abs(alpha) < 1.0))
    throw InvalidParameter("Blaschke factor requires |alpha| < 1");
  return SymbolSpec(Blaschke{alpha});
}

SymbolSpec SymbolSpec::moebius(Complex a, Complex b, Complex c, Complex d) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c) || !is_finite(d))
    throw InvalidParameter("Moebius coefficients must be finite");
  if (!(std::abs(a * d - b * c) > 1e-14))
    throw InvalidParameter("Moebius map requires ad - bc != 0");
  return SymbolSpec(Moebius{a, b, c, d});
}

SymbolSpec SymbolSpec::polynomial(std::vector<Complex> coeffs) {
  if (coeffs.empty()) throw InvalidParameter("polynomial symbol needs at least one coefficient");
  for (Complex c : coeffs)
    if (!is_finite(c)) throw InvalidParameter("polynomial coefficients must be finite");
  return SymbolSpec(Polynomial{std::move(coeffs)});
}

SymbolKind SymbolSpec::kind() const {
  switch (form_.index()) {
    case 0: return SymbolKind::Elliptic;
    case 1: return SymbolKind::Blaschke;
    case 2: return SymbolKind::Moebius;
    default: return SymbolKind::Polynomial;
  }
}

std::optional<simd::MoebiusCoeffs> SymbolSpec::moebius_coeffs() const {
  if (auto* e = as_elliptic()) return simd::MoebiusCoeffs{e->zeta, 0.0, 0.0, 1.0};
  if (auto* b = as_blaschke()) return simd::MoebiusCoeffs{1.0, -b->alpha, -std::conj(b->alpha), 1.0};
  if (auto* m = as_moebius()) return simd::MoebiusCoeffs{m->a, m->b, m->c, m->d};
  return std::nullopt;
}

std::string SymbolSpec::describe() const {
  if (auto* e = as_elliptic()) return "elliptic(zeta=" + fmt(e->zeta) + ")";
  if (auto* b = as_blaschke()) return "blaschke(alpha=" + fmt(b->alpha) + ")";
  if (auto* m = as_moebius())
    return "moebius(a=" + fmt(m->a) + ", b=" + fmt(m->b) + ", c=" + fmt(m->c) + ", d=" + fmt(m->d) + ")";
  std::string s = "polynomial(";
  const auto& c = as_polynomial()->coeffs;
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + fmt(c[i]);
  return s + ")";
}

Complex symbol_eval_unchecked(const SymbolSpec& s, Complex z) {
  if (auto* e = s.as_elliptic()) return e->zeta * z;
  if (auto* b = s.as_blaschke()) return (z - b->alpha) / (1.0 - std::conj(b->alpha) * z);
  if (auto* m = s.as_moebius()) {
    const Complex den = m->c * z + m->d;
    if (std::abs(den) <= 1e-14) throw Singularity("Moebius symbol evaluated at its pole");
    return (m->a * z + m->b) / den;
  }
  return horner(s.as_polynomial()->coeffs, z);
}

Complex symbol_eval(const SymbolSpec& s, Complex z) {
  if (!is_finite(z) || std::abs(z) >= 1.0 - kDiskGuard)
    throw OutOfDomain("symbol evaluated outside the open unit disk");
  return symbol_eval_unchecked(s, z);
}

bool validate_self_map(const SymbolSpec& s, std::size_t boundary_samples) {
  if (boundary_samples < 64) throw InvalidParameter("validate_self_map needs >= 64 boundary samples");
  if (s.kind() == SymbolKind::Elliptic || s.kind() == SymbolKind::Blaschke) return true;

  auto max_modulus = [&](double radius) {
    double best = 0.0;
    for (std::size_t m = 0; m < boundary_samples; ++m) {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) /
                           static_cast<double>(boundary_samples);
      best = std::max(best, std::abs(symbol_eval_unchecked(s, std::polar(radius, theta))));
    }
    return best;
  };

  if (auto* m = s.as_moebius()) {
    // Pole at -d/c must lie strictly outside the closed disk.
    if (m->c != Complex{} && std::abs(m->d) <= (1.0 + 1e-9) * std::abs(m->c)) return false;
    return max_modulus(1.0) <= 1.0 + 1e-9;
  }
  return max_modulus(1.0 - 1e-6) <= 1.0 - 1e-9;
}

namespace {

Series first_power(const SymbolSpec& s, std::size_t n) {
  if (auto* p = s.as_polynomial()) {
    Series out(n, Complex{});
    for (std::size_t i = 0; i < std::min(n, p->coeffs.size()); ++i) out[i] = p->coeffs[i];
    return out;
  }
  const simd::MoebiusCoeffs m = *s.moebius_coeffs();
  // (a z + b) * sum (-c/d)^i z^i / d
  const Series g = reciprocal_linear_series(m.c, m.d, n);
  Series numerator{m.b, m.a};
  return truncated_mul(numerator, g, n);
}

}  // namespace

std::vector<Series> power_series_table(const SymbolSpec& s, std::size_t count, std::size_t n) {
  if (n == 0) throw InvalidParameter("series length must be >= 1");
  std::vector<Series> table;
  table.reserve(count);
  if (count == 0) return table;
  Series unit(n, Complex{});
  unit[0] = 1.0;
  table.push_back(std::move(unit));
  if (count == 1) return table;
  const Series phi = first_power(s, n);
  for (std::size_t k = 1; k < count; ++k) table.push_back(truncated_mul(table.back(), phi, n));
  return table;
}

Series power_series_of_power(const SymbolSpec& s, std::size_t k, std::size_t n) {
  if (n == 0) throw InvalidParameter("series length must be >= 1");
  if (k == 0) {
    Series unit(n, Complex{});
    unit[0] = 1.0;
    return unit;
  }
  const Series phi = first_power(s, n);
  // Binary powering keeps the multiplication count at O(log k).
  Series result, base = phi;
  bool have = false;
  for (std::size_t e = k; e > 0; e >>= 1) {
    if (e & 1U) {
      result = have ? truncated_mul(result, base, n) : base;
      have = true;
    }
    if (e > 1) base = truncated_mul(base, base, n);
  }
  return result;
}

}  // namespace berange
