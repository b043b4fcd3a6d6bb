#pragma once

// Holomorphic self-maps of the unit disk used as composition symbols.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "berange/simd.hpp"
#include "berange/types.hpp"

namespace berange {

/// Truncated power series: coefficient i multiplies z^i.
using Series = std::vector<Complex>;

/// First n coefficients of a * b.
Series truncated_mul(const Series& a, const Series& b, std::size_t n);

/// Taylor coefficients of 1 / (c z + d) up to z^(n-1). Requires |d| > |c|.
Series reciprocal_linear_series(Complex c, Complex d, std::size_t n);

enum class SymbolKind { Elliptic, Blaschke, Moebius, Polynomial };

class SymbolSpec {
 public:
  struct Elliptic { Complex zeta; };
  struct Blaschke { Complex alpha; };
  struct Moebius { Complex a, b, c, d; };
  struct Polynomial { std::vector<Complex> coeffs; };

  /// phi(z) = zeta z; requires ||zeta| - 1| <= 1e-12.
  static SymbolSpec elliptic(Complex zeta);
  /// phi(z) = (z - alpha) / (1 - conj(alpha) z); requires |alpha| < 1.
  static SymbolSpec blaschke(Complex alpha);
  /// phi(z) = (a z + b) / (c z + d); requires |ad - bc| > 1e-14.
  static SymbolSpec moebius(Complex a, Complex b, Complex c, Complex d);
  /// phi(z) = sum coeffs[i] z^i; requires at least one coefficient.
  static SymbolSpec polynomial(std::vector<Complex> coeffs);

  SymbolKind kind() const;
  const Elliptic* as_elliptic() const { return std::get_if<Elliptic>(&form_); }
  const Blaschke* as_blaschke() const { return std::get_if<Blaschke>(&form_); }
  const Moebius* as_moebius() const { return std::get_if<Moebius>(&form_); }
  const Polynomial* as_polynomial() const { return std::get_if<Polynomial>(&form_); }

  /// Linear-fractional coefficients for Elliptic, Blaschke and Moebius kinds.
  std::optional<simd::MoebiusCoeffs> moebius_coeffs() const;

  std::string describe() const;

 private:
  using Form = std::variant<Elliptic, Blaschke, Moebius, Polynomial>;
  explicit SymbolSpec(Form f) : form_(std::move(f)) {}
  Form form_;
};

/// Throws Singularity when |cz + d| <= 1e-14 (Moebius); OutOfDomain when |z| >= 1 - 1e-12.
Complex symbol_eval(const SymbolSpec& s, Complex z);

/// Same closed forms without the disk guard, for boundary validation.
Complex symbol_eval_unchecked(const SymbolSpec& s, Complex z);

/// Decides whether the symbol maps the disk into itself. Elliptic and Blaschke
/// are accepted analytically. Moebius maps need their pole outside the closed
/// disk and boundary modulus <= 1 + 1e-9 (this admits automorphisms and maps
/// touching the circle such as (1+z)/2). Polynomials need max modulus
/// <= 1 - 1e-9 on the circle of radius 1 - 1e-6. Throws InvalidParameter for
/// boundary_samples < 64.
bool validate_self_map(const SymbolSpec& s, std::size_t boundary_samples = 1024);

/// First n Taylor coefficients of phi^k at 0. Throws ExpansionDivergence for a
/// Moebius symbol with |d| <= |c|.
Series power_series_of_power(const SymbolSpec& s, std::size_t k, std::size_t n);

/// Series of phi^0, ..., phi^(count-1), each truncated to n terms.
std::vector<Series> power_series_table(const SymbolSpec& s, std::size_t count, std::size_t n);

inline constexpr std::size_t kDefaultTruncation = 96;

}  // namespace berange
