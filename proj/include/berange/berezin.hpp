#pragma once

// Berezin transforms <T k_x, k_x> / ||k_x||^2 of concrete operators and their
// sampled ranges over polar grids of the disk.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "berange/cxgeom.hpp"
#include "berange/kernels.hpp"
#include "berange/matrix.hpp"
#include "berange/symbols.hpp"

namespace berange {

class OperatorSpec {
 public:
  struct Matrix { DenseMatrix entries; };
  struct Multiplication {
    std::variant<SymbolSpec, std::vector<Complex>> g;
    KernelSpace space;
  };
  struct Composition {
    SymbolSpec symbol;
    KernelSpace space;
  };

  /// Square n >= 1 matrix acting on C^n with the standard basis kernel.
  static OperatorSpec matrix(DenseMatrix a);
  /// M_g on Hardy or Bergman; g must be bounded on the disk (no pole in the closed disk).
  static OperatorSpec multiplication(SymbolSpec g, KernelSpace space);
  /// M_g on C^n given by its values g(0..n-1).
  static OperatorSpec multiplication(std::vector<Complex> values);
  /// C_phi on Hardy or Bergman. Throws NotSelfMap when validate_self_map fails.
  static OperatorSpec composition(SymbolSpec symbol, KernelSpace space = KernelSpace::hardy());

  const Matrix* as_matrix() const { return std::get_if<Matrix>(&form_); }
  const Multiplication* as_multiplication() const { return std::get_if<Multiplication>(&form_); }
  const Composition* as_composition() const { return std::get_if<Composition>(&form_); }

  KernelSpace space() const;
  std::string describe() const;

 private:
  using Form = std::variant<Matrix, Multiplication, Composition>;
  explicit OperatorSpec(Form f) : form_(std::move(f)) {}
  Form form_;
};

/// Polar grid: one node at the origin, then (radii - 1) rings of `angles`
/// nodes at r_j = r_max * sqrt(j / (radii - 1)), theta_m = phase + 2 pi m / angles.
struct SamplingGrid {
  std::size_t radii = 200;
  std::size_t angles = 256;
  double r_max = 0.995;
  double phase = 0.0;

  /// Throws InvalidParameter unless radii >= 2, angles >= 1, 0 < r_max < 1 - 1e-12, phase finite.
  void validate() const;
  std::size_t node_count() const { return 1 + (radii - 1) * angles; }
  double radius(std::size_t j) const;
  double angle(std::size_t m) const;
};

struct GridNode {
  double r;
  double theta;
  Complex z;
};

/// Nodes in grid-major order: radius outer, angle inner.
std::vector<GridNode> grid_nodes(const SamplingGrid& grid);

enum class RangeKind { BerezinRange, NumericalRange };

/// Where a sample came from. NaN marks a field that does not apply (numerical
/// range rows have neither; matrix rows carry the basis index in r).
struct SampleTag {
  double r;
  double theta;
};

struct RangeCloud {
  PointCloud cloud;
  RangeKind kind;
  SamplingGrid grid;
  std::string operator_description;
  std::vector<SampleTag> tags;
};

/// T~(x). For composition operators on Hardy: (1-|z|^2) / (1 - conj(z) phi(z));
/// on Bergman the square of that. Throws OutOfDomain or Singularity.
Complex berezin_transform(const OperatorSpec& op, Complex x);

/// Closed-form real and imaginary parts of the Blaschke composition transform on
/// Hardy, together with the real factor c(alpha, z).
struct BlaschkeParts {
  double re;
  double im;
  double c;
};
BlaschkeParts blaschke_re_im(Complex alpha, Complex z);

/// Evaluates the transform at every grid node. Finite-dimensional operators
/// ignore the grid and enumerate basis indices.
RangeCloud sample_berezin_range(const OperatorSpec& op, const SamplingGrid& grid);

/// Transform values along the ray at angle theta for each radius (composition only).
std::vector<Complex> boundary_limit_probe(const OperatorSpec& op, double theta,
                                          const std::vector<double>& radii);

}  // namespace berange
