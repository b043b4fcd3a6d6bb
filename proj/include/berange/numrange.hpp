#pragma once

// Numerical range W(A) = { <Au, u> : |u| = 1 } of finite matrices, sampled by
// the rotation method: for each direction theta the top eigenvector of
// H_theta = (e^{i theta} A + e^{-i theta} A*) / 2 gives a boundary point.

#include <cstddef>
#include <vector>

#include "berange/kernels.hpp"
#include "berange/matrix.hpp"
#include "berange/symbols.hpp"

namespace berange {

/// N x N matrix of C_phi in the orthonormal monomial basis of the space:
/// Hardy entries A[j][k] = [z^j] phi^k; Bergman scales them by sqrt((k+1)/(j+1)).
/// Throws NotSelfMap when validate_self_map fails, InvalidParameter for N < 2.
DenseMatrix truncate_composition(const SymbolSpec& symbol, std::size_t n,
                                 const KernelSpace& space = KernelSpace::hardy());

struct EigenDecomposition {
  std::vector<double> values;  // descending
  DenseMatrix vectors;         // column j is the eigenvector of values[j]
  int sweeps = 0;
  double off_diagonal = 0.0;   // Frobenius mass left off the diagonal
};

/// Cyclic Jacobi on a Hermitian matrix (at most 30 sweeps). Throws
/// ContractViolation when H is not Hermitian within 1e-12 * max(1, max|H_ij|).
EigenDecomposition hermitian_eigs(const DenseMatrix& h);

/// Same, starting from a unitary guess `basis` (rotations accumulate onto it).
EigenDecomposition hermitian_eigs(const DenseMatrix& h, const DenseMatrix& basis);

struct NumericalRangeBoundary {
  std::vector<double> angles;
  std::vector<Complex> support_points;  // p_theta = <A v, v>, v top eigenvector of H_theta
  std::vector<double> support_values;   // lambda_max(H_theta) = Re(e^{i theta} p_theta)
  double radius = 0.0;                  // max |p_theta|
};

/// Boundary points for theta_m = 2 pi m / angle_count. Throws InvalidParameter
/// for angle_count < 16.
NumericalRangeBoundary numerical_range_boundary(const DenseMatrix& a, std::size_t angle_count);

/// Lower estimate of w(A) = sup |<Au, u>|: the largest |p_theta| over the
/// sampled boundary, which dominates max_theta lambda_max(H_theta).
double numerical_radius(const DenseMatrix& a, std::size_t angle_count = 256);

/// W of a 2x2 matrix: ellipse with foci at the eigenvalues and minor axis
/// sqrt(tr(A*A) - |l1|^2 - |l2|^2).
struct EllipticalRange {
  Complex focus1;
  Complex focus2;
  double minor_axis;

  double major_axis() const;
  /// | |p - f1| + |p - f2| - major_axis |
  double boundary_residual(Complex p) const;
};

/// Throws InvalidParameter unless A is 2 x 2.
EllipticalRange elliptical_range_oracle(const DenseMatrix& a);

}  // namespace berange
