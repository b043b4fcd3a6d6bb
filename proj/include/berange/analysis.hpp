#pragma once

// Checks that tie sampled geometry back to the convexity characterizations:
// elliptic symbols (convex iff zeta = +-1), Blaschke factors (convex iff
// alpha = 0), matrices (convex iff constant diagonal), multiplication operators
// (B(M_g) = g(X)), and conjugation symmetry of Blaschke ranges.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berange/berezin.hpp"
#include "berange/cxgeom.hpp"

namespace berange {

enum class Claim { Elliptic41, Blaschke45, MatrixDiag31, Mult32, Symmetry43, Exploratory };

std::string_view claim_name(Claim c);

struct TheoremVerdict {
  Claim claim = Claim::Exploratory;
  std::string parameters;
  std::optional<bool> predicted;  // absent when no characterization applies
  bool observed = false;          // Convex / Degenerate (or symmetric, for Symmetry43)
  ConvexityVerdict verdict = ConvexityVerdict::Inconclusive;  // unused for Symmetry43
  double defect = 0.0;
  double tolerance = 0.0;
  bool consistent = true;
};

inline constexpr std::uint32_t kDefaultProbes = 4096;

/// Samples B(op) and compares its convexity verdict with the applicable characterization.
TheoremVerdict convexity_verdict(const OperatorSpec& op, const SamplingGrid& grid, std::uint64_t seed,
                                 std::uint32_t probes = kDefaultProbes);

/// Same verdict computed from an already sampled cloud of `op`.
TheoremVerdict convexity_verdict(const OperatorSpec& op, const RangeCloud& cloud, std::uint64_t seed,
                                 std::uint32_t probes = kDefaultProbes);

/// Conjugation symmetry of the sampled Blaschke range: observed when the cloud
/// symmetry defect is within twice the relative mesh 2 / sqrt(n). The grid is
/// re-phased to start at arg(alpha) so that it is mirror-symmetric about that axis.
TheoremVerdict symmetry_verdict(Complex alpha, const SamplingGrid& grid);

/// max over nodes re^{i theta} of |T~(re^{i theta}) - conj(T~(re^{i(2 psi - theta)}))|, alpha = rho e^{i psi}.
double conjugation_identity_error(Complex alpha, const SamplingGrid& grid);

struct RealSectionReport {
  double max_error = 0.0;  // max |T~(r alpha) - (1 - r |alpha|^2)|
  double attained_min = 0.0;
  double attained_max = 0.0;
  double interval_lo = 0.0;  // 1 - |alpha|
  double interval_hi = 0.0;  // 1 + |alpha|
};

/// On-axis identity T~(r alpha) = 1 - r |alpha|^2 of the Blaschke composition
/// transform. Throws InvalidParameter for alpha = 0 or any |r alpha| >= 1.
RealSectionReport real_section_check(Complex alpha, const std::vector<double>& r_values);

struct RadiusComparison {
  double b = 0.0;      // discrete Berezin radius
  double w = 0.0;      // numerical radius of the truncation
  double ratio = 0.0;  // b / w
  bool bound_holds = true;  // b <= w + 1e-6
};

/// Berezin radius of the sampled range against the numerical radius of the
/// operator (matrices) or of its order-n truncation (composition operators).
RadiusComparison radius_comparison(const OperatorSpec& op, const SamplingGrid& grid, std::size_t n,
                                   std::size_t angle_count = 256);

}  // namespace berange
