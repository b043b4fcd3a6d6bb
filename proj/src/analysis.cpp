#include "berange/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "berange/error.hpp"
#include "berange/numrange.hpp"

namespace berange {
namespace {

bool all_equal(std::span<const Complex> values) {
  return std::all_of(values.begin(), values.end(), [&](Complex v) { return v == values.front(); });
}

bool convex_observation(ConvexityVerdict v) {
  return v == ConvexityVerdict::Convex || v == ConvexityVerdict::Degenerate;
}

void settle(TheoremVerdict& tv) {
  tv.observed = convex_observation(tv.verdict);
  tv.consistent = !tv.predicted || (tv.verdict != ConvexityVerdict::Inconclusive && *tv.predicted == tv.observed);
}

// Finite index sets are the whole range, not a sample: convex iff a single point.
void judge_finite_set(TheoremVerdict& tv, const RangeCloud& cloud, std::uint64_t seed, std::uint32_t probes) {
  const ConvexityReport report = convexity_defect(cloud.cloud, probes, seed);
  tv.defect = report.defect;
  tv.tolerance = report.tolerance_used;
  tv.verdict = all_equal(cloud.cloud.points()) ? ConvexityVerdict::Degenerate : ConvexityVerdict::NonConvex;
}

Complex hardy_blaschke_transform(Complex alpha, Complex z) {
  static const KernelSpace hardy = KernelSpace::hardy();
  return berezin_transform(OperatorSpec::composition(SymbolSpec::blaschke(alpha), hardy), z);
}

}  // namespace

std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::Elliptic41: return "Elliptic41";
    case Claim::Blaschke45: return "Blaschke45";
    case Claim::MatrixDiag31: return "MatrixDiag31";
    case Claim::Mult32: return "Mult32";
    case Claim::Symmetry43: return "Symmetry43";
    case Claim::Exploratory: return "Exploratory";
  }
  return "?";
}

TheoremVerdict convexity_verdict(const OperatorSpec& op, const SamplingGrid& grid, std::uint64_t seed,
                                 std::uint32_t probes) {
  return convexity_verdict(op, sample_berezin_range(op, grid), seed, probes);
}

TheoremVerdict convexity_verdict(const OperatorSpec& op, const RangeCloud& cloud, std::uint64_t seed,
                                 std::uint32_t probes) {
  TheoremVerdict tv;
  tv.parameters = op.describe();

  if (const auto* m = op.as_matrix()) {
    tv.claim = Claim::MatrixDiag31;
    std::vector<Complex> diag;
    for (std::size_t i = 0; i < m->entries.size(); ++i) diag.push_back(m->entries(i, i));
    tv.predicted = all_equal(diag);
    judge_finite_set(tv, cloud, seed, probes);
    settle(tv);
    return tv;
  }

  if (const auto* m = op.as_multiplication()) {
    tv.claim = Claim::Mult32;
    if (const auto* values = std::get_if<std::vector<Complex>>(&m->g)) {
      tv.predicted = all_equal(*values);
      judge_finite_set(tv, cloud, seed, probes);
    } else {
      // g(X) sampled on the same nodes straight from the symbol; the claim is that
      // both sets coincide and therefore share their verdict, whatever it is.
      const SymbolSpec& g = std::get<SymbolSpec>(m->g);
      std::vector<Complex> image;
      for (const GridNode& node : grid_nodes(cloud.grid)) image.push_back(symbol_eval(g, node.z));
      double gap = image.size() == cloud.cloud.size() ? 0.0 : std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; std::isfinite(gap) && i < image.size(); ++i)
        gap = std::max(gap, std::abs(image[i] - cloud.cloud[i]));
      const ConvexityReport direct = convexity_defect(PointCloud(std::move(image)), probes, seed);
      if (direct.verdict != ConvexityVerdict::Inconclusive) tv.predicted = convex_observation(direct.verdict);
      const ConvexityReport report = convexity_defect(cloud.cloud, probes, seed);
      tv.verdict = report.verdict;
      tv.defect = report.defect;
      tv.tolerance = report.tolerance_used;
      tv.observed = convex_observation(tv.verdict);
      tv.consistent = gap <= 1e-12 && direct.verdict == report.verdict;
      return tv;
    }
    settle(tv);
    return tv;
  }

  const auto* c = op.as_composition();
  const bool hardy = c->space.kind() == SpaceKind::Hardy;
  if (hardy && c->symbol.as_elliptic()) {
    const Complex zeta = c->symbol.as_elliptic()->zeta;
    tv.claim = Claim::Elliptic41;
    tv.predicted = std::abs(zeta - 1.0) <= 1e-12 || std::abs(zeta + 1.0) <= 1e-12;
  } else if (hardy && c->symbol.as_blaschke()) {
    tv.claim = Claim::Blaschke45;
    tv.predicted = c->symbol.as_blaschke()->alpha == Complex{};
  }
  const ConvexityReport report = convexity_defect(cloud.cloud, probes, seed);
  tv.verdict = report.verdict;
  tv.defect = report.defect;
  tv.tolerance = report.tolerance_used;
  settle(tv);
  return tv;
}

TheoremVerdict symmetry_verdict(Complex alpha, const SamplingGrid& grid) {
  const OperatorSpec op = OperatorSpec::composition(SymbolSpec::blaschke(alpha), KernelSpace::hardy());
  // Angles start on the axis arg(alpha), so theta -> 2 psi - theta maps the grid onto itself.
  SamplingGrid aligned = grid;
  aligned.phase = alpha == Complex{} ? grid.phase : std::arg(alpha);
  const RangeCloud cloud = sample_berezin_range(op, aligned);
  TheoremVerdict tv;
  tv.claim = Claim::Symmetry43;
  tv.parameters = op.describe();
  tv.predicted = true;
  tv.defect = conjugation_symmetry_defect(cloud.cloud);
  tv.tolerance = 2.0 / std::sqrt(static_cast<double>(cloud.cloud.size()));
  tv.observed = tv.defect <= tv.tolerance;
  tv.verdict = ConvexityVerdict::Inconclusive;  // not a convexity question
  tv.consistent = *tv.predicted == tv.observed;
  return tv;
}

double conjugation_identity_error(Complex alpha, const SamplingGrid& grid) {
  const OperatorSpec op = OperatorSpec::composition(SymbolSpec::blaschke(alpha), KernelSpace::hardy());
  const double psi = std::arg(alpha);
  double worst = 0.0;
  for (const GridNode& node : grid_nodes(grid)) {
    const Complex mirrored = std::polar(node.r, 2.0 * psi - node.theta);
    const Complex lhs = berezin_transform(op, node.z);
    const Complex rhs = std::conj(berezin_transform(op, mirrored));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

RealSectionReport real_section_check(Complex alpha, const std::vector<double>& r_values) {
  if (alpha == Complex{}) throw InvalidParameter("real section undefined for alpha = 0");
  if (r_values.empty()) throw InvalidParameter("real section needs at least one r");
  const double a2 = abs_sq(alpha);
  RealSectionReport out;
  out.interval_lo = 1.0 - std::abs(alpha);
  out.interval_hi = 1.0 + std::abs(alpha);
  out.attained_min = std::numeric_limits<double>::infinity();
  out.attained_max = -std::numeric_limits<double>::infinity();
  for (double r : r_values) {
    if (!(std::abs(r) * std::abs(alpha) < 1.0 - kDiskGuard))
      throw InvalidParameter("real section point r * alpha must lie in the disk");
    const Complex t = hardy_blaschke_transform(alpha, r * alpha);
    out.max_error = std::max(out.max_error, std::abs(t - (1.0 - r * a2)));
    out.attained_min = std::min(out.attained_min, t.real());
    out.attained_max = std::max(out.attained_max, t.real());
  }
  return out;
}

RadiusComparison radius_comparison(const OperatorSpec& op, const SamplingGrid& grid, std::size_t n,
                                   std::size_t angle_count) {
  RadiusComparison out;
  out.b = set_radius(sample_berezin_range(op, grid).cloud);
  if (const auto* m = op.as_matrix()) {
    out.w = m->entries.size() == 1 ? std::abs(m->entries(0, 0)) : numerical_radius(m->entries, angle_count);
  } else if (const auto* c = op.as_composition()) {
    out.w = numerical_radius(truncate_composition(c->symbol, n, c->space), angle_count);
  } else {
    throw InvalidParameter("radius_comparison needs a matrix or composition operator");
  }
  out.ratio = out.w > 0.0 ? out.b / out.w : (out.b > 0.0 ? std::numeric_limits<double>::infinity() : 1.0);
  out.bound_holds = out.b <= out.w + 1e-6;
  return out;
}

}  // namespace berange
