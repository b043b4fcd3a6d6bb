#include "berange/cxgeom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "berange/error.hpp"
#include "berange/simd.hpp"

namespace berange {
namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

bool lex_less(Complex a, Complex b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

double distance_to_segment(Complex p, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = abs_sq(ab);
  if (len2 == 0.0) return std::abs(p - a);
  const double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

struct FarthestPair {
  double distance = 0.0;
  Complex first, second;
};

FarthestPair farthest_pair(std::span<const Complex> pts) {
  FarthestPair best{0.0, pts.empty() ? Complex{} : pts[0], pts.empty() ? Complex{} : pts[0]};
  double best_sq = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double d = abs_sq(pts[i] - pts[j]);
      if (d > best_sq) {
        best_sq = d;
        best.first = pts[i];
        best.second = pts[j];
      }
    }
  best.distance = std::sqrt(best_sq);
  return best;
}

}  // namespace

PointCloud::PointCloud(std::vector<Complex> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidParameter("point cloud must be nonempty");
  for (const Complex& p : points_)
    if (!is_finite(p)) throw InvalidParameter("point cloud contains a non-finite point");
  // The farthest pair of a finite set is always a pair of hull vertices.
  diameter_ = farthest_pair(convex_hull(points_)).distance;
}

double brute_force_diameter(std::span<const Complex> points) {
  return farthest_pair(points).distance;
}

std::vector<Complex> convex_hull(std::span<const Complex> points) {
  std::vector<Complex> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  // Andrew's monotone chain; cross <= 0 pops collinear points.
  std::vector<Complex> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Complex& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool polygon_contains(std::span<const Complex> hull, Complex p, double tol) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return std::abs(p - hull[0]) <= tol;
  if (hull.size() == 2) return distance_to_segment(p, hull[0], hull[1]) <= tol;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex a = hull[i];
    const Complex b = hull[(i + 1) % hull.size()];
    const double len = std::abs(b - a);
    if (len == 0.0) continue;
    if (cross(a, b, p) / len < -tol) return false;
  }
  return true;
}

double distance_outside_polygon(std::span<const Complex> hull, Complex p) {
  if (hull.empty()) return std::numeric_limits<double>::infinity();
  if (hull.size() == 1) return std::abs(p - hull[0]);
  if (hull.size() == 2) return distance_to_segment(p, hull[0], hull[1]);
  bool inside = true;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Complex a = hull[i];
    const Complex b = hull[(i + 1) % hull.size()];
    if (cross(a, b, p) < 0.0) inside = false;
    best = std::min(best, distance_to_segment(p, a, b));
  }
  return inside ? 0.0 : best;
}

NearestIndex::NearestIndex(const PointCloud& cloud, double cell) {
  const std::size_t n = cloud.size();
  xs_.reserve(n);
  ys_.reserve(n);
  if (n < kExhaustiveBelow) {
    for (const Complex& p : cloud.points()) {
      xs_.push_back(p.real());
      ys_.push_back(p.imag());
    }
    return;
  }

  double minx = cloud[0].real(), maxx = minx, miny = cloud[0].imag(), maxy = miny;
  for (const Complex& p : cloud.points()) {
    minx = std::min(minx, p.real());
    maxx = std::max(maxx, p.real());
    miny = std::min(miny, p.imag());
    maxy = std::max(maxy, p.imag());
  }
  cell_ = cell > 0.0 ? cell : cloud.diameter() / std::sqrt(static_cast<double>(n));
  if (!(cell_ > 0.0)) cell_ = 1.0;
  auto dims = [&] {
    nx_ = static_cast<long>(std::floor((maxx - minx) / cell_)) + 1;
    ny_ = static_cast<long>(std::floor((maxy - miny) / cell_)) + 1;
  };
  dims();
  const double max_cells = 4.0 * static_cast<double>(n);
  while (static_cast<double>(nx_) * static_cast<double>(ny_) > max_cells) {
    cell_ *= std::sqrt(static_cast<double>(nx_) * static_cast<double>(ny_) / max_cells) * 1.01;
    dims();
  }
  x0_ = minx;
  y0_ = miny;

  auto cell_of = [&](Complex p) {
    const long i = std::min(nx_ - 1, static_cast<long>((p.real() - x0_) / cell_));
    const long j = std::min(ny_ - 1, static_cast<long>((p.imag() - y0_) / cell_));
    return static_cast<std::size_t>(j * nx_ + i);
  };
  const std::size_t cells = static_cast<std::size_t>(nx_ * ny_);
  cell_start_.assign(cells + 1, 0);
  for (const Complex& p : cloud.points()) ++cell_start_[cell_of(p) + 1];
  for (std::size_t c = 0; c < cells; ++c) cell_start_[c + 1] += cell_start_[c];
  std::vector<std::uint32_t> fill(cell_start_.begin(), cell_start_.end() - 1);
  xs_.resize(n);
  ys_.resize(n);
  for (const Complex& p : cloud.points()) {
    const std::uint32_t slot = fill[cell_of(p)]++;
    xs_[slot] = p.real();
    ys_[slot] = p.imag();
  }
}

double NearestIndex::distance(Complex q) const {
  const auto& k = simd::active();
  if (nx_ == 0) return std::sqrt(k.min_dist_sq(q.real(), q.imag(), xs_.data(), ys_.data(), xs_.size()));

  const long cx = static_cast<long>(std::floor((q.real() - x0_) / cell_));
  const long cy = static_cast<long>(std::floor((q.imag() - y0_) / cell_));
  const long off_x = std::max({0L, -cx, cx - (nx_ - 1)});
  const long off_y = std::max({0L, -cy, cy - (ny_ - 1)});
  const long k_first = std::max(off_x, off_y);
  const long k_last = std::max({cx, nx_ - 1 - cx, cy, ny_ - 1 - cy});

  double best = std::numeric_limits<double>::infinity();
  auto scan = [&](long i, long j) {
    const std::size_t c = static_cast<std::size_t>(j * nx_ + i);
    const std::uint32_t b = cell_start_[c], e = cell_start_[c + 1];
    if (b != e) best = std::min(best, k.min_dist_sq(q.real(), q.imag(), xs_.data() + b, ys_.data() + b, e - b));
  };
  auto scan_row = [&](long j, long i_lo, long i_hi) {
    if (j < 0 || j >= ny_) return;
    for (long i = std::max(0L, i_lo); i <= std::min(nx_ - 1, i_hi); ++i) scan(i, j);
  };
  auto scan_col = [&](long i, long j_lo, long j_hi) {
    if (i < 0 || i >= nx_) return;
    for (long j = std::max(0L, j_lo); j <= std::min(ny_ - 1, j_hi); ++j) scan(i, j);
  };

  for (long ring = k_first; ring <= k_last; ++ring) {
    // Every point in this ring or beyond is at least (ring - 1) cells away.
    if (ring >= 1) {
      const double bound = static_cast<double>(ring - 1) * cell_;
      if (best <= bound * bound) break;
    }
    if (ring == 0) {
      scan(cx, cy);
      continue;
    }
    scan_row(cy - ring, cx - ring, cx + ring);
    scan_row(cy + ring, cx - ring, cx + ring);
    scan_col(cx - ring, cy - ring + 1, cy + ring - 1);
    scan_col(cx + ring, cy - ring + 1, cy + ring - 1);
  }
  return std::sqrt(best);
}

std::string_view verdict_name(ConvexityVerdict v) {
  switch (v) {
    case ConvexityVerdict::Convex: return "Convex";
    case ConvexityVerdict::NonConvex: return "NonConvex";
    case ConvexityVerdict::Inconclusive: return "Inconclusive";
    case ConvexityVerdict::Degenerate: return "Degenerate";
  }
  return "?";
}

ConvexityReport convexity_defect(const PointCloud& cloud, std::uint32_t probes, std::uint64_t seed,
                                 const DefectOptions& options) {
  if (probes == 0) throw InvalidParameter("convexity_defect: probes must be >= 1");
  if (options.mesh && !(*options.mesh > 0.0))
    throw InvalidParameter("convexity_defect: mesh must be positive");

  ConvexityReport report;
  report.hull = convex_hull(cloud);
  const double diam = cloud.diameter();
  const double scale = std::max(diam, kDiameterFloor);
  const std::size_t n = cloud.size();
  const double mesh = options.mesh.value_or(diam / std::sqrt(static_cast<double>(n)));
  report.tolerance_used = 2.0 * mesh / scale;

  if (diam < kDiameterFloor) {
    report.verdict = ConvexityVerdict::Degenerate;
    report.defect = 0.0;
    return report;
  }

  const FarthestPair ends = farthest_pair(report.hull);
  const Complex axis = (ends.second - ends.first) / ends.distance;
  double width = 0.0;
  for (const Complex& v : report.hull)
    width = std::max(width, std::abs((std::conj(axis) * (v - ends.first)).imag()));
  report.collinear = report.hull.size() <= 2 || width <= 1e-9 * diam;

  const NearestIndex index(cloud, mesh);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (std::uint32_t p = 0; p < probes; ++p) {
    const Complex a = cloud[rng() % n];
    const Complex b = cloud[rng() % n];
    worst = std::max(worst, index.distance(0.5 * (a + b)));
  }

  if (!report.collinear) {
    report.defect = worst / scale;
    if (report.defect <= report.tolerance_used)
      report.verdict = ConvexityVerdict::Convex;
    else if (report.defect > 5.0 * report.tolerance_used)
      report.verdict = ConvexityVerdict::NonConvex;
    else
      report.verdict = ConvexityVerdict::Inconclusive;
    return report;
  }

  // 1D branch: the largest gap between sorted projections against twice the mean gap.
  std::vector<double> t;
  t.reserve(n);
  for (const Complex& p : cloud.points()) t.push_back((std::conj(axis) * (p - ends.first)).real());
  std::sort(t.begin(), t.end());
  std::vector<double> distinct{t.front()};
  for (double v : t)
    if (v - distinct.back() > 1e-12 * diam) distinct.push_back(v);
  double max_gap = 0.0, gap_lo = distinct.front();
  for (std::size_t i = 1; i < distinct.size(); ++i)
    if (distinct[i] - distinct[i - 1] > max_gap) {
      max_gap = distinct[i] - distinct[i - 1];
      gap_lo = distinct[i - 1];
    }
  const double extent = distinct.back() - distinct.front();
  const double mesh1d = distinct.size() > 1 ? extent / static_cast<double>(distinct.size() - 1) : extent;
  // The midpoint of the widest gap is itself a probe.
  worst = std::max(worst, index.distance(ends.first + (gap_lo + 0.5 * max_gap) * axis));
  report.defect = worst / scale;
  report.tolerance_used = mesh1d / scale;
  report.verdict = max_gap <= 2.0 * mesh1d ? ConvexityVerdict::Convex : ConvexityVerdict::NonConvex;
  return report;
}

double conjugation_symmetry_defect(const PointCloud& cloud) {
  const NearestIndex index(cloud);
  double worst = 0.0;
  for (const Complex& p : cloud.points()) worst = std::max(worst, index.distance(std::conj(p)));
  return worst / std::max(cloud.diameter(), kDiameterFloor);
}

double set_radius(const PointCloud& cloud) {
  double r = 0.0;
  for (const Complex& p : cloud.points()) r = std::max(r, std::abs(p));
  return r;
}

}  // namespace berange
