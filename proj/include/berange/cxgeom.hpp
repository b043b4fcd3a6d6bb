#pragma once

// Planar geometry on sampled ranges: hulls, nearest-point queries, the
// midpoint convexity test, conjugation symmetry and set radii.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "berange/types.hpp"

namespace berange {

/// Nonempty list of finite points with its diameter cached at construction.
class PointCloud {
 public:
  /// Throws InvalidParameter when empty or when any point is NaN/Inf.
  explicit PointCloud(std::vector<Complex> points);

  std::span<const Complex> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Complex& operator[](std::size_t i) const { return points_[i]; }
  double diameter() const { return diameter_; }

 private:
  std::vector<Complex> points_;
  double diameter_ = 0.0;
};

/// Max pairwise distance by exhaustive O(n^2) search.
double brute_force_diameter(std::span<const Complex> points);

/// Extreme points in counterclockwise order, starting from the lexicographically
/// smallest (re, im). Collinear boundary points are dropped; a collinear set
/// yields its two endpoints and a single point yields itself.
std::vector<Complex> convex_hull(std::span<const Complex> points);
inline std::vector<Complex> convex_hull(const PointCloud& cloud) {
  return convex_hull(cloud.points());
}

/// True when p lies inside or on the CCW polygon `hull`, within `tol` absolute.
bool polygon_contains(std::span<const Complex> hull, Complex p, double tol);

/// Distance from p to the CCW convex polygon `hull`; 0 when p is inside.
double distance_outside_polygon(std::span<const Complex> hull, Complex p);

/// Nearest-point distance queries over a fixed point set. Below 2000 points
/// every query is an exhaustive scan; above, points are bucketed into a uniform
/// grid and queries search rings of cells outward from the query.
class NearestIndex {
 public:
  static constexpr std::size_t kExhaustiveBelow = 2000;

  /// `cell` <= 0 selects diameter / sqrt(n).
  explicit NearestIndex(const PointCloud& cloud, double cell = 0.0);

  double distance(Complex q) const;
  bool bucketed() const { return nx_ > 0; }

 private:
  std::vector<double> xs_, ys_;
  std::vector<std::uint32_t> cell_start_;
  double x0_ = 0.0, y0_ = 0.0, cell_ = 0.0;
  long nx_ = 0, ny_ = 0;
};

enum class ConvexityVerdict { Convex, NonConvex, Inconclusive, Degenerate };

std::string_view verdict_name(ConvexityVerdict v);

struct ConvexityReport {
  std::vector<Complex> hull;
  double defect = 0.0;          // relative to the cloud diameter
  ConvexityVerdict verdict = ConvexityVerdict::Degenerate;
  double tolerance_used = 0.0;  // relative, same units as defect
  bool collinear = false;
};

struct DefectOptions {
  /// Estimated max nearest-neighbour spacing (absolute). Unset: diameter / sqrt(n).
  std::optional<double> mesh;
};

inline constexpr double kDiameterFloor = 1e-9;

/// Midpoint convexity test. Draws `probes` point pairs from a generator seeded
/// with `seed`, measures how far each midpoint is from the cloud, and compares
/// the worst case (relative to the diameter) with twice the relative mesh.
/// Convex at or below tolerance, NonConvex above five times it, Inconclusive
/// between. Diameter below 1e-9 is Degenerate. Collinear clouds are judged by
/// their largest 1D gap against twice the mean 1D gap.
ConvexityReport convexity_defect(const PointCloud& cloud, std::uint32_t probes, std::uint64_t seed,
                                 const DefectOptions& options = {});

/// max_p dist(conj(p), cloud) / max(diameter, 1e-9).
double conjugation_symmetry_defect(const PointCloud& cloud);

/// max_p |p|.
double set_radius(const PointCloud& cloud);

}  // namespace berange
