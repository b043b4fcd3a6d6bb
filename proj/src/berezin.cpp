#include "berange/berezin.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "berange/error.hpp"
#include "berange/simd.hpp"

namespace berange {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool bounded_on_disk(const SymbolSpec& g) {
  if (auto* m = g.as_moebius()) return m->c == Complex{} || std::abs(m->d) > std::abs(m->c);
  return true;
}

// Hardy transforms for a batch of disk points, via the active SIMD table.
void hardy_composition_batch(const SymbolSpec& symbol, const std::vector<double>& re,
                             const std::vector<double>& im, std::vector<double>& out_re,
                             std::vector<double>& out_im) {
  const auto& k = simd::active();
  out_re.resize(re.size());
  out_im.resize(re.size());
  if (auto m = symbol.moebius_coeffs()) {
    k.moebius_transform(*m, re.data(), im.data(), out_re.data(), out_im.data(), re.size());
  } else {
    const auto& c = symbol.as_polynomial()->coeffs;
    k.polynomial_transform(c.data(), c.size(), re.data(), im.data(), out_re.data(), out_im.data(),
                           re.size());
  }
}

// Rejects a transform value whose denominator 1 - conj(z) phi(z) vanished.
Complex checked_value(double tr, double ti, Complex z) {
  const Complex t(tr, ti);
  const double s = 1.0 - abs_sq(z);
  if (!is_finite(t) || !(std::abs(t) * 1e-15 < s)) {
    std::ostringstream os;
    os << "composition transform denominator vanishes at z=" << z;
    throw Singularity(os.str());
  }
  return t;
}

Complex composition_transform(const OperatorSpec::Composition& c, Complex z) {
  require_in_domain(c.space, z);
  std::vector<double> re{z.real()}, im{z.imag()}, tr, ti;
  hardy_composition_batch(c.symbol, re, im, tr, ti);
  const Complex h = checked_value(tr[0], ti[0], z);
  return c.space.kind() == SpaceKind::Bergman ? h * h : h;
}

}  // namespace

OperatorSpec OperatorSpec::matrix(DenseMatrix a) {
  if (a.size() == 0) throw InvalidParameter("matrix operator needs n >= 1");
  return OperatorSpec(Matrix{std::move(a)});
}

OperatorSpec OperatorSpec::multiplication(SymbolSpec g, KernelSpace space) {
  if (!space.on_disk()) throw InvalidParameter("symbol multiplier requires a disk space");
  if (!bounded_on_disk(g)) throw InvalidParameter("multiplier has a pole in the closed disk");
  return OperatorSpec(Multiplication{std::move(g), space});
}

OperatorSpec OperatorSpec::multiplication(std::vector<Complex> values) {
  if (values.empty()) throw InvalidParameter("multiplier value list must be nonempty");
  for (Complex v : values)
    if (!is_finite(v)) throw InvalidParameter("multiplier values must be finite");
  const std::size_t n = values.size();
  return OperatorSpec(Multiplication{std::move(values), KernelSpace::finite_dim(n)});
}

OperatorSpec OperatorSpec::composition(SymbolSpec symbol, KernelSpace space) {
  if (!space.on_disk()) throw InvalidParameter("composition operators act on Hardy or Bergman");
  if (!validate_self_map(symbol)) throw NotSelfMap();
  return OperatorSpec(Composition{std::move(symbol), space});
}

KernelSpace OperatorSpec::space() const {
  if (auto* m = as_matrix()) return KernelSpace::finite_dim(m->entries.size());
  if (auto* m = as_multiplication()) return m->space;
  return as_composition()->space;
}

std::string OperatorSpec::describe() const {
  if (auto* m = as_matrix()) return "matrix(n=" + std::to_string(m->entries.size()) + ")";
  if (auto* m = as_multiplication()) {
    if (auto* g = std::get_if<SymbolSpec>(&m->g))
      return "multiplication(" + g->describe() + ", " + m->space.name() + ")";
    return "multiplication(values, " + m->space.name() + ")";
  }
  const auto* c = as_composition();
  return "composition(" + c->symbol.describe() + ", " + c->space.name() + ")";
}

void SamplingGrid::validate() const {
  if (radii < 2) throw InvalidParameter("grid needs at least 2 radii");
  if (angles < 1) throw InvalidParameter("grid needs at least 1 angle");
  if (!(r_max > 0.0 && r_max < 1.0 - kDiskGuard)) throw InvalidParameter("grid r_max must lie in (0, 1)");
  if (!std::isfinite(phase)) throw InvalidParameter("grid phase must be finite");
}

double SamplingGrid::radius(std::size_t j) const {
  return r_max * std::sqrt(static_cast<double>(j) / static_cast<double>(radii - 1));
}

double SamplingGrid::angle(std::size_t m) const {
  return phase + 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(angles);
}

std::vector<GridNode> grid_nodes(const SamplingGrid& grid) {
  grid.validate();
  std::vector<GridNode> nodes;
  nodes.reserve(grid.node_count());
  nodes.push_back({0.0, 0.0, Complex{}});
  for (std::size_t j = 1; j < grid.radii; ++j) {
    const double r = grid.radius(j);
    for (std::size_t m = 0; m < grid.angles; ++m) {
      const double t = grid.angle(m);
      nodes.push_back({r, t, Complex(r * std::cos(t), r * std::sin(t))});
    }
  }
  return nodes;
}

Complex berezin_transform(const OperatorSpec& op, Complex x) {
  if (auto* m = op.as_matrix()) {
    const std::size_t j = basis_index(op.space(), x);
    return m->entries(j, j);
  }
  if (auto* m = op.as_multiplication()) {
    if (auto* values = std::get_if<std::vector<Complex>>(&m->g)) return (*values)[basis_index(m->space, x)];
    require_in_domain(m->space, x);
    return symbol_eval(std::get<SymbolSpec>(m->g), x);
  }
  return composition_transform(*op.as_composition(), x);
}

BlaschkeParts blaschke_re_im(Complex alpha, Complex z) {
  const double mod = abs_sq(z);
  const Complex u = std::conj(alpha) * z;             // conj(alpha) z
  const double im_alpha_zbar = (alpha * std::conj(z)).imag();
  const double s = 1.0 - mod;
  const double den = s * s + 4.0 * im_alpha_zbar * im_alpha_zbar;  // |s + 2i Im(alpha conj z)|^2
  const double c = s / den;
  const double re = c * (s * (1.0 - u.real()) + 2.0 * u.imag() * u.imag());
  const double im = c * u.imag() * (1.0 + mod - 2.0 * u.real());
  return {re, im, c};
}

RangeCloud sample_berezin_range(const OperatorSpec& op, const SamplingGrid& grid) {
  grid.validate();
  const KernelSpace space = op.space();
  std::vector<Complex> pts;
  std::vector<SampleTag> tags;

  if (!space.on_disk()) {
    const std::size_t n = space.dimension();
    for (std::size_t j = 0; j < n; ++j) {
      pts.push_back(berezin_transform(op, Complex(static_cast<double>(j), 0.0)));
      tags.push_back({static_cast<double>(j), kNaN});
    }
    return {PointCloud(std::move(pts)), RangeKind::BerezinRange, grid, op.describe(), std::move(tags)};
  }

  const std::vector<GridNode> nodes = grid_nodes(grid);
  pts.reserve(nodes.size());
  tags.reserve(nodes.size());
  for (const GridNode& node : nodes) tags.push_back({node.r, node.theta});

  auto node_error = [](const GridNode& node, const std::string& what) {
    std::ostringstream os;
    os << what << " (node r=" << node.r << ", theta=" << node.theta << ")";
    return os.str();
  };

  if (auto* c = op.as_composition()) {
    std::vector<double> re, im, tr, ti;
    re.reserve(nodes.size());
    im.reserve(nodes.size());
    for (const GridNode& node : nodes) {
      re.push_back(node.z.real());
      im.push_back(node.z.imag());
    }
    hardy_composition_batch(c->symbol, re, im, tr, ti);
    const bool bergman = c->space.kind() == SpaceKind::Bergman;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      Complex h;
      try {
        h = checked_value(tr[i], ti[i], nodes[i].z);
      } catch (const Singularity& e) {
        throw Singularity(node_error(nodes[i], e.what()));
      }
      pts.push_back(bergman ? h * h : h);
    }
  } else {
    for (const GridNode& node : nodes) {
      try {
        pts.push_back(berezin_transform(op, node.z));
      } catch (const Singularity& e) {
        throw Singularity(node_error(node, e.what()));
      } catch (const OutOfDomain& e) {
        throw OutOfDomain(node_error(node, e.what()));
      }
    }
  }
  return {PointCloud(std::move(pts)), RangeKind::BerezinRange, grid, op.describe(), std::move(tags)};
}

std::vector<Complex> boundary_limit_probe(const OperatorSpec& op, double theta,
                                          const std::vector<double>& radii) {
  if (!op.as_composition()) throw InvalidParameter("boundary_limit_probe needs a composition operator");
  std::vector<Complex> out;
  out.reserve(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] >= 0.0 && radii[i] < 1.0)) throw InvalidParameter("probe radii must lie in [0, 1)");
    if (i > 0 && !(radii[i] > radii[i - 1])) throw InvalidParameter("probe radii must increase");
    out.push_back(berezin_transform(op, std::polar(radii[i], theta)));
  }
  return out;
}

}  // namespace berange
