// Acceptance checks: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "berange/analysis.hpp"
#include "berange/cxgeom.hpp"
#include "berange/io.hpp"
#include "berange/numrange.hpp"
#include "support.hpp"

using namespace berange;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

const SamplingGrid kGrid{};

OperatorSpec composition(SymbolSpec s) { return OperatorSpec::composition(std::move(s)); }

bool convex_obs(ConvexityVerdict v) { return v == ConvexityVerdict::Convex || v == ConvexityVerdict::Degenerate; }

// 1. Matrices: exact diagonal multiset, exact convexity rule, trace identity.
Outcome criterion_matrices() {
  Outcome o;
  test::Rng rng(1001);
  int constant_count = 0;
  for (int t = 0; t < 50; ++t) {
    DenseMatrix a = rng.matrix(5);
    if (t % 5 == 0) {
      ++constant_count;
      for (std::size_t i = 1; i < 5; ++i) a(i, i) = a(0, 0);
    }
    const auto op = OperatorSpec::matrix(a);
    const RangeCloud cloud = sample_berezin_range(op, kGrid);
    std::vector<std::pair<double, double>> got, want;
    Complex sum = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
      got.emplace_back(cloud.cloud[i].real(), cloud.cloud[i].imag());
      want.emplace_back(a(i, i).real(), a(i, i).imag());
      sum += cloud.cloud[i];
    }
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    o.require(cloud.cloud.size() == 5 && got == want, "range != diagonal multiset");
    o.require(std::abs(sum - a.trace()) <= 1e-12, "trace identity");
    bool constant = true;
    for (std::size_t i = 1; i < 5; ++i) constant = constant && a(i, i) == a(0, 0);
    const TheoremVerdict v = convexity_verdict(op, cloud, 42);
    o.require(v.observed == constant && v.consistent, "verdict for matrix " + std::to_string(t));
  }
  o.detail = o.pass ? "50 matrices, " + std::to_string(constant_count) + " with constant diagonal" : o.detail;
  return o;
}

// 2. Elliptic symbols.
Outcome criterion_elliptic() {
  Outcome o;
  for (const Complex zeta : {Complex(1, 0), Complex(-1, 0)}) {
    const TheoremVerdict v = convexity_verdict(composition(SymbolSpec::elliptic(zeta)), kGrid, 42);
    o.require(convex_obs(v.verdict), "zeta=" + fmt(zeta.real()) + " not convex (" + std::string(verdict_name(v.verdict)) + ")");
  }
  std::string defects;
  for (const Complex zeta : {Complex(0, 1), std::polar(1.0, M_PI / 4), std::polar(1.0, 0.1)}) {
    const TheoremVerdict v = convexity_verdict(composition(SymbolSpec::elliptic(zeta)), kGrid, 42);
    o.require(v.verdict == ConvexityVerdict::NonConvex, "zeta arg " + fmt(std::arg(zeta)) + " not NonConvex");
    defects += (defects.empty() ? "" : "/") + fmt(v.defect);
  }
  const RangeCloud one = sample_berezin_range(composition(SymbolSpec::elliptic(1.0)), kGrid);
  double dev = 0.0;
  for (const Complex& p : one.cloud.points()) dev = std::max(dev, std::abs(p - 1.0));
  o.require(dev <= 1e-14, "zeta=1 deviation " + fmt(dev));
  const RangeCloud minus = sample_berezin_range(composition(SymbolSpec::elliptic(-1.0)), kGrid);
  double im = 0.0, lo = INFINITY, hi = -INFINITY;
  for (const Complex& p : minus.cloud.points()) {
    im = std::max(im, std::abs(p.imag()));
    lo = std::min(lo, p.real());
    hi = std::max(hi, p.real());
  }
  o.require(im <= 1e-14 && lo > 0.0 && hi <= 1.0, "zeta=-1 cloud outside (0,1]");
  if (o.pass) o.detail = "nonconvex defects " + defects + ", zeta=1 dev " + fmt(dev) + ", zeta=-1 min " + fmt(lo);
  return o;
}

// 3. Closed-form real/imaginary parts against direct complex evaluation.
Outcome criterion_closed_form() {
  Outcome o;
  test::Rng rng(1003);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const Complex alpha = rng.in_disk(0.95), z = rng.in_disk(0.99);
    const BlaschkeParts p = blaschke_re_im(alpha, z);
    const Complex direct = test::hardy_transform_ref(z, test::blaschke_ref(alpha, z));
    worst = std::max(worst, std::abs(Complex(p.re, p.im) - direct));
  }
  o.require(worst <= 1e-12, "max error " + fmt(worst));
  if (o.pass) o.detail = "10^4 pairs, max error " + fmt(worst);
  return o;
}

// 4. Conjugation symmetry identity at every node of the default grid.
Outcome criterion_symmetry() {
  Outcome o;
  std::string errs;
  for (const Complex alpha : {Complex(-0.5, 0), Complex(0.3, 0.4)}) {
    const auto op = composition(SymbolSpec::blaschke(alpha));
    const double psi = std::arg(alpha);
    double worst = 0.0;
    for (const GridNode& n : grid_nodes(kGrid)) {
      const Complex mirror = std::polar(n.r, 2.0 * psi - n.theta);
      worst = std::max(worst, std::abs(berezin_transform(op, n.z) - std::conj(berezin_transform(op, mirror))));
    }
    o.require(worst <= 1e-13, "alpha " + fmt(alpha.real()) + "+" + fmt(alpha.imag()) + "i error " + fmt(worst));
    errs += (errs.empty() ? "" : "/") + fmt(worst);
  }
  if (o.pass) o.detail = std::to_string(kGrid.node_count()) + " nodes, max error " + errs;
  return o;
}

// 5. Blaschke components: on-axis identity, boundary decay, alpha = 0, verdicts.
Outcome criterion_blaschke() {
  Outcome o;
  for (const Complex alpha : {Complex(-0.5, 0), Complex(0.3, 0.4)}) {
    std::vector<double> rs;
    const double reach = 0.999 / std::abs(alpha);
    for (int k = 0; k < 100; ++k) rs.push_back(-reach + 2.0 * reach * k / 99.0);
    const RealSectionReport r = real_section_check(alpha, rs);
    o.require(r.max_error <= 1e-13, "on-axis error " + fmt(r.max_error));
  }
  // Angles at half offsets miss the boundary fixed points +-1 of phi_{-1/2}.
  const auto half = composition(SymbolSpec::blaschke(-0.5));
  double decay = 0.0;
  for (int m = 0; m < 32; ++m)
    decay = std::max(decay, std::abs(berezin_transform(half, std::polar(0.9999, 2.0 * M_PI * (m + 0.5) / 32))));
  o.require(decay < 5e-3, "boundary decay " + fmt(decay));
  const RangeCloud zero = sample_berezin_range(composition(SymbolSpec::blaschke(0.0)), kGrid);
  double dev = 0.0;
  for (const Complex& p : zero.cloud.points()) dev = std::max(dev, std::abs(p - 1.0));
  o.require(dev <= 1e-15, "alpha=0 deviation " + fmt(dev));
  const TheoremVerdict v0 = convexity_verdict(composition(SymbolSpec::blaschke(0.0)), kGrid, 42);
  o.require(convex_obs(v0.verdict), "alpha=0 not convex");
  std::string defects;
  for (const Complex alpha : {Complex(-0.5, 0), Complex(0.3, 0.4)}) {
    const TheoremVerdict v = convexity_verdict(composition(SymbolSpec::blaschke(alpha)), kGrid, 42);
    o.require(v.verdict == ConvexityVerdict::NonConvex, "alpha not NonConvex");
    defects += (defects.empty() ? "" : "/") + fmt(v.defect);
  }
  if (o.pass) o.detail = "max |T(0.9999 e^it)| " + fmt(decay) + ", nonconvex defects " + defects;
  return o;
}

// 6. Numerical range machinery.
Outcome criterion_numrange() {
  Outcome o;
  test::Rng rng(1006);
  double ellipse = 0.0;
  for (int t = 0; t < 100; ++t) {
    const DenseMatrix a = rng.matrix(2);
    const EllipticalRange oracle = elliptical_range_oracle(a);
    for (const Complex& p : numerical_range_boundary(a, 128).support_points)
      ellipse = std::max(ellipse, oracle.boundary_residual(p));
  }
  o.require(ellipse <= 1e-8, "ellipse residual " + fmt(ellipse));

  double turning = 0.0;
  for (int t = 0; t < 20; ++t) {
    const auto pts = numerical_range_boundary(rng.matrix(8), 256).support_points;
    double diam = 0.0;
    for (const Complex& a : pts)
      for (const Complex& b : pts) diam = std::max(diam, std::abs(a - b));
    double pos = 0.0, neg = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Complex e1 = pts[(i + 1) % pts.size()] - pts[i];
      const Complex e2 = pts[(i + 2) % pts.size()] - pts[(i + 1) % pts.size()];
      const double cross = (e1.real() * e2.imag() - e1.imag() * e2.real()) / (diam * diam);
      pos = std::max(pos, cross);
      neg = std::max(neg, -cross);
    }
    turning = std::max(turning, std::min(pos, neg));
  }
  o.require(turning <= 1e-9, "turning violation " + fmt(turning));

  double residual = 0.0;
  for (std::size_t n : {2u, 4u, 8u, 16u, 32u, 64u, 128u}) {
    const DenseMatrix h = rng.hermitian(n);
    const EigenDecomposition e = hermitian_eigs(h);
    DenseMatrix scaled = e.vectors;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) scaled(i, k) *= e.values[k];
    const double r = (scaled * e.vectors.adjoint() - h).frobenius_norm() / h.frobenius_norm();
    residual = std::max(residual, r);
  }
  o.require(residual < 1e-10, "reconstruction residual " + fmt(residual));
  if (o.pass)
    o.detail = "ellipse " + fmt(ellipse) + ", turning " + fmt(turning) + ", Jacobi residual " + fmt(residual) +
               " (n <= 128)";
  return o;
}

double containment_violation(const RangeCloud& cloud, const SymbolSpec& s, std::size_t n) {
  const auto hull = convex_hull(numerical_range_boundary(truncate_composition(s, n), 256).support_points);
  double worst = 0.0;
  for (const Complex& p : cloud.cloud.points()) worst = std::max(worst, distance_outside_polygon(hull, p));
  return worst;
}

struct Named {
  std::string name;
  SymbolSpec symbol;
};

std::vector<Named> containment_symbols() {
  return {{"(1+z)^2/4", SymbolSpec::polynomial({0.25, 0.5, 0.25})},
          {"(1+z)/2", SymbolSpec::moebius(0.5, 0.5, 0, 1)},
          {"blaschke -1/2", SymbolSpec::blaschke(-0.5)},
          {"elliptic i", SymbolSpec::elliptic({0, 1})}};
}

// 7. B within the truncated numerical range, shrinking violation.
Outcome criterion_containment() {
  Outcome o;
  std::string summary;
  for (const Named& s : containment_symbols()) {
    const RangeCloud cloud = sample_berezin_range(composition(s.symbol), kGrid);
    std::vector<double> v;
    for (std::size_t n : {16u, 32u, 64u, 96u}) v.push_back(containment_violation(cloud, s.symbol, n));
    o.require(v.back() <= 1e-3, s.name + " violation at N=96 is " + fmt(v.back()));
    for (std::size_t i = 1; i < v.size(); ++i)
      o.require(v[i] <= v[i - 1] + 1e-12, s.name + " violation increases");
    summary += (summary.empty() ? "" : ", ") + s.name + " " + fmt(v[0]) + "->" + fmt(v.back());
  }
  if (o.pass) o.detail = summary;
  return o;
}

// 8. b <= w + 1e-6.
Outcome criterion_radius() {
  Outcome o;
  std::vector<Named> ops = containment_symbols();
  ops.push_back({"elliptic e^{i pi/4}", SymbolSpec::elliptic(std::polar(1.0, M_PI / 4))});
  ops.push_back({"moebius (4+2z)/(9-z)", SymbolSpec::moebius(2, 4, -1, 9)});
  ops.push_back({"blaschke 0.3+0.4i", SymbolSpec::blaschke({0.3, 0.4})});
  double worst_ratio = 0.0;
  for (const Named& s : ops) {
    const RadiusComparison r = radius_comparison(composition(s.symbol), kGrid, kDefaultTruncation, 256);
    o.require(r.bound_holds, s.name + ": b=" + fmt(r.b) + " w=" + fmt(r.w));
    worst_ratio = std::max(worst_ratio, r.ratio);
  }
  if (o.pass) o.detail = std::to_string(ops.size()) + " operators, max b/w " + fmt(worst_ratio);
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

std::map<std::string, std::uint64_t> read_golden(const fs::path& p) {
  std::map<std::string, std::uint64_t> out;
  std::ifstream in(p);
  std::string name, hex;
  while (in >> name >> hex) out[name] = std::stoull(hex, nullptr, 16);
  return out;
}

// 9. Figure reproduction through the executable.
Outcome criterion_figures() {
  Outcome o;
  const std::vector<std::string> figs{"fig1_polynomial", "fig2_elliptic", "fig3_blaschke", "fig4_moebius",
                                      "fig5_moebius"};
  const fs::path root = fs::temp_directory_path() / ("berange_acceptance_" + std::to_string(::getpid()));
  const fs::path specs = BERANGE_SPECS_DIR;
  std::map<std::string, std::uint64_t> hashes[2];
  for (int run = 0; run < 2; ++run) {
    const fs::path out = root / ("run" + std::to_string(run));
    for (const std::string& f : figs) {
      const std::string cmd = std::string(BERANGE_CLI_PATH) + " compute " + (specs / (f + ".json")).string() +
                              " --out " + out.string() + " >/dev/null 2>&1";
      const int status = std::system(cmd.c_str());
      o.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, f + " compute failed");
      o.require(fs::exists(out / (f + ".svg")) && fs::exists(out / (f + ".csv")), f + " missing SVG/CSV");
      hashes[run][f] = fnv1a(slurp(out / (f + ".csv")));
    }
  }
  for (const std::string& f : figs) o.require(hashes[0][f] == hashes[1][f], f + " CSV differs between runs");

  const auto golden = read_golden(specs.parent_path() / "tests" / "golden" / "figures.fnv1a");
  for (const std::string& f : figs) {
    const auto it = golden.find(f);
    o.require(it != golden.end() && it->second == hashes[0][f], f + " CSV hash differs from golden");
  }

  auto defect_ratio = [&](const std::string& f) {
    const auto report = nlohmann::json::parse(slurp(root / "run0" / (f + ".report.json")));
    const auto& v = report.at("verdicts").at(0);
    return v.at("defect").get<double>() / v.at("tolerance").get<double>();
  };
  const double fig3 = defect_ratio("fig3_blaschke"), fig4 = defect_ratio("fig4_moebius");
  o.require(fig3 > 5.0, "fig3 defect/tol " + fmt(fig3));
  o.require(fig4 <= 5.0, "fig4 defect/tol " + fmt(fig4));
  fs::remove_all(root);
  if (o.pass) o.detail = "5 specs x 2 runs stable, matches golden; defect/tol fig3 " + fmt(fig3) + ", fig4 " + fmt(fig4);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"matrix ranges are diagonals", criterion_matrices},
      {"elliptic convexity characterization", criterion_elliptic},
      {"Blaschke closed-form real/imaginary parts", criterion_closed_form},
      {"Blaschke conjugation symmetry identity", criterion_symmetry},
      {"Blaschke convexity components", criterion_blaschke},
      {"numerical range machinery", criterion_numrange},
      {"Berezin range inside truncated numerical range", criterion_containment},
      {"Berezin radius below numerical radius", criterion_radius},
      {"figure reproduction and determinism", criterion_figures},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs >= 60.0) o.require(false, "took " + fmt(secs) + " s");
    failures += o.pass ? 0 : 1;
    std::printf("%s  %zu. %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures, criteria.size());
  return failures ? 1 : 0;
}
