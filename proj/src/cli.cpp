#include "berange/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <vector>

#include "berange/analysis.hpp"
#include "berange/error.hpp"
#include "berange/io.hpp"

namespace berange::cli {
namespace {

using nlohmann::json;

double parse_real(const std::string& s, const std::string& whole) {
  if (s.empty()) throw InvalidParameter("cannot parse '" + whole + "' as a number");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v))
    throw InvalidParameter("cannot parse '" + whole + "' as a number");
  return v;
}

std::string fmt(double v, const char* spec = "%.3g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string fmt_complex(Complex z) {
  return fmt(z.real(), "%.6g") + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag()), "%.6g") + "i";
}

json grid_json(const SamplingGrid& g) { return {{"radii", g.radii}, {"angles", g.angles}, {"r_max", g.r_max}, {"phase", g.phase}}; }

void apply_grid_flags(SamplingGrid& grid, const std::optional<GridFlag>& g, const std::optional<double>& r_max) {
  if (g) {
    grid.radii = g->radii;
    grid.angles = g->angles;
  }
  if (r_max) grid.r_max = *r_max;
}

struct Row {
  std::string name;
  std::string parameters;
  std::string predicted;
  std::string observed;
  std::string detail;
  bool pass;
};

std::string yes_no(std::optional<bool> b, const char* yes, const char* no) {
  return b ? (*b ? yes : no) : "n/a";
}

Row verdict_row(const TheoremVerdict& v) {
  const bool symmetry = v.claim == Claim::Symmetry43;
  const char* yes = symmetry ? "symmetric" : "convex";
  const char* no = symmetry ? "asymmetric" : "nonconvex";
  return {std::string(claim_name(v.claim)), v.parameters, yes_no(v.predicted, yes, no),
          !symmetry && v.verdict == ConvexityVerdict::Inconclusive ? "inconclusive" : yes_no(v.observed, yes, no),
          (symmetry ? std::string() : std::string(verdict_name(v.verdict)) + " ") + "defect=" + fmt(v.defect) + " tol=" + fmt(v.tolerance),
          v.consistent};
}

Row check_row(const std::string& name, const std::string& parameters, double value, double bound) {
  return {name, parameters, "<= " + fmt(bound), fmt(value), "", value <= bound};
}

OperatorSpec fixed_matrix() {
  return OperatorSpec::matrix(DenseMatrix::from_rows({{Complex(1, 0), Complex(2, 0), Complex(0, 0)},
                                                      {Complex(0, 0), Complex(0, 1), Complex(1, 0)},
                                                      {Complex(0, 1), Complex(0, 0), Complex(-1, 0)}}));
}

OperatorSpec fixed_multiplication() {
  return OperatorSpec::multiplication(SymbolSpec::moebius(0.5, 0.5, 0.0, 1.0), KernelSpace::hardy());
}

}  // namespace

GridFlag parse_grid(const std::string& text) {
  const auto x = text.find('x');
  if (x == std::string::npos || x == 0 || x + 1 == text.size())
    throw InvalidParameter("grid must look like RxA, got '" + text + "'");
  auto whole = [&](const std::string& s) {
    for (char ch : s)
      if (ch < '0' || ch > '9') throw InvalidParameter("grid must look like RxA, got '" + text + "'");
    return static_cast<std::size_t>(std::stoull(s));
  };
  return {whole(text.substr(0, x)), whole(text.substr(x + 1))};
}

Complex parse_complex(const std::string& raw) {
  std::string s;
  for (char ch : raw)
    if (ch != ' ') s += ch;
  if (s.empty()) throw InvalidParameter("empty complex number");
  if (s.back() != 'i') return {parse_real(s, raw), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, raw), parse_real(im, raw)};
}

int cmd_compute(const std::string& spec_path, const ComputeFlags& flags, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  try {
    std::ifstream in(spec_path);
    if (!in) throw io::SpecError("spec", "cannot open '" + spec_path + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw io::SpecError("spec", std::string("invalid JSON: ") + e.what());
    }
    io::JobSpec job = io::job_from_json(doc);
    if (flags.r_max && !(*flags.r_max > 0.0 && *flags.r_max < 1.0 - kDiskGuard))
      throw io::SpecError("--rmax", "must lie in (0, 1)");
    apply_grid_flags(job.grid, flags.grid, flags.r_max);
    try {
      job.grid.validate();
    } catch (const InvalidParameter& e) {
      throw io::SpecError("--grid", e.what());
    }
    if (flags.truncation) {
      if (*flags.truncation < 2) throw io::SpecError("--trunc", "must be >= 2");
      job.truncation = *flags.truncation;
    }
    if (flags.seed) job.seed = *flags.seed;

    std::optional<RangeCloud> cloud;
    std::optional<NumericalRangeBoundary> boundary;
    if (job.want_berezin) cloud = sample_berezin_range(job.op, job.grid);
    if (job.want_numerical) {
      if (const auto* m = job.op.as_matrix()) {
        boundary = numerical_range_boundary(m->entries, job.angle_count);
      } else if (const auto* c = job.op.as_composition()) {
        boundary = numerical_range_boundary(truncate_composition(c->symbol, job.truncation, c->space),
                                            job.angle_count);
      }
    }

    fs::create_directories(flags.out_dir);
    const std::string stem = fs::path(spec_path).stem().string();
    const fs::path base = fs::path(flags.out_dir) / stem;
    auto write = [&](const std::string& suffix, const std::function<void(std::ostream&)>& body) {
      const fs::path p = base.string() + suffix;
      std::ofstream f(p, std::ios::binary);
      if (!f) throw Error("cannot write '" + p.string() + "'");
      body(f);
      out << "wrote " << p.string() << '\n';
    };

    if (job.csv) write(".csv", [&](std::ostream& os) { io::write_csv(os, cloud ? &*cloud : nullptr, boundary ? &*boundary : nullptr); });
    if (job.svg) {
      std::vector<Complex> b_pts, w_pts;
      if (cloud) b_pts.assign(cloud->cloud.points().begin(), cloud->cloud.points().end());
      if (boundary) w_pts = boundary->support_points;
      write(".svg", [&](std::ostream& os) {
        io::write_svg(os, cloud ? &b_pts : nullptr, boundary ? &w_pts : nullptr, job.op.describe());
      });
    }
    if (job.report) {
      json report;
      report["operator"] = job.op.describe();
      report["grid"] = grid_json(job.grid);
      report["seed"] = job.seed;
      report["truncation"] = job.op.as_composition() ? json(job.truncation) : json(nullptr);
      json verdicts = json::array();
      if (cloud) {
        verdicts.push_back(io::verdict_to_json(convexity_verdict(job.op, *cloud, job.seed)));
        if (const auto* c = job.op.as_composition())
          if (const auto* b = c->symbol.as_blaschke(); b && c->space.kind() == SpaceKind::Hardy)
            verdicts.push_back(io::verdict_to_json(symmetry_verdict(b->alpha, job.grid)));
      }
      report["verdicts"] = verdicts;
      report["b_radius"] = cloud ? json(set_radius(cloud->cloud)) : json(nullptr);
      report["w_radius"] = boundary ? json(boundary->radius) : json(nullptr);
      report["symmetry_defect"] = cloud ? json(conjugation_symmetry_defect(cloud->cloud)) : json(nullptr);
      write(".report.json", [&](std::ostream& os) { os << report.dump(2) << '\n'; });
    }
    return kExitOk;
  } catch (const io::SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSpec;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitSpec;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

int cmd_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err) {
  std::vector<Row> rows;
  try {
    SamplingGrid grid;
    apply_grid_flags(grid, flags.grid, flags.r_max);
    grid.validate();
    Complex zeta = flags.zeta.value_or(std::polar(1.0, std::numbers::pi / 4));
    // Four-digit input such as 0.7071+0.7071i is projected onto the circle.
    if (std::abs(std::abs(zeta) - 1.0) <= 1e-3) zeta /= std::abs(zeta);
    const Complex alpha = flags.alpha.value_or(Complex(-0.5, 0.0));
    const std::string claim = flags.claim.value_or("");
    const bool all = claim.empty();
    if (!all && claim != "elliptic" && claim != "blaschke" && claim != "matrix" && claim != "multiplication" &&
        claim != "symmetry")
      throw InvalidParameter("--claim must be elliptic, blaschke, matrix, multiplication or symmetry");

    if (all || claim == "elliptic")
      rows.push_back(verdict_row(convexity_verdict(OperatorSpec::composition(SymbolSpec::elliptic(zeta)), grid,
                                                   flags.seed)));
    if (all || claim == "blaschke")
      rows.push_back(verdict_row(convexity_verdict(OperatorSpec::composition(SymbolSpec::blaschke(alpha)), grid,
                                                   flags.seed)));
    if (all || claim == "matrix") rows.push_back(verdict_row(convexity_verdict(fixed_matrix(), grid, flags.seed)));
    if (all || claim == "multiplication")
      rows.push_back(verdict_row(convexity_verdict(fixed_multiplication(), grid, flags.seed)));
    if (all || claim == "symmetry") rows.push_back(verdict_row(symmetry_verdict(alpha, grid)));

    if (all) {
      rows.push_back(verdict_row(convexity_verdict(
          OperatorSpec::composition(SymbolSpec::elliptic(-1.0)), grid, flags.seed)));
      rows.push_back(verdict_row(convexity_verdict(
          OperatorSpec::composition(SymbolSpec::blaschke(0.0)), grid, flags.seed)));
      std::vector<double> rs;
      for (int k = 0; k < 100; ++k) rs.push_back(-1.9 + 3.8 * k / 99.0);
      rows.push_back(check_row("on-axis identity", "alpha=" + fmt_complex(alpha),
                               real_section_check(alpha, rs).max_error, 1e-13));
      rows.push_back(check_row("conjugation identity", "alpha=" + fmt_complex(alpha),
                               conjugation_identity_error(alpha, grid), 1e-13));
      const RadiusComparison rc =
          radius_comparison(OperatorSpec::composition(SymbolSpec::blaschke(alpha)),
                            SamplingGrid{60, 128, grid.r_max}, kDefaultTruncation, 128);
      rows.push_back({"radius b <= w", "alpha=" + fmt_complex(alpha) + " N=" + std::to_string(kDefaultTruncation), "b <= w + 1e-06",
                      "b=" + fmt(rc.b, "%.6g") + " w=" + fmt(rc.w, "%.6g"), "", rc.bound_holds});
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitSpec;
  }

  bool ok = true;
  char line[512];
  std::snprintf(line, sizeof line, "%-22s %-48s %-14s %-14s %-6s %s\n", "check", "parameters", "expected",
                "observed", "result", "detail");
  out << line;
  for (const Row& r : rows) {
    ok = ok && r.pass;
    std::snprintf(line, sizeof line, "%-22s %-48s %-14s %-14s %-6s %s\n", r.name.c_str(), r.parameters.c_str(),
                  r.predicted.c_str(), r.observed.c_str(), r.pass ? "PASS" : "FAIL", r.detail.c_str());
    out << line;
  }
  out << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? kExitOk : kExitInconsistent;
}

int cmd_plot(const std::string& csv_path, const std::string& svg_path, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream in(csv_path);
    if (!in) throw io::SpecError("csv", "cannot open '" + csv_path + "'");
    const io::CsvData data = io::read_csv(in);
    std::ofstream f(svg_path, std::ios::binary);
    if (!f) throw Error("cannot write '" + svg_path + "'");
    io::write_svg(f, data.berezin.empty() ? nullptr : &data.berezin,
                  data.numerical.empty() ? nullptr : &data.numerical, std::filesystem::path(csv_path).stem().string());
    out << "wrote " << svg_path << '\n';
    return kExitOk;
  } catch (const io::SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSpec;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace berange::cli
