#include "berange/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "berange/error.hpp"

namespace berange::io {
namespace {

using nlohmann::json;

std::string num17(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

double parse_field(const std::string& s, std::size_t line) {
  if (s.empty()) return std::numeric_limits<double>::quiet_NaN();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) throw SpecError("csv:" + std::to_string(line), "bad number '" + s + "'");
  return v;
}

const json& require(const json& j, const char* key, const std::string& field) {
  if (!j.is_object() || !j.contains(key)) throw SpecError(field + "." + key, "missing field");
  return j.at(key);
}

std::size_t positive_size(const json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw SpecError(field, "expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

KernelSpace space_from_json(const json& op, const std::string& field) {
  if (!op.contains("space")) return KernelSpace::hardy();
  const json& s = op.at("space");
  if (s == "hardy") return KernelSpace::hardy();
  if (s == "bergman") return KernelSpace::bergman();
  throw SpecError(field + ".space", "expected \"hardy\" or \"bergman\"");
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& os, const RangeCloud* berezin, const NumericalRangeBoundary* numerical) {
  os << "kind,r,theta,re,im\n";
  if (berezin) {
    for (std::size_t i = 0; i < berezin->cloud.size(); ++i) {
      const Complex p = berezin->cloud[i];
      const SampleTag& t = berezin->tags[i];
      os << "B," << num17(t.r) << ',' << num17(t.theta) << ',' << num17(p.real()) << ',' << num17(p.imag())
         << '\n';
    }
  }
  if (numerical) {
    for (const Complex& p : numerical->support_points)
      os << "W,,," << num17(p.real()) << ',' << num17(p.imag()) << '\n';
  }
}

CsvData read_csv(std::istream& is) {
  CsvData out;
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(is, line) || line != "kind,r,theta,re,im") throw SpecError("csv:1", "missing header");
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 5) throw SpecError("csv:" + std::to_string(lineno), "expected 5 fields");
    const Complex p(parse_field(f[3], lineno), parse_field(f[4], lineno));
    if (!is_finite(p)) throw SpecError("csv:" + std::to_string(lineno), "point must be finite");
    if (f[0] == "B") {
      out.berezin.push_back(p);
      out.tags.push_back({parse_field(f[1], lineno), parse_field(f[2], lineno)});
    } else if (f[0] == "W") {
      out.numerical.push_back(p);
    } else {
      throw SpecError("csv:" + std::to_string(lineno), "kind must be B or W");
    }
  }
  return out;
}

void write_svg(std::ostream& os, const std::vector<Complex>* berezin, const std::vector<Complex>* numerical,
               const std::string& title) {
  constexpr double kPanel = 800.0;
  double extent = 1.1;
  for (const auto* set : {berezin, numerical})
    if (set)
      for (const Complex& p : *set) extent = std::max({extent, 1.05 * std::abs(p.real()), 1.05 * std::abs(p.imag())});

  std::vector<std::pair<std::string, const std::vector<Complex>*>> panels;
  if (numerical) panels.emplace_back("W", numerical);
  if (berezin) panels.emplace_back("B", berezin);
  const double width = kPanel * static_cast<double>(std::max<std::size_t>(1, panels.size()));

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\"" << px(kPanel)
     << "\" viewBox=\"0 0 " << px(width) << ' ' << px(kPanel) << "\">\n";
  os << "<title>" << xml_escape(title) << "</title>\n";
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const double x0 = kPanel * static_cast<double>(k);
    auto sx = [&](double re) { return x0 + (re + extent) / (2.0 * extent) * kPanel; };
    auto sy = [&](double im) { return (extent - im) / (2.0 * extent) * kPanel; };
    os << "<g id=\"panel-" << panels[k].first << "\">\n";
    os << "<rect x=\"" << px(x0) << "\" y=\"0\" width=\"" << px(kPanel) << "\" height=\"" << px(kPanel)
       << "\" fill=\"white\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << px(sx(-extent)) << "\" y1=\"" << px(sy(0)) << "\" x2=\"" << px(sx(extent)) << "\" y2=\""
       << px(sy(0)) << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
    os << "<line x1=\"" << px(sx(0)) << "\" y1=\"" << px(sy(-extent)) << "\" x2=\"" << px(sx(0)) << "\" y2=\""
       << px(sy(extent)) << "\" stroke=\"gray\" stroke-width=\"0.5\"/>\n";
    os << "<circle cx=\"" << px(sx(0)) << "\" cy=\"" << px(sy(0)) << "\" r=\"" << px(kPanel / (2.0 * extent))
       << "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"4 4\" stroke-width=\"0.5\"/>\n";
    os << "<text x=\"" << px(x0 + 12) << "\" y=\"24\" font-size=\"18\">" << panels[k].first << "</text>\n";
    if (panels[k].first == "W") {
      const std::vector<Complex> hull = convex_hull(*panels[k].second);
      os << "<polygon fill=\"#c6dbef\" stroke=\"#08519c\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < hull.size(); ++i)
        os << (i ? " " : "") << px(sx(hull[i].real())) << ',' << px(sy(hull[i].imag()));
      os << "\"/>\n";
    } else {
      os << "<g fill=\"#a50f15\">\n";
      for (const Complex& p : *panels[k].second)
        os << "<circle cx=\"" << px(sx(p.real())) << "\" cy=\"" << px(sy(p.imag())) << "\" r=\"1.5\"/>\n";
      os << "</g>\n";
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
}

Complex complex_from_json(const json& j, const std::string& field) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw SpecError(field, "expected a number or [re, im]");
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

SymbolSpec symbol_from_json(const json& j, const std::string& field) {
  const json& kind = require(j, "kind", field);
  try {
    if (kind == "elliptic") return SymbolSpec::elliptic(complex_from_json(require(j, "zeta", field), field + ".zeta"));
    if (kind == "blaschke") return SymbolSpec::blaschke(complex_from_json(require(j, "alpha", field), field + ".alpha"));
    if (kind == "moebius")
      return SymbolSpec::moebius(complex_from_json(require(j, "a", field), field + ".a"),
                                 complex_from_json(require(j, "b", field), field + ".b"),
                                 complex_from_json(require(j, "c", field), field + ".c"),
                                 complex_from_json(require(j, "d", field), field + ".d"));
    if (kind == "polynomial") {
      const json& cs = require(j, "coeffs", field);
      if (!cs.is_array()) throw SpecError(field + ".coeffs", "expected an array");
      std::vector<Complex> coeffs;
      for (std::size_t i = 0; i < cs.size(); ++i)
        coeffs.push_back(complex_from_json(cs[i], field + ".coeffs[" + std::to_string(i) + "]"));
      return SymbolSpec::polynomial(std::move(coeffs));
    }
  } catch (const InvalidParameter& e) {
    throw SpecError(field, e.what());
  }
  throw SpecError(field + ".kind", "expected elliptic, blaschke, moebius or polynomial");
}

OperatorSpec operator_from_json(const json& j, const std::string& field) {
  const json& kind = require(j, "kind", field);
  try {
    if (kind == "matrix") {
      const json& rows = require(j, "entries", field);
      if (!rows.is_array()) throw SpecError(field + ".entries", "expected an array of rows");
      std::vector<std::vector<Complex>> m;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array()) throw SpecError(field + ".entries[" + std::to_string(i) + "]", "expected a row");
        auto& row = m.emplace_back();
        for (std::size_t c = 0; c < rows[i].size(); ++c)
          row.push_back(complex_from_json(rows[i][c], field + ".entries[" + std::to_string(i) + "][" +
                                                          std::to_string(c) + "]"));
      }
      return OperatorSpec::matrix(DenseMatrix::from_rows(m));
    }
    if (kind == "multiplication") {
      if (j.contains("values")) {
        const json& vs = j.at("values");
        if (!vs.is_array()) throw SpecError(field + ".values", "expected an array");
        std::vector<Complex> values;
        for (std::size_t i = 0; i < vs.size(); ++i)
          values.push_back(complex_from_json(vs[i], field + ".values[" + std::to_string(i) + "]"));
        return OperatorSpec::multiplication(std::move(values));
      }
      return OperatorSpec::multiplication(symbol_from_json(require(j, "symbol", field), field + ".symbol"),
                                          space_from_json(j, field));
    }
    if (kind == "composition")
      return OperatorSpec::composition(symbol_from_json(require(j, "symbol", field), field + ".symbol"),
                                       space_from_json(j, field));
  } catch (const InvalidParameter& e) {
    throw SpecError(field, e.what());
  }
  throw SpecError(field + ".kind", "expected matrix, multiplication or composition");
}

JobSpec job_from_json(const json& j) {
  if (!j.is_object()) throw SpecError("$", "spec must be a JSON object");
  JobSpec job{operator_from_json(require(j, "operator", "$"), "$.operator")};
  if (j.contains("grid")) {
    const json& g = j.at("grid");
    if (!g.is_object()) throw SpecError("$.grid", "expected an object");
    if (g.contains("radii")) job.grid.radii = positive_size(g.at("radii"), "$.grid.radii");
    if (g.contains("angles")) job.grid.angles = positive_size(g.at("angles"), "$.grid.angles");
    if (g.contains("r_max")) {
      if (!g.at("r_max").is_number()) throw SpecError("$.grid.r_max", "expected a number");
      job.grid.r_max = g.at("r_max").get<double>();
    }
    if (g.contains("phase")) {
      if (!g.at("phase").is_number()) throw SpecError("$.grid.phase", "expected a number");
      job.grid.phase = g.at("phase").get<double>();
    }
    try {
      job.grid.validate();
    } catch (const InvalidParameter& e) {
      throw SpecError("$.grid", e.what());
    }
  }
  if (j.contains("truncation")) job.truncation = positive_size(j.at("truncation"), "$.truncation");
  if (job.truncation < 2) throw SpecError("$.truncation", "must be >= 2");
  if (j.contains("angle_count")) job.angle_count = positive_size(j.at("angle_count"), "$.angle_count");
  if (job.angle_count < 16) throw SpecError("$.angle_count", "must be >= 16");
  if (j.contains("seed")) {
    if (!j.at("seed").is_number_unsigned()) throw SpecError("$.seed", "expected a nonnegative integer");
    job.seed = j.at("seed").get<std::uint64_t>();
  }

  const bool is_mult = job.op.as_multiplication() != nullptr;
  job.want_numerical = !is_mult;
  if (j.contains("ranges")) {
    const json& r = j.at("ranges");
    if (!r.is_array() || r.empty()) throw SpecError("$.ranges", "expected a nonempty array");
    job.want_berezin = job.want_numerical = false;
    for (const json& x : r) {
      if (x == "berezin") job.want_berezin = true;
      else if (x == "numerical") job.want_numerical = true;
      else throw SpecError("$.ranges", "entries must be \"berezin\" or \"numerical\"");
    }
    if (job.want_numerical && is_mult)
      throw SpecError("$.ranges", "numerical range is only available for matrix and composition operators");
  }

  const json& outs = require(j, "outputs", "$");
  if (!outs.is_array() || outs.empty()) throw SpecError("$.outputs", "at least one output is required");
  for (const json& o : outs) {
    if (o == "csv") job.csv = true;
    else if (o == "svg") job.svg = true;
    else if (o == "report") job.report = true;
    else throw SpecError("$.outputs", "entries must be csv, svg or report");
  }
  return job;
}

nlohmann::json verdict_to_json(const TheoremVerdict& v) {
  json out;
  out["claim"] = std::string(claim_name(v.claim));
  out["parameters"] = v.parameters;
  out["predicted"] = v.predicted ? json(*v.predicted) : json(nullptr);
  out["observed"] = v.observed;
  out["verdict"] = v.claim == Claim::Symmetry43 ? json(nullptr) : json(std::string(verdict_name(v.verdict)));
  out["defect"] = v.defect;
  out["tolerance"] = v.tolerance;
  out["consistent"] = v.consistent;
  return out;
}

}  // namespace berange::io
