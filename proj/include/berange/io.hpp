#pragma once

// File formats: range CSV, SVG figures, JSON job specs and JSON reports.
//
// CSV: header `kind,r,theta,re,im`; kind B for Berezin samples, W for
// numerical-range boundary points (r and theta blank). Numbers use 17
// significant digits, so reading a file back reproduces every double.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "berange/error.hpp"

#include "berange/analysis.hpp"
#include "berange/berezin.hpp"
#include "berange/numrange.hpp"

namespace berange::io {

/// Spec validation failure; `field` names the offending JSON path.
class SpecError : public Error {
 public:
  SpecError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct CsvData {
  std::vector<Complex> berezin;
  std::vector<SampleTag> tags;
  std::vector<Complex> numerical;
};

void write_csv(std::ostream& os, const RangeCloud* berezin, const NumericalRangeBoundary* numerical);
/// Throws SpecError("csv:<line>") on malformed input.
CsvData read_csv(std::istream& is);

/// One panel per supplied range (numerical range left, Berezin range right).
void write_svg(std::ostream& os, const std::vector<Complex>* berezin, const std::vector<Complex>* numerical,
               const std::string& title);

/// Complex values in JSON are either a number or [re, im].
Complex complex_from_json(const nlohmann::json& j, const std::string& field);
nlohmann::json complex_to_json(Complex z);

SymbolSpec symbol_from_json(const nlohmann::json& j, const std::string& field);
OperatorSpec operator_from_json(const nlohmann::json& j, const std::string& field);

struct JobSpec {
  OperatorSpec op;
  SamplingGrid grid{};
  std::size_t truncation = kDefaultTruncation;
  std::size_t angle_count = 256;
  std::uint64_t seed = 42;
  bool want_berezin = true;
  bool want_numerical = true;
  bool csv = false;
  bool svg = false;
  bool report = false;
};

/// Throws SpecError for schema problems and NotSelfMap for invalid composition symbols.
JobSpec job_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const TheoremVerdict& v);

}  // namespace berange::io
