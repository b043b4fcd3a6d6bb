#pragma once

// Subcommands behind the `berange` executable. Each returns the process exit
// code and writes human-readable output to the supplied streams.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "berange/types.hpp"

namespace berange::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInconsistent = 1;
inline constexpr int kExitSpec = 2;
inline constexpr int kExitNumerical = 3;

struct GridFlag {
  std::size_t radii;
  std::size_t angles;
};

/// Parses "RxA", e.g. "200x256". Throws InvalidParameter.
GridFlag parse_grid(const std::string& text);
/// Parses "a", "a+bi", "a-bi", "bi", "i". Throws InvalidParameter.
Complex parse_complex(const std::string& text);

struct ComputeFlags {
  std::optional<GridFlag> grid;
  std::optional<double> r_max;
  std::optional<std::size_t> truncation;
  std::optional<std::uint64_t> seed;
  std::string out_dir = ".";
};

/// Writes <out>/<stem>.csv, <stem>.svg and <stem>.report.json as requested by
/// the spec. Exit 2 on spec errors, 3 on numerical contract violations.
int cmd_compute(const std::string& spec_path, const ComputeFlags& flags, std::ostream& out, std::ostream& err);

struct VerifyFlags {
  std::optional<std::string> claim;  // elliptic, blaschke, matrix, multiplication, symmetry
  std::optional<Complex> zeta;
  std::optional<Complex> alpha;
  std::optional<GridFlag> grid;
  std::optional<double> r_max;
  std::uint64_t seed = 42;
};

/// Runs the convexity and symmetry characterization checks and prints one row per check. Exit 0 iff all pass.
int cmd_verify(const VerifyFlags& flags, std::ostream& out, std::ostream& err);

/// Re-renders a range CSV as SVG.
int cmd_plot(const std::string& csv_path, const std::string& svg_path, std::ostream& out, std::ostream& err);

}  // namespace berange::cli
