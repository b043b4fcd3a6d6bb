#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "berange/cli.hpp"
#include "berange/error.hpp"

namespace {

using namespace berange;

template <class T>
void parse_opt(CLI::Option* opt, const std::string& text, std::optional<T>& target, T (*parse)(const std::string&)) {
  if (opt->count() > 0) target = parse(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berezin and numerical ranges of operators on reproducing-kernel spaces"};
  app.require_subcommand(1);

  std::string spec_path, grid_text, alpha_text, zeta_text, csv_path, svg_path;
  cli::ComputeFlags cflags;
  cli::VerifyFlags vflags;
  double rmax = 0.0;
  std::size_t trunc = 0;
  std::uint64_t seed = 42;

  auto* compute = app.add_subcommand("compute", "Compute ranges and artifacts from a JSON spec");
  compute->add_option("spec", spec_path, "JSON job spec")->required();
  auto* c_grid = compute->add_option("--grid", grid_text, "Sampling grid RxA, e.g. 200x256");
  auto* c_rmax = compute->add_option("--rmax", rmax, "Outer sampling radius");
  auto* c_trunc = compute->add_option("--trunc", trunc, "Truncation order N");
  auto* c_seed = compute->add_option("--seed", seed, "Probe seed");
  compute->add_option("--out", cflags.out_dir, "Output directory");

  auto* verify = app.add_subcommand("verify", "Run the convexity and symmetry characterization checks");
  verify->add_option("--claim", vflags.claim, "elliptic | blaschke | matrix | multiplication | symmetry")
      ->check(CLI::IsMember({"elliptic", "blaschke", "matrix", "multiplication", "symmetry"}));
  auto* v_zeta = verify->add_option("--zeta", zeta_text, "Elliptic rotation, e.g. 0.7071+0.7071i");
  auto* v_alpha = verify->add_option("--alpha", alpha_text, "Blaschke zero, e.g. -0.5 or 0.3+0.4i");
  auto* v_grid = verify->add_option("--grid", grid_text, "Sampling grid RxA");
  auto* v_rmax = verify->add_option("--rmax", rmax, "Outer sampling radius");
  verify->add_option("--seed", vflags.seed, "Probe seed");

  auto* plot = app.add_subcommand("plot", "Render a range CSV as SVG");
  plot->add_option("csv", csv_path, "Range CSV")->required();
  plot->add_option("--svg", svg_path, "Output SVG")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      parse_opt(c_grid, grid_text, cflags.grid, &cli::parse_grid);
      if (c_rmax->count() > 0) cflags.r_max = rmax;
      if (c_trunc->count() > 0) cflags.truncation = trunc;
      if (c_seed->count() > 0) cflags.seed = seed;
      return cli::cmd_compute(spec_path, cflags, std::cout, std::cerr);
    }
    if (verify->parsed()) {
      parse_opt(v_grid, grid_text, vflags.grid, &cli::parse_grid);
      parse_opt(v_zeta, zeta_text, vflags.zeta, &cli::parse_complex);
      parse_opt(v_alpha, alpha_text, vflags.alpha, &cli::parse_complex);
      if (v_rmax->count() > 0) vflags.r_max = rmax;
      return cli::cmd_verify(vflags, std::cout, std::cerr);
    }
    return cli::cmd_plot(csv_path, svg_path, std::cout, std::cerr);
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitSpec;
  }
}
