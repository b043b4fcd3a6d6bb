#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "berange/berezin.hpp"
#include "berange/error.hpp"
#include "berange/numrange.hpp"
#include "support.hpp"

using namespace berange;

namespace {

const SamplingGrid kSmallGrid{30, 48, 0.995};

std::vector<Complex> points_of(const RangeCloud& c) { return {c.cloud.points().begin(), c.cloud.points().end()}; }

}  // namespace

TEST_CASE("grid layout") {
  const SamplingGrid g{5, 8, 0.9};
  CHECK(g.node_count() == 33);
  const auto nodes = grid_nodes(g);
  REQUIRE(nodes.size() == 33);
  CHECK(nodes[0].z == Complex(0, 0));
  CHECK(nodes.back().r == doctest::Approx(0.9));
  CHECK(g.radius(2) == doctest::Approx(0.9 * std::sqrt(0.5)));
  for (std::size_t j = 1; j < 5; ++j)
    for (std::size_t m = 0; m < 8; ++m) {
      const GridNode& n = nodes[1 + (j - 1) * 8 + m];
      CHECK(n.r == g.radius(j));
      CHECK(n.theta == g.angle(m));
      CHECK(std::abs(n.z) <= 0.9 + 1e-15);
    }
  CHECK_THROWS_AS((SamplingGrid{1, 8, 0.9}.validate()), InvalidParameter);
  CHECK_THROWS_AS((SamplingGrid{5, 0, 0.9}.validate()), InvalidParameter);
  CHECK_THROWS_AS((SamplingGrid{5, 8, 1.0}.validate()), InvalidParameter);
  CHECK_THROWS_AS((SamplingGrid{5, 8, 0.0}.validate()), InvalidParameter);
}

TEST_CASE("operator construction") {
  CHECK_THROWS_AS(OperatorSpec::composition(SymbolSpec::polynomial({0.0, 2.0})), NotSelfMap);
  CHECK_THROWS_AS(OperatorSpec::composition(SymbolSpec::blaschke(0.1), KernelSpace::finite_dim(3)), InvalidParameter);
  CHECK_THROWS_AS(OperatorSpec::multiplication(SymbolSpec::moebius(1, 0, 1, 1), KernelSpace::hardy()),
                  InvalidParameter);
  CHECK_THROWS_AS(OperatorSpec::multiplication(std::vector<Complex>{}), InvalidParameter);
  CHECK(OperatorSpec::matrix(DenseMatrix::identity(2)).space() == KernelSpace::finite_dim(2));
}

TEST_CASE("transform examples") {
  const auto m = OperatorSpec::matrix(DenseMatrix::from_rows({{1, 2}, {3, 4}}));
  CHECK(berezin_transform(m, 1.0) == Complex(4, 0));
  CHECK_THROWS_AS(berezin_transform(m, 2.0), OutOfDomain);

  for (const Complex alpha : {Complex(0, 0), Complex(-0.5, 0), Complex(0.3, 0.4)})
    CHECK(berezin_transform(OperatorSpec::composition(SymbolSpec::blaschke(alpha)), 0.0) == Complex(1, 0));

  const Complex alpha(0.3, 0.4);
  const auto op = OperatorSpec::composition(SymbolSpec::blaschke(alpha));
  for (double r : {-1.5, -0.7, 0.0, 0.4, 1.0, 1.9})
    CHECK(std::abs(berezin_transform(op, r * alpha) - (1.0 - r * std::norm(alpha))) <= 1e-13);

  CHECK_THROWS_AS(berezin_transform(op, 1.0), OutOfDomain);
}

TEST_CASE("composition transform equals the kernel formula") {
  test::Rng rng(10);
  const std::vector<SymbolSpec> symbols{SymbolSpec::moebius(2, 4, -1, 9), SymbolSpec::moebius(0.5, 0.5, 0, 1),
                                        SymbolSpec::polynomial({0.25, 0.5, 0.25}), SymbolSpec::elliptic({0, 1})};
  for (const SymbolSpec& s : symbols) {
    const auto hardy = OperatorSpec::composition(s, KernelSpace::hardy());
    const auto bergman = OperatorSpec::composition(s, KernelSpace::bergman());
    for (int i = 0; i < 500; ++i) {
      const Complex z = rng.in_disk(0.995);
      const Complex expect = test::hardy_transform_ref(z, symbol_eval(s, z));
      CHECK(std::abs(berezin_transform(hardy, z) - expect) <= 1e-12 * std::max(1.0, std::abs(expect)));
      CHECK(std::abs(berezin_transform(bergman, z) - expect * expect) <= 1e-12 * std::max(1.0, std::norm(expect)));
    }
  }
}

TEST_CASE("composition transform equals <A_N k_z, k_z> / |k_z|^2 for small z") {
  // Independent route through the monomial matrix: k_z has coefficients conj(z)^j.
  test::Rng rng(12);
  const std::size_t n = 80;
  for (const SymbolSpec& s : {SymbolSpec::blaschke({0.3, 0.4}), SymbolSpec::moebius(2, 4, -1, 9)}) {
    const DenseMatrix a = truncate_composition(s, n);
    const auto op = OperatorSpec::composition(s);
    for (int t = 0; t < 20; ++t) {
      const Complex z = rng.in_disk(0.5);
      std::vector<Complex> k(n);
      Complex p = 1.0;
      for (std::size_t j = 0; j < n; ++j, p *= std::conj(z)) k[j] = p;
      const Complex via_matrix = quadratic_form(a, k, k) * (1.0 - std::norm(z));
      CHECK(std::abs(via_matrix - berezin_transform(op, z)) <= 1e-12);
    }
  }
}

TEST_CASE("closed-form real and imaginary parts match the direct transform") {
  test::Rng rng(13);
  for (int i = 0; i < 10000; ++i) {
    const Complex alpha = rng.in_disk(0.95), z = rng.in_disk(0.99);
    const BlaschkeParts p = blaschke_re_im(alpha, z);
    const Complex direct = test::hardy_transform_ref(z, test::blaschke_ref(alpha, z));
    CHECK(std::abs(Complex(p.re, p.im) - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
  }
  SUBCASE("real alpha and real z") {
    const BlaschkeParts p = blaschke_re_im(0.4, -0.6);
    CHECK(p.im == 0.0);
    CHECK(p.re == doctest::Approx(1.0 - 0.4 * -0.6).epsilon(1e-15));
  }
  SUBCASE("alpha zero") {
    const Complex z(0.3, -0.5);
    const BlaschkeParts p = blaschke_re_im(0.0, z);
    CHECK(p.re == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.im == 0.0);
    CHECK(p.c == doctest::Approx(1.0 / (1.0 - std::norm(z))).epsilon(1e-15));
  }
  SUBCASE("alpha -1/2 at 0.3i") {
    const BlaschkeParts p = blaschke_re_im(-0.5, Complex(0, 0.3));
    const Complex t = berezin_transform(OperatorSpec::composition(SymbolSpec::blaschke(-0.5)), Complex(0, 0.3));
    CHECK(std::abs(Complex(p.re, p.im) - t) <= 1e-13);
  }
}

TEST_CASE("elliptic transform is rotation independent and has the kernel-derived form") {
  const SamplingGrid g{40, 64, 0.995};
  for (const Complex zeta : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), std::polar(1.0, 0.1)}) {
    const auto cloud = sample_berezin_range(OperatorSpec::composition(SymbolSpec::elliptic(zeta)), g);
    const auto pts = points_of(cloud);
    for (std::size_t j = 1; j < g.radii; ++j) {
      const double r = g.radius(j);
      const Complex expect = (1.0 - r * r) / (1.0 - zeta * r * r);
      for (std::size_t m = 0; m < g.angles; ++m) {
        const Complex v = pts[1 + (j - 1) * g.angles + m];
        CHECK(std::abs(v - pts[1 + (j - 1) * g.angles]) <= 1e-14);
        CHECK(std::abs(v - expect) <= 1e-13);
      }
    }
  }
}

TEST_CASE("sampled range examples") {
  SUBCASE("matrix gives its diagonal") {
    const auto c = sample_berezin_range(OperatorSpec::matrix(DenseMatrix::from_rows({{1, 2}, {3, 4}})), kSmallGrid);
    CHECK(points_of(c) == std::vector<Complex>{1, 4});
    CHECK(c.tags[1].r == 1.0);
    CHECK(std::isnan(c.tags[1].theta));
  }
  SUBCASE("zeta = 1 is identically 1") {
    const auto c = sample_berezin_range(OperatorSpec::composition(SymbolSpec::elliptic(1.0)), kSmallGrid);
    for (const Complex& p : c.cloud.points()) CHECK(std::abs(p - 1.0) <= 1e-14);
    CHECK(c.cloud.size() == kSmallGrid.node_count());
  }
  SUBCASE("zeta = -1 is real in (0, 1]") {
    const auto c = sample_berezin_range(OperatorSpec::composition(SymbolSpec::elliptic(-1.0)), kSmallGrid);
    for (const Complex& p : c.cloud.points()) {
      CHECK(std::abs(p.imag()) <= 1e-14);
      CHECK(p.real() > 0.0);
      CHECK(p.real() <= 1.0);
    }
  }
  SUBCASE("tags follow grid-major order") {
    const auto c = sample_berezin_range(OperatorSpec::composition(SymbolSpec::blaschke(0.2)), kSmallGrid);
    const auto nodes = grid_nodes(kSmallGrid);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      CHECK(c.tags[i].r == nodes[i].r);
      CHECK(c.tags[i].theta == nodes[i].theta);
    }
    CHECK(c.kind == RangeKind::BerezinRange);
  }
}

TEST_CASE("matrix trace identity and diagonal multiset") {
  test::Rng rng(15);
  for (int t = 0; t < 20; ++t) {
    const DenseMatrix a = rng.matrix(6);
    const auto c = sample_berezin_range(OperatorSpec::matrix(a), kSmallGrid);
    Complex sum = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
      CHECK(c.cloud[i] == a(i, i));
      sum += c.cloud[i];
    }
    CHECK(std::abs(sum - a.trace()) <= 1e-12);
  }
}

TEST_CASE("multiplication ranges are g(X)") {
  const SymbolSpec g = SymbolSpec::moebius(0.5, 0.5, 0, 1);
  for (const KernelSpace space : {KernelSpace::hardy(), KernelSpace::bergman()}) {
    const auto c = sample_berezin_range(OperatorSpec::multiplication(g, space), kSmallGrid);
    const auto nodes = grid_nodes(kSmallGrid);
    for (std::size_t i = 0; i < nodes.size(); ++i) CHECK(std::abs(c.cloud[i] - (1.0 + nodes[i].z) / 2.0) <= 1e-15);
  }
  const auto f = sample_berezin_range(OperatorSpec::multiplication(std::vector<Complex>{2, Complex(0, 1), 2}), kSmallGrid);
  CHECK(points_of(f) == std::vector<Complex>{2, Complex(0, 1), 2});
}

TEST_CASE("boundary limit probe") {
  const std::vector<double> radii{0.9, 0.99, 0.999, 0.9999};
  const auto blaschke = OperatorSpec::composition(SymbolSpec::blaschke(-0.5));
  const auto p = boundary_limit_probe(blaschke, M_PI / 2, radii);
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(std::abs(p[i]) < std::abs(p[i - 1]));
  CHECK(std::abs(p.back()) < 1e-3);
  // Rays ending at the boundary fixed points +-alpha/|alpha| keep 1 - r|alpha|^2 and tend to 1 -+ |alpha|.
  const auto fixed_plus = boundary_limit_probe(blaschke, 0.0, radii);
  const auto fixed_minus = boundary_limit_probe(blaschke, M_PI, radii);
  CHECK(std::abs(fixed_plus.back() - (1.0 + 0.5 * 0.9999)) <= 1e-12);
  CHECK(std::abs(fixed_minus.back() - (1.0 - 0.5 * 0.9999)) <= 1e-12);
  for (const Complex& v : boundary_limit_probe(OperatorSpec::composition(SymbolSpec::blaschke(0.0)), 1.0, radii))
    CHECK(std::abs(v - 1.0) <= 1e-15);
  const auto e = boundary_limit_probe(OperatorSpec::composition(SymbolSpec::elliptic({0, 1})), 0.3, radii);
  CHECK(std::abs(e.back()) < 2e-4);
  CHECK_THROWS_AS(boundary_limit_probe(OperatorSpec::matrix(DenseMatrix::identity(2)), 0.0, radii), InvalidParameter);
  CHECK_THROWS_AS(boundary_limit_probe(OperatorSpec::composition(SymbolSpec::blaschke(0.1)), 0.0, {0.5, 0.4}),
                  InvalidParameter);
}

TEST_CASE("conjugation symmetry at grid nodes") {
  for (const Complex alpha : {Complex(-0.5, 0), Complex(0.3, 0.4)}) {
    const auto op = OperatorSpec::composition(SymbolSpec::blaschke(alpha));
    const double psi = std::arg(alpha);
    for (const GridNode& n : grid_nodes(kSmallGrid)) {
      const Complex mirror = std::polar(n.r, 2.0 * psi - n.theta);
      CHECK(std::abs(berezin_transform(op, n.z) - std::conj(berezin_transform(op, mirror))) <= 1e-13);
    }
  }
}
