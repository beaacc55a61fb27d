#include <cmath>

#include "doctest.h"
#include "gps/mapping.hpp"
#include "test_support.hpp"

using namespace gps;

TEST_CASE("map endpoints") {
  const GridSpec spec{300, 200.0, 25.0};
  CHECK(map_radial(spec, -1.0).r == 0.0);
  CHECK(map_radial(spec, 1.0).r == doctest::Approx(200.0).epsilon(1e-14));
  CHECK(spec.map_scale() == doctest::Approx(2500.0));
}

TEST_CASE("map derivatives agree with central differences") {
  const GridSpec spec{300, 200.0, 25.0};
  const double h = 1e-5;
  auto r = [&](double x) { return map_radial(spec, x).r; };
  auto dr = [&](double x) { return map_radial(spec, x).dr; };
  auto d2r = [&](double x) { return map_radial(spec, x).d2r; };
  const auto d = map_radial(spec, 0.0);
  CHECK(d.dr == doctest::Approx((r(h) - r(-h)) / (2 * h)).epsilon(1e-7));
  CHECK(d.d2r == doctest::Approx((dr(h) - dr(-h)) / (2 * h)).epsilon(1e-7));
  CHECK(d.d3r == doctest::Approx((d2r(h) - d2r(-h)) / (2 * h)).epsilon(1e-7));
}

TEST_CASE("vm term") {
  const GridSpec spec{300, 200.0, 25.0};
  for (double x : {-0.9, 0.0, 0.9}) CHECK(std::abs(vm_term(spec, x)) <= 1e-12);
  // r = e^x: v_m = e^{-2x} / 8
  const MapDerivatives exp_map{1.0, 1.0, 1.0, 1.0};
  CHECK(vm_term(exp_map) == doctest::Approx(0.125));
}

TEST_CASE("3 r''^2 = 2 r''' r' for random parameters") {
  for (int trial = 0; trial < 1000; ++trial) {
    const double scale = test::log_uniform(1e-2, 1e4);
    const double alpha = test::log_uniform(1e-3, 1e3);
    const GridSpec spec{300, 2.0 * scale / alpha, alpha};
    const auto d = map_radial(spec, test::uniform(-1.0, 1.0));
    const double lhs = 3.0 * d.d2r * d.d2r;
    const double rhs = 2.0 * d.d3r * d.dr;
    CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(lhs));
  }
}

TEST_CASE("map is monotone and N independent") {
  const GridSpec spec{300, 200.0, 25.0};
  double previous = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = -1.0 + 2.0 * i / 1000.0;
    const double r = map_radial(spec, x).r;
    CHECK(r > previous);
    previous = r;
  }
  GridSpec doubled = spec;
  doubled.order = 600;
  for (double x : {-0.5, 0.1, 0.77}) CHECK(map_radial(spec, x).r == map_radial(doubled, x).r);

  // nodes of order N are nodes of order 2N only at x = 0, -1, 1; compare radii there
  const auto a = make_mapped_grid({10, 50.0, 2.0});
  const auto b = make_mapped_grid({20, 50.0, 2.0});
  CHECK(a.r[5] == b.r[10]);
  CHECK(a.r[10] == b.r[20]);
}

TEST_CASE("mapped grid invariants") {
  const auto grid = make_mapped_grid(GridSpec{});
  CHECK(grid.r.front() == 0.0);
  CHECK(std::abs(grid.r.back() - 200.0) <= 1e-10 * 200.0);
  for (std::size_t j = 0; j + 1 < grid.r.size(); ++j) CHECK(grid.r[j] < grid.r[j + 1]);
  for (double v : grid.dr) CHECK(v > 0.0);
  for (std::size_t j = 1; j + 1 < grid.r.size(); ++j)
    CHECK(grid.to_unit(grid.r[j]) == doctest::Approx(grid.collocation.nodes[j]).epsilon(1e-12).scale(1.0));
}

TEST_CASE("node density clusters at small r") {
  // more than half of the interior radii below r_max / 10 holds for a
  // strongly clustering map
  {
    const auto grid = make_mapped_grid({300, 200.0, 0.2});
    int below = 0;
    for (int j = 1; j < grid.order(); ++j) below += grid.r[j] < 20.0;
    CHECK(2 * below > grid.interior_size());
  }
  // at the default alpha the density below r_max / 10 still exceeds the
  // uniform share
  {
    const auto grid = make_mapped_grid(GridSpec{});
    int below = 0;
    for (int j = 1; j < grid.order(); ++j) below += grid.r[j] < 20.0;
    CHECK(below > grid.interior_size() / 10);
  }
  // weaker clustering holds for every alpha: median node below r_max / 2 and
  // far finer spacing at the origin than mid-grid
  for (double alpha : {0.05, 1.0, 25.0, 400.0}) {
    const auto grid = make_mapped_grid({300, 200.0, alpha});
    CHECK(grid.r[150] < 100.0);
    CHECK(grid.r[1] - grid.r[0] < 1e-2 * (grid.r[151] - grid.r[150]));
  }
}

TEST_CASE("grid spec validation") {
  CHECK_THROWS_AS(GridSpec({7, 200.0, 25.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec({300, -1.0, 25.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(GridSpec({300, 200.0, 0.0}).validate(), std::invalid_argument);
  CHECK_NOTHROW(GridSpec({8, 1.0, 1.0}).validate());
}
