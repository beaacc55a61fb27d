#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "gps/analysis.hpp"
#include "gps/discretization.hpp"
#include "gps/eigensolver.hpp"
#include "gps/observables.hpp"

using namespace gps;

namespace {

SpectrumResult solve(const PotentialSpec& v, int l, int n, GridSpec grid = {}) {
  SpectrumRequest req;
  req.potential = v;
  req.l = l;
  req.n_states = n;
  req.grid = grid;
  req.convention = Convention::half();
  return solve_spectrum(req, true);
}

}  // namespace

TEST_CASE("hydrogen 1s wavefunction") {
  const auto res = solve(Coulomb{1.0}, 0, 1);
  const auto& s = res.states[0];
  double worst = 0.0;
  for (std::size_t j = 0; j < s.r.size(); ++j)
    if (s.r[j] <= 20.0) worst = std::max(worst, std::abs(s.u[j] - 2.0 * s.r[j] * std::exp(-s.r[j])));
  CHECK(worst <= 1e-6);
  CHECK(std::abs(s.norm - 1.0) <= 1e-8);
  CHECK(s.node_count == 0);
  for (double v : s.u) CHECK(std::isfinite(v));
}

TEST_CASE("normalisation identity") {
  auto grid = cached_grid(GridSpec{});
  const auto h = assemble_hamiltonian(grid, Coulomb{1.0}, 0, Convention::half());
  const auto d = eigh(h.matrix);
  const int n = grid->order();
  for (int k : {0, 3, 10}) {
    const Eigen::VectorXd a = d.vectors.col(k);
    double lhs = 0.0, rhs = 0.0;
    for (int j = 1; j < n; ++j) {
      lhs += 2.0 / (n * (n + 1.0)) * a[j - 1] * a[j - 1];
      const double psi = a[j - 1] * grid->collocation.pn_at_nodes[j] / std::sqrt(grid->dr[j]);
      rhs += grid->collocation.weights[j] * grid->dr[j] * psi * psi;
    }
    CHECK(std::abs(lhs - rhs) <= 1e-12 * lhs);
  }
}

TEST_CASE("node counts") {
  CHECK(solve(Coulomb{1.0}, 0, 3).states[2].node_count == 2);
  for (const PotentialSpec& v : std::vector<PotentialSpec>{Coulomb{1.0}, Hulthen{1.0, 0.05}}) {
    for (int l : {0, 2}) {
      const auto res = solve(v, l, 10);
      for (int k = 0; k < 10; ++k) {
        CAPTURE(k);
        CHECK(res.states[k].node_count == k);
      }
    }
  }
  const std::vector<double> u{0.0, 1.0, 1e-14, -1.0, -2.0, 3.0};
  CHECK(count_nodes(u) == 2);
}

TEST_CASE("orthogonality within a channel") {
  for (int l : {0, 1}) {
    const auto res = solve(Yukawa{1.0, 0.05}, l, 8);
    for (int a = 0; a < 8; ++a)
      for (int b = 0; b < 8; ++b) {
        const double o = overlap(res.states[a], res.states[b]);
        if (a == b) CHECK(std::abs(o - 1.0) <= 1e-8);
        else CHECK(std::abs(o) <= 1e-8);
      }
  }
  const auto other = solve(Coulomb{1.0}, 0, 1, {200, 100.0, 10.0});
  const auto res = solve(Coulomb{1.0}, 0, 1);
  CHECK_THROWS_AS(overlap(res.states[0], other.states[0]), std::invalid_argument);
}

TEST_CASE("expectation values") {
  const auto h = solve(Coulomb{1.0}, 0, 1).states[0];
  CHECK(std::abs(expectation_r_power(h, 1) - 1.5) <= 1e-7);
  CHECK(std::abs(expectation_r_power(h, -1) - 1.0) <= 1e-7);
  CHECK(std::abs(expectation_r_power(h, 0) - 1.0) <= 1e-8);
  CHECK(std::abs(expectation_r_power(h, 2) - 3.0) <= 1e-7);
  CHECK(std::abs(expectation_r_power(h, -2) - 2.0) <= 1e-6);
  const auto ho = solve(Harmonic{0.5}, 0, 1).states[0];
  CHECK(std::abs(expectation_r_power(ho, 2) - 1.5) <= 1e-7);
  const auto p = solve(Coulomb{1.0}, 1, 1).states[0];
  // <r^-3> for 2p is 1/24
  CHECK(std::abs(expectation_r_power(p, -3) - 1.0 / 24.0) <= 1e-7);
  CHECK_THROWS_AS(expectation_r_power(h, -3), std::invalid_argument);
  CHECK_THROWS_AS(expectation_r_power(h, 5), std::invalid_argument);
}

TEST_CASE("sign convention is deterministic") {
  const auto a = solve(Hulthen{1.0, 0.1}, 1, 4);
  const auto b = solve(Hulthen{1.0, 0.1}, 1, 4);
  for (int k = 0; k < 4; ++k) {
    CHECK(a.states[k].u == b.states[k].u);
    const auto first = std::find_if(a.states[k].u.begin(), a.states[k].u.end(),
                                    [](double v) { return std::abs(v) > 1e-6; });
    CHECK(*first > 0.0);
  }
}

TEST_CASE("radial density") {
  const auto s = solve(Coulomb{1.0}, 0, 1).states[0];
  // on the nodes the density is the sample squared
  const std::vector<double> nodes(s.r.begin(), s.r.end());
  const auto at_nodes = radial_density(s, nodes);
  for (std::size_t j = 0; j < nodes.size(); ++j) CHECK(at_nodes[j].second == s.u[j] * s.u[j]);

  std::vector<double> fine;
  for (int i = 1; i < 40000; ++i) fine.push_back(i * 0.001);
  const auto rho = radial_density(s, fine);
  double peak_r = 0.0, peak = 0.0, integral = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    CHECK(rho[i].second >= 0.0);
    if (rho[i].second > peak) {
      peak = rho[i].second;
      peak_r = rho[i].first;
    }
    const double exact = 4.0 * fine[i] * fine[i] * std::exp(-2.0 * fine[i]);
    if (i % 997 == 0) CHECK(std::abs(rho[i].second - exact) <= 1e-6);
  }
  CHECK(std::abs(peak_r - 1.0) <= 1e-3);
  // trapezoid over (0, 40); the density is negligible beyond
  for (std::size_t i = 0; i + 1 < rho.size(); ++i) integral += 0.5 * 0.001 * (rho[i].second + rho[i + 1].second);
  integral += 0.5 * 0.001 * rho[0].second;
  CHECK(std::abs(integral - 1.0) <= 1e-6);

  const std::vector<double> bad{0.0};
  CHECK_THROWS_AS(radial_density(s, bad), std::invalid_argument);
  const std::vector<double> beyond{200.0};
  CHECK_THROWS_AS(radial_density(s, beyond), std::invalid_argument);
}
