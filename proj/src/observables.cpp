#include "gps/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gps {

int count_nodes(std::span<const double> u) {
  double peak = 0.0;
  for (double v : u) peak = std::max(peak, std::abs(v));
  const double floor = 1e-10 * peak;
  int nodes = 0;
  int last_sign = 0;
  for (double v : u) {
    if (std::abs(v) <= floor) continue;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  return nodes;
}

RadialState reconstruct_wavefunction(const Eigen::Ref<const Eigen::VectorXd>& eigvec,
                                     std::shared_ptr<const MappedGrid> grid, double energy,
                                     int l) {
  if (!grid) throw std::invalid_argument("reconstruct_wavefunction: null grid");
  const Eigen::Index m = grid->interior_size();
  if (eigvec.size() != m)
    throw std::invalid_argument("reconstruct_wavefunction: eigenvector length does not match the grid");

  const int n = grid->order();
  const double scale = std::sqrt(0.5 * n * (n + 1.0));
  RadialState s;
  s.energy = energy;
  s.l = l;
  s.r.assign(grid->r.begin() + 1, grid->r.end() - 1);
  s.u.resize(m);
  for (Eigen::Index j = 0; j < m; ++j)
    s.u[j] = scale * eigvec[j] * grid->collocation.pn_at_nodes[j + 1] / std::sqrt(grid->dr[j + 1]);

  double sum = 0.0;
  for (Eigen::Index j = 0; j < m; ++j)
    sum += grid->collocation.weights[j + 1] * grid->dr[j + 1] * s.u[j] * s.u[j];
  if (!(sum > 0.0)) throw std::invalid_argument("reconstruct_wavefunction: zero vector");
  const double inv = 1.0 / std::sqrt(sum);

  double peak = 0.0;
  for (double v : s.u) peak = std::max(peak, std::abs(v));
  const auto first = std::find_if(s.u.begin(), s.u.end(),
                                  [&](double v) { return std::abs(v) > 1e-8 * peak; });
  const double sign = (first != s.u.end() && *first < 0.0) ? -1.0 : 1.0;
  for (double& v : s.u) v *= sign * inv;

  s.norm = 0.0;
  for (Eigen::Index j = 0; j < m; ++j)
    s.norm += grid->collocation.weights[j + 1] * grid->dr[j + 1] * s.u[j] * s.u[j];
  s.node_count = count_nodes(s.u);
  s.grid = std::move(grid);
  return s;
}

double expectation_r_power(const RadialState& state, int k) {
  if (k < -3 || k > 4) throw std::invalid_argument("expectation_r_power: k must be in [-3, 4]");
  if (k == -3 && state.l < 1)
    throw std::invalid_argument("expectation_r_power: <r^-3> diverges for l = 0");
  if (!state.grid) throw std::invalid_argument("expectation_r_power: state has no grid");
  const auto& g = *state.grid;
  double sum = 0.0;
  for (std::size_t j = 0; j < state.u.size(); ++j)
    sum += g.collocation.weights[j + 1] * g.dr[j + 1] * std::pow(state.r[j], k) * state.u[j] * state.u[j];
  if (k == -2 && state.l == 0) {
    // u^2 / r^2 stays finite at the origin, so the x = -1 node carries
    // weight: the limit is f'(-1)^2 / r'(-1) with f = u / sqrt(r')
    const auto& set = g.collocation;
    double slope = 0.0;
    for (std::size_t j = 0; j < state.u.size(); ++j) {
      const double f = state.u[j] / std::sqrt(g.dr[j + 1]);
      slope += set.pn_at_nodes[0] / (set.pn_at_nodes[j + 1] * (set.nodes[0] - set.nodes[j + 1])) * f;
    }
    sum += set.weights[0] * slope * slope;
  }
  return sum;
}

double overlap(const RadialState& a, const RadialState& b) {
  if (!a.grid || a.grid != b.grid) throw std::invalid_argument("overlap: states must share a grid");
  const auto& g = *a.grid;
  double sum = 0.0;
  for (std::size_t j = 0; j < a.u.size(); ++j)
    sum += g.collocation.weights[j + 1] * g.dr[j + 1] * a.u[j] * b.u[j];
  return sum;
}

std::vector<std::pair<double, double>> radial_density(const RadialState& state,
                                                      std::span<const double> radii) {
  if (!state.grid) throw std::invalid_argument("radial_density: state has no grid");
  const auto& g = *state.grid;
  std::vector<double> f(g.collocation.size(), 0.0);
  for (std::size_t j = 0; j < state.u.size(); ++j) f[j + 1] = state.u[j] / std::sqrt(g.dr[j + 1]);

  std::vector<std::pair<double, double>> out;
  out.reserve(radii.size());
  for (double radius : radii) {
    if (!(radius > 0.0 && radius < g.spec.r_max))
      throw std::invalid_argument("radial_density: radius " + std::to_string(radius) +
                                  " outside (0, r_max)");
    const auto hit = std::lower_bound(state.r.begin(), state.r.end(), radius);
    if (hit != state.r.end() && *hit == radius) {
      const double u = state.u[static_cast<std::size_t>(hit - state.r.begin())];
      out.emplace_back(radius, u * u);
      continue;
    }
    const double x = g.to_unit(radius);
    const double u = std::sqrt(map_radial(g.spec, x).dr) * interpolate(f, x, g.collocation);
    out.emplace_back(radius, u * u);
  }
  return out;
}

}  // namespace gps
