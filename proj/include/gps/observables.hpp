#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gps/mapping.hpp"

namespace gps {

/// Radial function u(r) = r R(r) sampled at the interior nodes.
struct RadialState {
  double energy = 0.0;
  int l = 0;
  int node_count = 0;
  std::vector<double> r;
  std::vector<double> u;
  double norm = 0.0;  // sum_j w_j r'_j u_j^2 after normalisation
  std::shared_ptr<const MappedGrid> grid;
};

/// Inverts A_j = sqrt(r'_j) u(r_j) / P_N(x_j) for a unit eigenvector A,
/// normalises to sum_j w_j r'_j u_j^2 = 1 and makes the first significant
/// lobe positive.
RadialState reconstruct_wavefunction(const Eigen::Ref<const Eigen::VectorXd>& eigvec,
                                     std::shared_ptr<const MappedGrid> grid, double energy,
                                     int l);

/// Strict sign changes of u, ignoring samples below 1e-10 max|u|.
int count_nodes(std::span<const double> u);

/// <r^k> by the mapped LGL quadrature, k in [-3, 4]; k = -3 requires l >= 1.
double expectation_r_power(const RadialState& state, int k);

/// Quadrature overlap sum_j w_j r'_j u_a u_b; both states must share a grid.
double overlap(const RadialState& a, const RadialState& b);

/// (r, u(r)^2) at arbitrary radii in (0, r_max), interpolating
/// f = u / sqrt(r') in the cardinal basis (f vanishes at both ends).
std::vector<std::pair<double, double>> radial_density(const RadialState& state,
                                                      std::span<const double> radii);

}  // namespace gps
