#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace gps {

struct LegendreValue {
  double value = 0.0;       // P_n(x)
  double derivative = 0.0;  // P'_n(x)
};

/// P_n(x) and P'_n(x) by the three-term recurrence. Throws on non-finite x.
LegendreValue legendre_eval(int n, double x);

/// Second derivative P''_n(x) from the Legendre differential equation.
/// Only valid away from x = +-1.
double legendre_second_derivative(int n, double x, const LegendreValue& v);

/// Legendre-Gauss-Lobatto collocation set of order N: the N+1 nodes
/// -1 = x_0 < x_1 < ... < x_N = 1 where the interior nodes are the roots of
/// P'_N, together with the quadrature weights and P_N at every node.
struct CollocationSet {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> pn_at_nodes;

  std::size_t size() const { return nodes.size(); }
};

/// Ascending LGL nodes for order N >= 2. Interior nodes come from Newton
/// iteration on P'_N seeded at cos(pi j / N); the set is exactly symmetric.
std::vector<double> lgl_nodes(int order);

/// w_j = 2 / (N (N+1) P_N(x_j)^2) for nodes produced by lgl_nodes.
std::vector<double> lgl_weights(std::span<const double> nodes);

CollocationSet make_collocation(int order);

/// Cardinal (Lagrange) function g_j(x) of the LGL set; g_j(x_k) = delta_jk.
double cardinal_eval(std::size_t j, double x, const CollocationSet& set);

/// Interpolant sum_j f_j g_j(x) evaluated in O(N).
double interpolate(std::span<const double> samples, double x, const CollocationSet& set);

/// Exact first-derivative collocation matrix on all N+1 nodes.
Eigen::MatrixXd derivative_matrix(const CollocationSet& set);

}  // namespace gps
