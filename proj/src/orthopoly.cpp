#include "gps/orthopoly.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gps {

LegendreValue legendre_eval(int n, double x) {
  if (n < 0) throw std::invalid_argument("legendre_eval: negative degree");
  if (!std::isfinite(x)) throw std::invalid_argument("legendre_eval: non-finite abscissa");
  if (n == 0) return {1.0, 0.0};

  double p_prev = 1.0;
  double p = x;
  for (int k = 1; k < n; ++k) {
    const double p_next = ((2.0 * k + 1.0) * x * p - k * p_prev) / (k + 1.0);
    p_prev = p;
    p = p_next;
  }

  double dp = 0.0;
  if (x == 1.0 || x == -1.0) {
    // P'_n(+-1) = (+-1)^(n-1) n(n+1)/2
    dp = 0.5 * n * (n + 1.0);
    if (x < 0.0 && n % 2 == 0) dp = -dp;
  } else {
    dp = n * (x * p - p_prev) / (x * x - 1.0);
  }
  return {p, dp};
}

double legendre_second_derivative(int n, double x, const LegendreValue& v) {
  return (2.0 * x * v.derivative - n * (n + 1.0) * v.value) / (1.0 - x * x);
}

namespace {

double newton_interior_node(int order, double guess) {
  constexpr int kMaxIterations = 100;
  double x = guess;
  for (int it = 0; it < kMaxIterations; ++it) {
    const auto v = legendre_eval(order, x);
    const double d2 = legendre_second_derivative(order, x, v);
    const double step = v.derivative / d2;
    double next = x - step;
    // keep the iterate strictly inside (-1, 1)
    if (next <= -1.0) next = 0.5 * (x - 1.0);
    if (next >= 1.0) next = 0.5 * (x + 1.0);
    const bool done = std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(next);
    x = next;
    if (done) return x;
  }
  throw std::runtime_error("lgl_nodes: Newton iteration did not converge for order " +
                           std::to_string(order) + " near x = " + std::to_string(guess));
}

}  // namespace

std::vector<double> lgl_nodes(int order) {
  if (order < 2) throw std::invalid_argument("lgl_nodes: order must be >= 2");
  std::vector<double> x(order + 1, 0.0);
  x.front() = -1.0;
  x.back() = 1.0;
  for (int j = 1; 2 * j < order; ++j) {
    const double guess = -std::cos(std::numbers::pi * j / order);
    const double root = newton_interior_node(order, guess);
    x[j] = root;
    x[order - j] = -root;
  }
  // an even order has x_{N/2} = 0, already in place
  return x;
}

std::vector<double> lgl_weights(std::span<const double> nodes) {
  if (nodes.size() < 3) throw std::invalid_argument("lgl_weights: need at least three nodes");
  const int order = static_cast<int>(nodes.size()) - 1;
  const double scale = 2.0 / (order * (order + 1.0));
  std::vector<double> w(nodes.size());
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double p = legendre_eval(order, nodes[j]).value;
    w[j] = scale / (p * p);
  }
  return w;
}

CollocationSet make_collocation(int order) {
  CollocationSet set;
  set.order = order;
  set.nodes = lgl_nodes(order);
  set.weights = lgl_weights(set.nodes);
  set.pn_at_nodes.resize(set.nodes.size());
  for (std::size_t j = 0; j < set.nodes.size(); ++j)
    set.pn_at_nodes[j] = legendre_eval(order, set.nodes[j]).value;
  return set;
}

double cardinal_eval(std::size_t j, double x, const CollocationSet& set) {
  if (j >= set.size()) throw std::out_of_range("cardinal_eval: node index out of range");
  for (std::size_t k = 0; k < set.size(); ++k)
    if (x == set.nodes[k]) return k == j ? 1.0 : 0.0;
  const int n = set.order;
  const double dp = legendre_eval(n, x).derivative;
  return -(1.0 - x * x) * dp / (n * (n + 1.0) * set.pn_at_nodes[j] * (x - set.nodes[j]));
}

double interpolate(std::span<const double> samples, double x, const CollocationSet& set) {
  if (samples.size() != set.size()) throw std::invalid_argument("interpolate: sample count mismatch");
  double sum = 0.0;
  for (std::size_t k = 0; k < set.size(); ++k) {
    const double dx = x - set.nodes[k];
    if (dx == 0.0) return samples[k];
    sum += samples[k] / (set.pn_at_nodes[k] * dx);
  }
  const int n = set.order;
  const double dp = legendre_eval(n, x).derivative;
  return -(1.0 - x * x) * dp / (n * (n + 1.0)) * sum;
}

Eigen::MatrixXd derivative_matrix(const CollocationSet& set) {
  const auto size = static_cast<Eigen::Index>(set.size());
  const int n = set.order;
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index k = 0; k < size; ++k) {
      if (j == k) continue;
      d(j, k) = set.pn_at_nodes[j] / (set.pn_at_nodes[k] * (set.nodes[j] - set.nodes[k]));
    }
  }
  d(0, 0) = -0.25 * n * (n + 1.0);
  d(size - 1, size - 1) = 0.25 * n * (n + 1.0);
  return d;
}

}  // namespace gps
