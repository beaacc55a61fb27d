#include "gps/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/airy.hpp>

namespace gps {

double airy_zero(int k) {
  if (k < 1) throw std::invalid_argument("airy_zero: index must be >= 1");
  const double t = 3.0 * std::numbers::pi * (4.0 * k - 1.0) / 8.0;
  const double t2 = 1.0 / (t * t);
  double x = -std::pow(t, 2.0 / 3.0) * (1.0 + t2 * (5.0 / 48.0 - t2 * 5.0 / 36.0));
  for (int it = 0; it < 50; ++it) {
    const double step = boost::math::airy_ai(x) / boost::math::airy_ai_prime(x);
    x -= step;
    if (std::abs(step) <= 1e-15 * std::abs(x)) return x;
  }
  throw std::runtime_error("airy_zero: Newton iteration did not converge for k = " +
                           std::to_string(k));
}

double hermite_half_norm(int n) {
  if (n < 0) throw std::invalid_argument("hermite_half_norm: negative index");
  double v = 0.5 * std::sqrt(std::numbers::pi);
  for (int k = 1; k <= n; ++k) v *= 2.0 * k;
  return v;
}

double hermite_integral(int n, double g) {
  if (n < 0 || n > 20) throw std::invalid_argument("hermite_integral: n must be in [0, 20]");
  if (!(g > 0.0) || !std::isfinite(g)) throw std::invalid_argument("hermite_integral: g must be > 0");

  auto integrand = [n, g](double x) {
    double h_prev = 1.0;
    double h = 2.0 * x;
    if (n == 0) h = 1.0;
    for (int k = 1; k < n; ++k) {
      const double next = 2.0 * x * h - 2.0 * k * h_prev;
      h_prev = h;
      h = next;
    }
    const double gx2 = g * x * x;
    return std::exp(-x * x) * h * h * (1.0 - gx2) / (1.0 + gx2);
  };

  // beyond sqrt(2n+1) + 12 the Gaussian tail is below 1e-60 of the norm
  const double upper = std::sqrt(2.0 * n + 1.0) + 12.0;
  std::vector<double> cuts{0.0};
  // the rational factor switches sign at x = g^{-1/2}
  const double knee = 1.0 / std::sqrt(g);
  if (knee < upper) cuts.push_back(knee);
  cuts.push_back(upper);

  using Rule = boost::math::quadrature::gauss_kronrod<double, 61>;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += Rule::integrate(integrand, cuts[i], cuts[i + 1], 20, 1e-14);
  return total;
}

}  // namespace gps
