#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "gps/potentials.hpp"
#include "gps/special.hpp"

namespace gps {

namespace {

constexpr double kEuler = 0.5772156649015329;
const double kSqrtPi = std::sqrt(std::numbers::pi);

[[noreturn]] void unsupported(const PotentialSpec& spec, const std::string& why) {
  throw std::invalid_argument("reference_series: " + family_name(spec) + ": " + why);
}

double charged_lambda(const PotentialSpec& spec) {
  if (const auto* p = std::get_if<ChargedOscillator>(&spec)) return p->lambda;
  if (const auto* p = std::get_if<SpikedOscillator>(&spec); p && p->alpha == 1.0) return p->lambda;
  unsupported(spec, "regime requires the charged oscillator");
}

const SpikedOscillator& spiked(const PotentialSpec& spec) {
  const auto* p = std::get_if<SpikedOscillator>(&spec);
  if (!p) unsupported(spec, "regime requires the spiked oscillator");
  return *p;
}

std::vector<double> charged_coulomb_terms(double lambda) {
  if (!(lambda < 0.0)) throw std::invalid_argument("reference_series: Coulomb regime needs lambda < 0");
  static constexpr double coeff[] = {-0.25, 12.0, -1032.0, 348864.0, -211519200.0, 188054861568.0};
  std::vector<double> terms;
  const double inv4 = 1.0 / std::pow(lambda, 4);
  double factor = lambda * lambda;
  for (double c : coeff) {
    terms.push_back(c * factor);
    factor *= inv4;
  }
  return terms;
}

std::vector<double> charged_strong_terms(double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("reference_series: strong regime needs lambda > 0");
  const double mu = std::cbrt(2.0 / lambda);
  const double mu2 = mu * mu;
  return {3.0 / mu2,
          std::sqrt(3.0),
          7.0 * mu2 / 36.0,
          37.0 * mu2 * mu2 / (432.0 * std::sqrt(3.0)),
          2573.0 * std::pow(mu, 6) / 139968.0,
          168233.0 * std::pow(mu, 8) / (2239488.0 * std::sqrt(27.0))};
}

std::vector<double> spiked_small_terms(const SpikedOscillator& p) {
  const double lambda = p.lambda, alpha = p.alpha;
  if (!(lambda > 0.0)) throw std::invalid_argument("reference_series: small-coupling regime needs lambda > 0");
  if (alpha == 3.0)
    return {3.0, -4.0 / kSqrtPi * lambda * std::log(lambda), -10.0 * kEuler / kSqrtPi * lambda};
  if (!(alpha > 2.5))
    throw std::invalid_argument("reference_series: small-coupling regime needs alpha > 5/2");
  const double nu = 1.0 / (alpha - 2.0);
  const double K = 4.0 * std::pow(nu, 2.0 * nu) * boost::math::tgamma(1.0 - nu) /
                   (kSqrtPi * boost::math::tgamma(1.0 + nu));
  std::vector<double> terms{3.0, K * std::pow(lambda, nu)};
  if (alpha < 3.0) {
    terms.push_back(2.0 * boost::math::tgamma((3.0 - alpha) / 2.0) / kSqrtPi * lambda);
  } else if (alpha < 4.0) {
    terms.push_back(-4.0 * nu * boost::math::tgamma((3.0 - 1.0 / nu) / 2.0) /
                    ((1.0 - nu) * kSqrtPi) * lambda);
  }
  return terms;
}

std::vector<double> spiked_large_terms(const SpikedOscillator& p) {
  if (p.alpha != 2.5) throw std::invalid_argument("reference_series: large-coupling regime needs alpha = 5/2");
  if (!(p.lambda > 0.0)) throw std::invalid_argument("reference_series: large-coupling regime needs lambda > 0");
  const double w = std::pow(4.0 / (5.0 * p.lambda), 4.0 / 9.0);
  return {1.8 * std::pow(1.25 * p.lambda, 4.0 / 9.0), std::sqrt(4.5), 77.0 / 288.0 * w,
          -1967.0 / 27648.0 * std::sqrt(2.0 / 9.0) * w * w};
}

std::vector<double> spiked_variational_terms(const SpikedOscillator& p) {
  if (p.alpha != 2.5) throw std::invalid_argument("reference_series: variational regime needs alpha = 5/2");
  if (!(p.lambda > 0.0)) throw std::invalid_argument("reference_series: variational regime needs lambda > 0");
  return {1.8 * std::pow(5.0 / 9.0, 4.0 / 9.0) * std::pow(p.lambda, 4.0 / 9.0), std::sqrt(4.5)};
}

double hulthen_closed_form(const Hulthen& p, SeriesState state) {
  const int n = state.n, l = state.l;
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("reference_series: Hulthen state needs 0 <= l < n");
  if (!(p.Z > 0.0)) throw std::invalid_argument("reference_series: Hulthen form needs Z > 0");
  // E(Z, delta) = Z^2 E(1, delta / Z)
  const double delta = p.delta / p.Z;
  const double e = std::exp(1.0);
  const double B = ((e - 1.0) * (e - 1.0) / e - 1.0) / (e - 1.0);
  const double ll = l * (l + 1.0);
  const double nn = static_cast<double>(n) * n;
  const double lead = 1.0 / n - n * delta / 2.0;
  const double value = -0.5 * lead * lead +
                       delta * delta / 8.0 * ll * B * (4.0 / (nn * delta) + 2.0 - ll * B / nn);
  return p.Z * p.Z * value;
}

std::vector<double> npo_small_terms(const NonPolynomial& p, SeriesState state) {
  const int n = state.n;
  if (n < 0 || n > 20) throw std::invalid_argument("reference_series: NPO state needs 0 <= n <= 20");
  const double lp = p.lambda / p.g;
  return {2.0 * n + 1.0,
          0.5 * lp - lp * hermite_integral(n, p.g) / (2.0 * hermite_half_norm(n))};
}

std::vector<double> npo_large_terms(const NonPolynomial& p, SeriesState state) {
  const double lp = p.lambda / p.g;
  const double g = p.g;
  const double s = std::pow(g, -0.5);
  switch (state.n) {
    case 0: return {1.0, lp, -lp * kSqrtPi * s, 2.5 * lp / g};
    case 1: return {3.0, lp, -1.5 * lp / g, 2.0 * kSqrtPi * lp * s / g};
    case 2: return {5.0, lp, -0.5 * kSqrtPi * lp * s, 2.25 * lp / g};
    case 3: return {7.0, lp, -1.5 * lp / g, 1.5 * kSqrtPi * lp * s / g};
    default: throw std::invalid_argument("reference_series: large-g form covers n = 0..3");
  }
}

double truncate(const std::vector<double>& terms, int order) {
  if (order < 1 || order > static_cast<int>(terms.size()))
    throw std::invalid_argument("reference_series: order must be in [1, " +
                                std::to_string(terms.size()) + "]");
  double sum = 0.0;
  for (int k = 0; k < order; ++k) sum += terms[k];
  return sum;
}

}  // namespace

double reference_series(const PotentialSpec& spec, SeriesRegime regime, int order, SeriesState state) {
  switch (regime) {
    case SeriesRegime::ChargedCoulomb:
      return truncate(charged_coulomb_terms(charged_lambda(spec)), order);
    case SeriesRegime::ChargedStrong:
      return truncate(charged_strong_terms(charged_lambda(spec)), order);
    case SeriesRegime::SpikedSmallCoupling:
      return truncate(spiked_small_terms(spiked(spec)), order);
    case SeriesRegime::SpikedLargeCoupling:
      return truncate(spiked_large_terms(spiked(spec)), order);
    case SeriesRegime::SpikedStrongVariational:
      return truncate(spiked_variational_terms(spiked(spec)), order);
    case SeriesRegime::HulthenEckerWeizel: {
      const auto* p = std::get_if<Hulthen>(&spec);
      if (!p) unsupported(spec, "regime requires the Hulthen potential");
      if (order != 1) throw std::invalid_argument("reference_series: closed form has order 1");
      return hulthen_closed_form(*p, state);
    }
    case SeriesRegime::NpoSmallCoupling: {
      const auto* p = std::get_if<NonPolynomial>(&spec);
      if (!p) unsupported(spec, "regime requires the non-polynomial oscillator");
      return truncate(npo_small_terms(*p, state), order);
    }
    case SeriesRegime::NpoLargeG: {
      const auto* p = std::get_if<NonPolynomial>(&spec);
      if (!p) unsupported(spec, "regime requires the non-polynomial oscillator");
      return truncate(npo_large_terms(*p, state), order);
    }
  }
  throw std::invalid_argument("reference_series: unknown regime");
}

}  // namespace gps
