#include "gps/potentials.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "gps/special.hpp"

namespace gps {

namespace {

template <class T>
struct Param {
  std::string_view name;
  double T::*member;
};

template <class T>
struct Family;

template <>
struct Family<Coulomb> {
  static constexpr std::string_view name = "coulomb";
  static constexpr std::array params{Param<Coulomb>{"Z", &Coulomb::Z}};
};
template <>
struct Family<Harmonic> {
  static constexpr std::string_view name = "harmonic";
  static constexpr std::array params{Param<Harmonic>{"k", &Harmonic::k}};
};
template <>
struct Family<PowerLaw> {
  static constexpr std::string_view name = "power_law";
  static constexpr std::array params{Param<PowerLaw>{"A", &PowerLaw::A},
                                     Param<PowerLaw>{"nu", &PowerLaw::nu}};
};
template <>
struct Family<Logarithmic> {
  static constexpr std::string_view name = "logarithmic";
  static constexpr std::array params{Param<Logarithmic>{"A", &Logarithmic::A}};
};
template <>
struct Family<SpikedOscillator> {
  static constexpr std::string_view name = "sho";
  static constexpr std::array params{Param<SpikedOscillator>{"lambda", &SpikedOscillator::lambda},
                                     Param<SpikedOscillator>{"alpha", &SpikedOscillator::alpha}};
};
template <>
struct Family<ChargedOscillator> {
  static constexpr std::string_view name = "charged_oscillator";
  static constexpr std::array params{
      Param<ChargedOscillator>{"lambda", &ChargedOscillator::lambda}};
};
template <>
struct Family<SexticSingular> {
  static constexpr std::string_view name = "sextic";
  static constexpr std::array params{Param<SexticSingular>{"a", &SexticSingular::a},
                                     Param<SexticSingular>{"b", &SexticSingular::b},
                                     Param<SexticSingular>{"c", &SexticSingular::c}};
};
template <>
struct Family<GeneralizedSpiked> {
  static constexpr std::string_view name = "gsho";
  static constexpr std::array params{Param<GeneralizedSpiked>{"A", &GeneralizedSpiked::A},
                                     Param<GeneralizedSpiked>{"lambda", &GeneralizedSpiked::lambda},
                                     Param<GeneralizedSpiked>{"alpha", &GeneralizedSpiked::alpha}};
};
template <>
struct Family<Hulthen> {
  static constexpr std::string_view name = "hulthen";
  static constexpr std::array params{Param<Hulthen>{"Z", &Hulthen::Z},
                                     Param<Hulthen>{"delta", &Hulthen::delta}};
};
template <>
struct Family<Yukawa> {
  static constexpr std::string_view name = "yukawa";
  static constexpr std::array params{Param<Yukawa>{"Z", &Yukawa::Z},
                                     Param<Yukawa>{"lambda", &Yukawa::lambda}};
};
template <>
struct Family<NonPolynomial> {
  static constexpr std::string_view name = "npo";
  static constexpr std::array params{Param<NonPolynomial>{"g", &NonPolynomial::g},
                                     Param<NonPolynomial>{"lambda", &NonPolynomial::lambda}};
};

[[noreturn]] void reject(const std::string& family, const std::string& what) {
  throw std::invalid_argument(family + ": " + what);
}

void require(bool ok, const std::string& family, const std::string& what) {
  if (!ok) reject(family, what);
}

template <class T>
void check_finite(const T& p) {
  for (const auto& param : Family<T>::params)
    require(std::isfinite(p.*(param.member)), std::string(Family<T>::name),
            "parameter " + std::string(param.name) + " must be finite");
}

template <class T>
const Param<T>* find_param(std::string_view name) {
  for (const auto& param : Family<T>::params)
    if (param.name == name) return &param;
  return nullptr;
}

// harmonic-oscillator energy in the p^2 + r^2 convention with effective
// angular momentum L (possibly non-integer)
double oscillator_level(int n_r, double L) { return 4.0 * n_r + 2.0 * L + 3.0; }

// Closed-form Coulomb level for -c d^2 - Z/r.
std::optional<double> coulomb_level(double Z, int l, int n_r, double c) {
  if (Z <= 0.0) return std::nullopt;
  const double n = n_r + l + 1.0;
  return -Z * Z / (4.0 * c * n * n);
}

std::optional<double> harmonic_level(double k, int l, int n_r, double c) {
  if (k <= 0.0) return std::nullopt;
  return std::sqrt(k * c) * oscillator_level(n_r, l);
}

// Elementary (quasi-exact) solutions of -u'' + (r^2 + lambda/r + l(l+1)/r^2) u = E u
// of the form r^{l+1} e^{-r^2/2} p(r), p of degree m, E = 2m + 2l + 3.
// The series terminates when the coefficient a_{m+1}(lambda) vanishes.
std::optional<double> charged_oscillator_elementary(double lambda, int l, int n_r) {
  constexpr int kMaxDegree = 60;
  for (int m = 0; m <= kMaxDegree; ++m) {
    const double E = 2.0 * m + 2.0 * l + 3.0;
    // a_k and d a_k / d lambda
    std::vector<double> a(m + 2, 0.0), da(m + 2, 0.0);
    a[0] = 1.0;
    for (int k = 0; k <= m; ++k) {
      const double prev = k > 0 ? a[k - 1] : 0.0;
      const double dprev = k > 0 ? da[k - 1] : 0.0;
      const double denom = (k + 1.0) * (k + 2.0 * l + 2.0);
      const double shift = 2.0 * k + 2.0 * l + 1.0 - E;
      a[k + 1] = (lambda * a[k] + shift * prev) / denom;
      da[k + 1] = (a[k] + lambda * da[k] + shift * dprev) / denom;
    }
    const double residual = a[m + 1];
    bool root = residual == 0.0;
    if (!root && da[m + 1] != 0.0)
      root = std::abs(residual / da[m + 1]) <= 1e-9 * std::max(1.0, std::abs(lambda));
    if (!root) continue;

    // node count = number of positive real roots of p
    int nodes = 0;
    int degree = m;
    while (degree > 0 && a[degree] == 0.0) --degree;
    if (degree > 0) {
      Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(degree, degree);
      for (int i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
      for (int i = 0; i < degree; ++i) companion(i, degree - 1) = -a[i] / a[degree];
      const Eigen::VectorXcd roots = companion.eigenvalues();
      for (const auto& z : roots)
        if (z.real() > 0.0 && std::abs(z.imag()) <= 1e-8 * std::abs(z)) ++nodes;
    }
    if (nodes == n_r) return E;
  }
  return std::nullopt;
}

// Transition-type oscillator r^2 + A/r^2 in the p^2 convention.
std::optional<double> inverse_square_oscillator(double A, int l, int n_r) {
  const double disc = (l + 0.5) * (l + 0.5) + A;
  if (disc < 0.0) return std::nullopt;
  return oscillator_level(n_r, -0.5 + std::sqrt(disc));
}

}  // namespace

std::string family_name(const PotentialSpec& spec) {
  return std::visit([](const auto& p) {
    return std::string(Family<std::decay_t<decltype(p)>>::name);
  }, spec);
}

void validate(const PotentialSpec& spec) {
  std::visit([](const auto& p) { check_finite(p); }, spec);
  const std::string name = family_name(spec);
  if (const auto* p = std::get_if<PowerLaw>(&spec)) {
    require(p->A > 0.0, name, "A must be > 0");
    require(p->nu != 0.0, name, "nu must be non-zero (use the logarithmic family)");
  } else if (const auto* p = std::get_if<Logarithmic>(&spec)) {
    require(p->A > 0.0, name, "A must be > 0");
  } else if (const auto* p = std::get_if<SpikedOscillator>(&spec)) {
    require(p->alpha > 0.0, name, "alpha must be > 0");
  } else if (const auto* p = std::get_if<SexticSingular>(&spec)) {
    require(p->a > 0.0, name, "a must be > 0");
    require(p->c > 0.0, name, "c must be > 0");
  } else if (const auto* p = std::get_if<GeneralizedSpiked>(&spec)) {
    require(p->A >= 0.0, name, "A must be >= 0");
    require(p->alpha > 0.0, name, "alpha must be > 0");
  } else if (const auto* p = std::get_if<Hulthen>(&spec)) {
    require(p->delta > 0.0, name, "delta must be > 0");
  } else if (const auto* p = std::get_if<Yukawa>(&spec)) {
    require(p->lambda >= 0.0, name, "lambda must be >= 0");
  } else if (const auto* p = std::get_if<NonPolynomial>(&spec)) {
    require(p->g > 0.0, name, "g must be > 0");
  }
}

double evaluate(const PotentialSpec& spec, double r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("evaluate: radius must be finite and > 0, got " + std::to_string(r));
  struct Visitor {
    double r;
    double operator()(const Coulomb& p) const { return -p.Z / r; }
    double operator()(const Harmonic& p) const { return p.k * r * r; }
    double operator()(const PowerLaw& p) const {
      return (p.nu > 0.0 ? p.A : -p.A) * std::pow(r, p.nu);
    }
    double operator()(const Logarithmic& p) const { return p.A * std::log(r); }
    double operator()(const SpikedOscillator& p) const {
      return r * r + p.lambda * std::pow(r, -p.alpha);
    }
    double operator()(const ChargedOscillator& p) const { return r * r + p.lambda / r; }
    double operator()(const SexticSingular& p) const {
      const double r2 = r * r;
      const double r4 = r2 * r2;
      return p.a * r2 + p.b / r4 + p.c / (r4 * r2);
    }
    double operator()(const GeneralizedSpiked& p) const {
      return r * r + p.A / (r * r) + p.lambda * std::pow(r, -p.alpha);
    }
    double operator()(const Hulthen& p) const {
      const double x = p.delta * r;
      // x / (e^x - 1) = 1 - x/2 + x^2/12 + O(x^4)
      if (x < 1e-4) return -p.Z / r * (1.0 - 0.5 * x + x * x / 12.0);
      return -p.Z * p.delta / std::expm1(x);
    }
    double operator()(const Yukawa& p) const { return -p.Z * std::exp(-p.lambda * r) / r; }
    double operator()(const NonPolynomial& p) const {
      const double r2 = r * r;
      return r2 + p.lambda * r2 / (1.0 + p.g * r2);
    }
  };
  return std::visit(Visitor{r}, spec);
}

std::string_view to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Regular: return "regular";
    case SingularityClass::Transition: return "transition";
    case SingularityClass::SingularRepulsive: return "singular_repulsive";
    case SingularityClass::SingularAttractive: return "singular_attractive";
  }
  return "unknown";
}

SingularityClass classify(const PotentialSpec& spec) {
  // q(r) = r^2 V(r) at r = 10^-k, k = 2..10
  std::array<double, 9> q{};
  for (int k = 2; k <= 10; ++k) {
    const double r = std::pow(10.0, -k);
    q[k - 2] = r * r * evaluate(spec, r);
  }
  if (std::all_of(q.begin(), q.end(), [](double v) { return v == 0.0; }))
    return SingularityClass::Regular;

  // local power p of q ~ r^p from the three smallest radii
  const double q8 = std::abs(q[6]), q10 = std::abs(q[8]);
  if (q10 == 0.0) return SingularityClass::Regular;
  if (q8 == 0.0) return q[8] > 0.0 ? SingularityClass::SingularRepulsive
                                   : SingularityClass::SingularAttractive;
  const double p = (std::log10(q8) - std::log10(q10)) / 2.0;
  constexpr double kFlat = 1e-3;
  if (p > kFlat) return SingularityClass::Regular;
  if (p >= -kFlat) return SingularityClass::Transition;
  return q[8] > 0.0 ? SingularityClass::SingularRepulsive : SingularityClass::SingularAttractive;
}

std::optional<double> hulthen_exact_s(double Z, double delta, int n) {
  if (n < 1 || !(delta > 0.0)) return std::nullopt;
  const double nn = static_cast<double>(n) * n;
  if (!(nn * delta < 2.0 * Z)) return std::nullopt;
  const double t = 2.0 * Z - nn * delta;
  return -t * t / (8.0 * nn);
}

std::optional<double> exact_reference(const PotentialSpec& spec, int l, int n_r,
                                      const Convention& convention) {
  if (l < 0 || n_r < 0) return std::nullopt;
  convention.validate();
  const double c = convention.kinetic;
  const double root_c = std::sqrt(c);

  struct Visitor {
    int l, n_r;
    double c, root_c;

    std::optional<double> operator()(const Coulomb& p) const { return coulomb_level(p.Z, l, n_r, c); }
    std::optional<double> operator()(const Harmonic& p) const {
      return harmonic_level(p.k, l, n_r, c);
    }
    std::optional<double> operator()(const PowerLaw& p) const {
      if (p.nu == -1.0) return coulomb_level(p.A, l, n_r, c);
      if (p.nu == 2.0) return harmonic_level(p.A, l, n_r, c);
      if (p.nu == 1.0 && l == 0) return std::cbrt(p.A * p.A * c) * -airy_zero(n_r + 1);
      return std::nullopt;
    }
    std::optional<double> operator()(const Logarithmic&) const { return std::nullopt; }
    std::optional<double> operator()(const SpikedOscillator& p) const {
      if (p.lambda == 0.0) return harmonic_level(1.0, l, n_r, c);
      if (p.alpha == 1.0) return (*this)(ChargedOscillator{p.lambda});
      if (p.alpha == 2.0) return (*this)(GeneralizedSpiked{p.lambda, 0.0, 4.0});
      return std::nullopt;
    }
    std::optional<double> operator()(const ChargedOscillator& p) const {
      // r = c^{1/4} s maps onto the p^2 + s^2 + lambda c^{-3/4} / s problem
      const auto e = charged_oscillator_elementary(p.lambda * std::pow(c, -0.75), l, n_r);
      if (!e) return std::nullopt;
      return root_c * *e;
    }
    std::optional<double> operator()(const SexticSingular& p) const {
      if (n_r != 0) return std::nullopt;
      const double a = p.a / c, b = p.b / c, cc = p.c / c;
      const double lhs = (2.0 * std::sqrt(cc) + b) * (2.0 * std::sqrt(cc) + b);
      const double rhs = cc * ((2.0 * l + 1.0) * (2.0 * l + 1.0) + 8.0 * std::sqrt(a * cc));
      if (std::abs(lhs - rhs) > 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)}))
        return std::nullopt;
      return c * std::sqrt(a) * (4.0 + b / std::sqrt(cc));
    }
    std::optional<double> operator()(const GeneralizedSpiked& p) const {
      double A = p.A;
      if (p.lambda != 0.0) {
        if (p.alpha != 2.0) return std::nullopt;
        A += p.lambda;
      }
      const auto e = inverse_square_oscillator(A / c, l, n_r);
      if (!e) return std::nullopt;
      return root_c * *e;
    }
    std::optional<double> operator()(const Hulthen& p) const {
      if (l != 0) return std::nullopt;
      const auto e = hulthen_exact_s(p.Z / (2.0 * c), p.delta, n_r + 1);
      if (!e) return std::nullopt;
      return 2.0 * c * *e;
    }
    std::optional<double> operator()(const Yukawa& p) const {
      if (p.lambda == 0.0) return coulomb_level(p.Z, l, n_r, c);
      return std::nullopt;
    }
    std::optional<double> operator()(const NonPolynomial& p) const {
      if (p.lambda == 0.0) return harmonic_level(1.0, l, n_r, c);
      if (n_r != 0) return std::nullopt;
      // r = c^{1/4} s: coupling g becomes g sqrt(c); the ground state is
      // elementary on the curve lambda = -2g(2gl + 3g + 2)
      const double g = p.g * root_c;
      const double target = -2.0 * g * (2.0 * g * l + 3.0 * g + 2.0);
      if (std::abs(p.lambda - target) > 1e-9 * std::max(1.0, std::abs(p.lambda))) return std::nullopt;
      return root_c * (2.0 * l + 3.0 - 2.0 * g * (2.0 * l + 3.0));
    }
  };

  const auto e = std::visit(Visitor{l, n_r, c, root_c}, spec);
  if (!e) return std::nullopt;
  return convention.report_scale * *e;
}

nlohmann::json to_json(const PotentialSpec& spec) {
  return std::visit([](const auto& p) {
    using T = std::decay_t<decltype(p)>;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& param : Family<T>::params) params[std::string(param.name)] = p.*(param.member);
    return nlohmann::json{{"family", std::string(Family<T>::name)}, {"params", params}};
  }, spec);
}

namespace {

template <class T>
PotentialSpec parse_family(const nlohmann::json& params) {
  const std::string family(Family<T>::name);
  T value{};
  for (auto it = params.begin(); it != params.end(); ++it)
    if (!find_param<T>(it.key()))
      reject(family, "unknown parameter params." + it.key());
  for (const auto& param : Family<T>::params) {
    const std::string key(param.name);
    if (!params.contains(key)) reject(family, "missing parameter params." + key);
    const auto& v = params.at(key);
    if (!v.is_number()) reject(family, "parameter params." + key + " must be a number");
    value.*(param.member) = v.get<double>();
  }
  PotentialSpec spec = value;
  validate(spec);
  return spec;
}

template <std::size_t... I>
std::string known_families(std::index_sequence<I...>) {
  std::string out;
  ((out += (I == 0 ? "" : ", ") +
           std::string(Family<std::variant_alternative_t<I, PotentialSpec>>::name)), ...);
  return out;
}

template <std::size_t I = 0>
PotentialSpec dispatch_family(std::string_view name, const nlohmann::json& params) {
  if constexpr (I == std::variant_size_v<PotentialSpec>) {
    const std::string known = known_families(std::make_index_sequence<I>{});
    throw std::invalid_argument("family: unknown family \"" + std::string(name) +
                                "\" (expected one of " + known + ")");
  } else {
    using T = std::variant_alternative_t<I, PotentialSpec>;
    if (name == Family<T>::name) return parse_family<T>(params);
    return dispatch_family<I + 1>(name, params);
  }
}

}  // namespace

PotentialSpec potential_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("potential: expected a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "family" && it.key() != "params")
      throw std::invalid_argument("potential: unknown field \"" + it.key() + "\"");
  if (!j.contains("family")) throw std::invalid_argument("family: missing required field");
  if (!j.at("family").is_string()) throw std::invalid_argument("family: must be a string");
  if (!j.contains("params")) throw std::invalid_argument("params: missing required field");
  if (!j.at("params").is_object()) throw std::invalid_argument("params: must be an object");
  return dispatch_family(j.at("family").get<std::string>(), j.at("params"));
}

PotentialSpec with_parameter(const PotentialSpec& spec, std::string_view name, double value) {
  PotentialSpec out = std::visit([&](auto p) -> PotentialSpec {
    using T = decltype(p);
    const auto* param = find_param<T>(name);
    if (!param) reject(std::string(Family<T>::name), "no parameter named " + std::string(name));
    p.*(param->member) = value;
    return p;
  }, spec);
  validate(out);
  return out;
}

double get_parameter(const PotentialSpec& spec, std::string_view name) {
  return std::visit([&](const auto& p) {
    using T = std::decay_t<decltype(p)>;
    const auto* param = find_param<T>(name);
    if (!param) reject(std::string(Family<T>::name), "no parameter named " + std::string(name));
    return p.*(param->member);
  }, spec);
}

}  // namespace gps
