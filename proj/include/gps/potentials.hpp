#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "gps/convention.hpp"

namespace gps {

// Potential families. Each evaluates V(r) for r > 0 in the units of the
// Hamiltonian it is used with; the kinetic convention is chosen separately.

struct Coulomb {             // -Z / r
  double Z = 1.0;
};
struct Harmonic {            // k r^2
  double k = 1.0;
};
struct PowerLaw {            // A sgn(nu) r^nu
  double A = 1.0;
  double nu = 1.0;
};
struct Logarithmic {         // A ln r
  double A = 1.0;
};
struct SpikedOscillator {    // r^2 + lambda r^-alpha
  double lambda = 0.0;
  double alpha = 4.0;
};
struct ChargedOscillator {   // r^2 + lambda / r
  double lambda = 0.0;
};
struct SexticSingular {      // a r^2 + b / r^4 + c / r^6
  double a = 1.0;
  double b = 0.0;
  double c = 1.0;
};
struct GeneralizedSpiked {   // r^2 + A / r^2 + lambda r^-alpha
  double A = 0.0;
  double lambda = 0.0;
  double alpha = 4.0;
};
struct Hulthen {             // -Z delta e^{-delta r} / (1 - e^{-delta r})
  double Z = 1.0;
  double delta = 0.1;
};
struct Yukawa {              // -Z e^{-lambda r} / r
  double Z = 1.0;
  double lambda = 0.1;
};
struct NonPolynomial {       // r^2 + lambda r^2 / (1 + g r^2)
  double g = 1.0;
  double lambda = 0.0;
};

using PotentialSpec =
    std::variant<Coulomb, Harmonic, PowerLaw, Logarithmic, SpikedOscillator, ChargedOscillator,
                 SexticSingular, GeneralizedSpiked, Hulthen, Yukawa, NonPolynomial>;

/// Family name used in JSON ("coulomb", "hulthen", ...).
std::string family_name(const PotentialSpec& spec);

/// Throws std::invalid_argument when a parameter violates its family constraint.
void validate(const PotentialSpec& spec);

/// V(r); throws std::invalid_argument for r <= 0 or non-finite r.
double evaluate(const PotentialSpec& spec, double r);

enum class SingularityClass { Regular, Transition, SingularRepulsive, SingularAttractive };

std::string_view to_string(SingularityClass c);

/// Classification by the small-r behaviour of r^2 V(r), sampled at
/// r = 10^-2 ... 10^-10.
SingularityClass classify(const PotentialSpec& spec);

/// Closed-form energy of state n_r (radial node count) in channel l, in the
/// requested convention and report scale, when the family and parameters
/// admit one; std::nullopt otherwise.
std::optional<double> exact_reference(const PotentialSpec& spec, int l, int n_r,
                                      const Convention& convention);

/// Exact s-state Hulthen level with principal number n (kinetic prefactor 1/2):
/// E = -(2Z - n^2 delta)^2 / (8 n^2), valid while n^2 delta < 2Z.
std::optional<double> hulthen_exact_s(double Z, double delta, int n);

// JSON form {"family": "...", "params": {...}}. Unknown families, unknown or
// missing parameters and non-numeric values are rejected.
nlohmann::json to_json(const PotentialSpec& spec);
PotentialSpec potential_from_json(const nlohmann::json& j);

/// Copy of spec with one named numeric parameter replaced.
PotentialSpec with_parameter(const PotentialSpec& spec, std::string_view name, double value);
double get_parameter(const PotentialSpec& spec, std::string_view name);

}  // namespace gps

namespace gps {

/// Asymptotic or perturbative expansions quoted for the catalog families.
/// They are diagnostics only: truncated, not convergent.
enum class SeriesRegime {
  ChargedCoulomb,           // charged oscillator, large negative lambda
  ChargedStrong,            // charged oscillator, large positive lambda
  SpikedSmallCoupling,      // spiked oscillator ground state, alpha > 5/2, small lambda
  SpikedLargeCoupling,      // spiked oscillator, alpha = 5/2, fourth-order large coupling
  SpikedStrongVariational,  // spiked oscillator, alpha = 5/2, variational strong coupling
  HulthenEckerWeizel,       // Hulthen, extended Ecker-Weizel closed form
  NpoSmallCoupling,         // 1D non-polynomial oscillator, small lambda / g
  NpoLargeG,                // 1D non-polynomial oscillator, large g, n <= 3
};

struct SeriesState {
  int n = 0;  // principal number for Hulthen, oscillator index for the 1D NPO forms
  int l = 0;
};

/// Value of the truncated series keeping `order` terms. Energies are in the
/// convention the expansion was derived in (p^2 + V for the oscillators,
/// atomic units for Hulthen, 1D p^2 + x^2 + ... for the NPO forms).
/// Throws std::invalid_argument for an unsupported family/regime/order/state.
double reference_series(const PotentialSpec& spec, SeriesRegime regime, int order,
                        SeriesState state = {});

}  // namespace gps
