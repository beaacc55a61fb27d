#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "gps/convention.hpp"
#include "gps/mapping.hpp"
#include "gps/observables.hpp"
#include "gps/potentials.hpp"

namespace gps {

struct SpectrumRequest {
  PotentialSpec potential = Coulomb{};
  int l = 0;
  int n_states = 5;
  GridSpec grid;
  Convention convention;

  /// Throws std::invalid_argument on l < 0, n_states outside [1, N-1] or bad grid/convention.
  void validate() const;
};

struct SpectrumResult {
  SpectrumRequest request;
  std::vector<double> energies;      // ascending, times report_scale
  std::vector<double> residuals;     // eigen-residual per returned state (unscaled)
  std::vector<RadialState> states;   // empty when solved without states
};

/// Shared grids keyed by GridSpec; building one costs O(N^2).
std::shared_ptr<const MappedGrid> cached_grid(const GridSpec& spec);

/// Lowest n_states eigenpairs of the assembled Hamiltonian.
SpectrumResult solve_spectrum(const SpectrumRequest& request, bool with_states = true);

// ---------------------------------------------------------------------------

enum class ScreeningFamily { Hulthen, Yukawa };

struct CriticalScreeningRequest {
  ScreeningFamily family = ScreeningFamily::Hulthen;
  double Z = 1.0;
  int n_r = 0;
  int l = 0;
  double lo = 0.0;   // bound state must exist here
  double hi = 0.0;   // and be absent here
  double tol = 1e-6;
  double binding_threshold = 1e-9;
  // Near threshold the state is very diffuse: a wide box with a gentle map.
  GridSpec grid{500, 5.0e4, 0.1};
};

struct CriticalScreeningResult {
  ScreeningFamily family = ScreeningFamily::Hulthen;
  int n_r = 0;
  int l = 0;
  double critical = 0.0;  // bracket midpoint
  double lo = 0.0;
  double hi = 0.0;
  double width = 0.0;
  int probes = 0;
};

std::string to_string(ScreeningFamily f);

/// True when state (n_r, l) lies below -binding_threshold (atomic units).
bool bound_state_exists(const CriticalScreeningRequest& request, double screening);

/// Bisection on the screening parameter until hi - lo <= tol. Throws
/// std::invalid_argument when the bracket does not straddle the threshold.
CriticalScreeningResult critical_screening(const CriticalScreeningRequest& request);

/// 1 / (n sqrt 2 + 0.1645 l + 0.0983 l / n)^2, a rough estimate of the
/// critical Hulthen screening for principal number n.
double hulthen_critical_estimate(int n, int l);

// ---------------------------------------------------------------------------

struct StateLabel {
  int n_r = 0;
  int l = 0;
  bool operator==(const StateLabel&) const = default;
};

struct SweepRequest {
  SpectrumRequest base;
  std::string parameter;
  std::vector<double> values;     // strictly monotone
  std::vector<StateLabel> labels;
};

struct SweepResult {
  std::string parameter;
  std::vector<double> values;
  std::vector<StateLabel> labels;
  std::vector<std::vector<double>> energies;  // energies[value][label]
};

/// Worker count for sweeps: GPS_SPECTRA_THREADS if set and positive,
/// otherwise the hardware concurrency.
int sweep_thread_limit();

/// Solves every parameter value, tracking each label by node count within
/// its l channel. Results are in parameter order regardless of threading.
/// A failure at any value throws std::runtime_error naming that value.
SweepResult parameter_sweep(const SweepRequest& request, int max_threads = 0);

// ---------------------------------------------------------------------------

struct LevelEnergy {
  int n_r = 0;
  int l = 0;
  double energy = 0.0;
  int shell() const { return 2 * n_r + l; }
};

/// Letters for l = 0, 1, 2, ...: Standard skips j (s p d f g h i k l m ...),
/// Sequential continues alphabetically after f (s p d f g h i j k l ...).
enum class LetterScheme { Standard, Sequential };

std::string angular_letter(int l, LetterScheme scheme);
/// Spectroscopic label "<n_r+1><letter>".
std::string level_label(int n_r, int l, LetterScheme scheme);

/// Two reference orderings of oscillator-like levels grouped in shells
/// n = 2 n_r + l: within a shell, l ascending (positive coupling) or
/// l descending (negative coupling).
enum class ReferenceOrdering { PositiveCoupling, NegativeCoupling };

struct OrderingViolation {
  LevelEnergy expected_lower;
  LevelEnergy expected_upper;
};

struct Splitting {
  LevelEnergy upper;  // (n_r, l)
  LevelEnergy lower;  // (n_r - 1, l + 2), same shell
  double value = 0.0;
};

struct LevelOrderingResult {
  std::vector<LevelEnergy> sorted;  // by energy
  std::vector<OrderingViolation> positive_violations;
  std::vector<OrderingViolation> negative_violations;
  std::vector<Splitting> splittings;
};

std::vector<LevelEnergy> reference_sequence(std::vector<LevelEnergy> levels, ReferenceOrdering ordering);

/// Adjacent pairs of the reference sequence whose energies are reversed,
/// plus same-shell splittings E(n_r, l) - E(n_r - 1, l + 2).
LevelOrderingResult level_ordering(const std::vector<LevelEnergy>& levels);

/// Lambda(N, l) = (2l + N - 2)(l + N - 3)! / (l! (N - 2)!), with 1 for l = 0.
/// Throws std::overflow_error when the result exceeds 64 bits.
std::uint64_t degeneracy_count(int dimension, int l);

}  // namespace gps
