#include "gps/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "gps/discretization.hpp"
#include "gps/eigensolver.hpp"

namespace gps {

void SpectrumRequest::validate() const {
  if (l < 0) throw std::invalid_argument("request: l must be >= 0");
  grid.validate();
  convention.validate();
  gps::validate(potential);
  if (n_states < 1 || n_states > grid.order - 1)
    throw std::invalid_argument("request: n_states must be in [1, N-1]");
}

std::shared_ptr<const MappedGrid> cached_grid(const GridSpec& spec) {
  static std::mutex mutex;
  static std::map<std::tuple<int, double, double>, std::shared_ptr<const MappedGrid>> cache;
  constexpr std::size_t kCapacity = 32;
  const auto key = std::make_tuple(spec.order, spec.r_max, spec.alpha);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto grid = std::make_shared<const MappedGrid>(make_mapped_grid(spec));
  std::lock_guard lock(mutex);
  if (cache.size() >= kCapacity) cache.clear();
  return cache.emplace(key, grid).first->second;
}

SpectrumResult solve_spectrum(const SpectrumRequest& request, bool with_states) {
  request.validate();
  auto grid = cached_grid(request.grid);
  const auto h = assemble_hamiltonian(grid, request.potential, request.l, request.convention);
  const double s = request.convention.report_scale;

  SpectrumResult out;
  out.request = request;
  if (!with_states) {
    const Eigen::VectorXd values = eigvalsh(h.matrix);
    for (int k = 0; k < request.n_states; ++k) out.energies.push_back(s * values[k]);
    return out;
  }
  const auto dec = eigh(h.matrix);
  for (int k = 0; k < request.n_states; ++k) {
    out.energies.push_back(s * dec.values[k]);
    out.residuals.push_back(dec.residuals[k]);
    out.states.push_back(reconstruct_wavefunction(dec.vectors.col(k), grid, s * dec.values[k], request.l));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(ScreeningFamily f) {
  return f == ScreeningFamily::Hulthen ? "hulthen" : "yukawa";
}

bool bound_state_exists(const CriticalScreeningRequest& request, double screening) {
  SpectrumRequest spectrum;
  if (request.family == ScreeningFamily::Hulthen)
    spectrum.potential = Hulthen{request.Z, screening};
  else
    spectrum.potential = Yukawa{request.Z, screening};
  spectrum.l = request.l;
  spectrum.n_states = request.n_r + 1;
  spectrum.grid = request.grid;
  spectrum.convention = Convention::half();
  const auto result = solve_spectrum(spectrum, false);
  return result.energies[request.n_r] < -request.binding_threshold;
}

CriticalScreeningResult critical_screening(const CriticalScreeningRequest& request) {
  if (request.n_r < 0 || request.l < 0) throw std::invalid_argument("critical_screening: bad state label");
  if (!(request.Z > 0.0)) throw std::invalid_argument("critical_screening: Z must be > 0");
  if (!(request.tol > 0.0)) throw std::invalid_argument("critical_screening: tol must be > 0");
  if (!(request.lo > 0.0 || (request.lo == 0.0 && request.family == ScreeningFamily::Yukawa)) ||
      !(request.hi > request.lo))
    throw std::invalid_argument("critical_screening: need 0 < lo < hi");

  CriticalScreeningResult out;
  out.family = request.family;
  out.n_r = request.n_r;
  out.l = request.l;
  double lo = request.lo, hi = request.hi;
  const bool bound_lo = bound_state_exists(request, lo);
  const bool bound_hi = bound_state_exists(request, hi);
  out.probes = 2;
  if (!bound_lo || bound_hi) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "critical_screening: bracket [" << lo << ", " << hi << "] does not straddle the threshold ("
        << (bound_lo ? "" : "no bound state at lo") << (!bound_lo && bound_hi ? "; " : "")
        << (bound_hi ? "still bound at hi" : "") << "); widen the bracket";
    throw std::invalid_argument(msg.str());
  }
  while (hi - lo > request.tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (bound_state_exists(request, mid) ? lo : hi) = mid;
    ++out.probes;
  }
  out.lo = lo;
  out.hi = hi;
  out.width = hi - lo;
  out.critical = 0.5 * (lo + hi);
  return out;
}

double hulthen_critical_estimate(int n, int l) {
  if (n < 1 || l < 0 || l >= n) throw std::invalid_argument("hulthen_critical_estimate: need 0 <= l < n");
  const double d = n * std::sqrt(2.0) + 0.1645 * l + 0.0983 * l / n;
  return 1.0 / (d * d);
}

// ---------------------------------------------------------------------------

int sweep_thread_limit() {
  if (const char* env = std::getenv("GPS_SPECTRA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min<long>(v, 256));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

std::vector<double> sweep_point(const SweepRequest& request, double value) {
  SpectrumRequest base = request.base;
  base.potential = with_parameter(base.potential, request.parameter, value);

  std::map<int, int> highest;  // l -> largest n_r requested
  for (const auto& label : request.labels) highest[label.l] = std::max(highest[label.l], label.n_r);

  std::map<std::pair<int, int>, double> found;
  for (const auto& [l, n_r] : highest) {
    SpectrumRequest channel = base;
    channel.l = l;
    channel.n_states = std::min(n_r + 3, base.grid.order - 1);
    const auto result = solve_spectrum(channel, true);
    for (const auto& state : result.states) {
      const auto key = std::make_pair(state.node_count, l);
      if (!found.count(key)) found[key] = state.energy;
    }
  }
  std::vector<double> energies;
  for (const auto& label : request.labels) {
    const auto it = found.find({label.n_r, label.l});
    if (it == found.end())
      throw std::runtime_error("no state with " + std::to_string(label.n_r) + " nodes in channel l = " +
                               std::to_string(label.l));
    energies.push_back(it->second);
  }
  return energies;
}

}  // namespace

SweepResult parameter_sweep(const SweepRequest& request, int max_threads) {
  if (request.values.empty()) throw std::invalid_argument("sweep: no parameter values");
  if (request.labels.empty()) throw std::invalid_argument("sweep: no state labels");
  for (const auto& label : request.labels)
    if (label.n_r < 0 || label.l < 0) throw std::invalid_argument("sweep: bad state label");
  const auto& v = request.values;
  const bool up = v.size() < 2 || v[1] > v[0];
  for (std::size_t i = 1; i < v.size(); ++i)
    if (up ? !(v[i] > v[i - 1]) : !(v[i] < v[i - 1]))
      throw std::invalid_argument("sweep: parameter values must be strictly monotone");
  (void)get_parameter(request.base.potential, request.parameter);

  SweepResult out;
  out.parameter = request.parameter;
  out.values = v;
  out.labels = request.labels;
  out.energies.resize(v.size());

  const int workers = max_threads > 0 ? max_threads : sweep_thread_limit();
  auto fail = [&](double value, const std::string& what) {
    std::ostringstream msg;
    msg.precision(12);
    msg << "sweep failed at " << request.parameter << " = " << value << ": " << what;
    return std::runtime_error(msg.str());
  };

  for (std::size_t start = 0; start < v.size(); start += static_cast<std::size_t>(workers)) {
    const std::size_t stop = std::min(v.size(), start + static_cast<std::size_t>(workers));
    std::vector<std::future<std::vector<double>>> batch;
    for (std::size_t i = start; i < stop; ++i)
      batch.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred,
                                 [&request, value = v[i]] { return sweep_point(request, value); }));
    for (std::size_t i = start; i < stop; ++i) {
      try {
        out.energies[i] = batch[i - start].get();
      } catch (const std::exception& e) {
        for (std::size_t k = i + 1; k < stop; ++k) batch[k - start].wait();
        throw fail(v[i], e.what());
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string angular_letter(int l, LetterScheme scheme) {
  if (l < 0) throw std::invalid_argument("angular_letter: l must be >= 0");
  static constexpr std::string_view head = "spdf";
  if (l < 4) return std::string(1, head[l]);
  // after f: alphabetical from g, skipping letters already used (s, p) and,
  // in the standard scheme, j
  std::string letters;
  for (char ch = 'g'; ch <= 'z'; ++ch) {
    if (ch == 'p' || ch == 's') continue;
    if (scheme == LetterScheme::Standard && ch == 'j') continue;
    letters += ch;
  }
  const auto i = static_cast<std::size_t>(l - 4);
  if (i >= letters.size()) return "[l=" + std::to_string(l) + "]";
  return std::string(1, letters[i]);
}

std::string level_label(int n_r, int l, LetterScheme scheme) {
  return std::to_string(n_r + 1) + angular_letter(l, scheme);
}

std::vector<LevelEnergy> reference_sequence(std::vector<LevelEnergy> levels, ReferenceOrdering ordering) {
  std::sort(levels.begin(), levels.end(), [ordering](const LevelEnergy& a, const LevelEnergy& b) {
    if (a.shell() != b.shell()) return a.shell() < b.shell();
    return ordering == ReferenceOrdering::PositiveCoupling ? a.l < b.l : a.l > b.l;
  });
  return levels;
}

LevelOrderingResult level_ordering(const std::vector<LevelEnergy>& levels) {
  LevelOrderingResult out;
  out.sorted = levels;
  std::stable_sort(out.sorted.begin(), out.sorted.end(), [](const LevelEnergy& a, const LevelEnergy& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    if (a.shell() != b.shell()) return a.shell() < b.shell();
    return a.l < b.l;
  });

  auto violations = [&](ReferenceOrdering ordering) {
    std::vector<OrderingViolation> v;
    const auto seq = reference_sequence(levels, ordering);
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const double slack = 1e-12 * std::max({1.0, std::abs(seq[i].energy), std::abs(seq[i + 1].energy)});
      if (seq[i].energy > seq[i + 1].energy + slack) v.push_back({seq[i], seq[i + 1]});
    }
    return v;
  };
  out.positive_violations = violations(ReferenceOrdering::PositiveCoupling);
  out.negative_violations = violations(ReferenceOrdering::NegativeCoupling);

  for (const auto& upper : levels) {
    if (upper.n_r < 1) continue;
    const auto lower = std::find_if(levels.begin(), levels.end(), [&](const LevelEnergy& e) {
      return e.n_r == upper.n_r - 1 && e.l == upper.l + 2;
    });
    if (lower != levels.end()) out.splittings.push_back({upper, *lower, upper.energy - lower->energy});
  }
  return out;
}

std::uint64_t degeneracy_count(int dimension, int l) {
  if (dimension < 2) throw std::invalid_argument("degeneracy_count: dimension must be >= 2");
  if (l < 0) throw std::invalid_argument("degeneracy_count: l must be >= 0");
  if (l == 0) return 1;
  __extension__ using Wide = unsigned __int128;
  constexpr Wide kLimit = std::numeric_limits<std::uint64_t>::max();
  if (dimension == 2) return 2;
  // C(l + N - 3, l) built incrementally; every partial product is an integer
  Wide binom = 1;
  for (int i = 1; i <= l; ++i) {
    binom = binom * static_cast<Wide>(dimension - 3 + i) / static_cast<Wide>(i);
    if (binom > kLimit) throw std::overflow_error("degeneracy_count: result exceeds 64 bits");
  }
  const Wide value = static_cast<Wide>(2 * l + dimension - 2) * binom / static_cast<Wide>(dimension - 2);
  if (value > kLimit) throw std::overflow_error("degeneracy_count: result exceeds 64 bits");
  return static_cast<std::uint64_t>(value);
}

}  // namespace gps
