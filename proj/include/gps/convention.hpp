#pragma once

namespace gps {

/// Kinetic prefactor c of the radial operator -c d^2/dr^2 + V + c l(l+1)/r^2
/// (0.5 for atomic units, 1.0 for the p^2 + V form) and a scale applied to
/// reported energies.
struct Convention {
  double kinetic = 0.5;
  double report_scale = 1.0;

  static Convention half() { return {0.5, 1.0}; }
  static Convention full() { return {1.0, 1.0}; }

  /// Throws std::invalid_argument unless kinetic is 0.5 or 1 and report_scale > 0.
  void validate() const;
};

}  // namespace gps
