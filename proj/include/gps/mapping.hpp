#pragma once

#include <vector>

#include "gps/orthopoly.hpp"

namespace gps {

/// Collocation order and the algebraic map r(x) = L (1+x) / (1-x+alpha)
/// taking [-1, 1] onto [0, r_max]. The map scale L = alpha r_max / 2 is
/// derived, so r(1) = r_max.
struct GridSpec {
  int order = 300;
  double r_max = 200.0;
  double alpha = 25.0;

  double map_scale() const { return 0.5 * alpha * r_max; }
  /// Throws std::invalid_argument if order < 8 or r_max, alpha are not positive.
  void validate() const;
};

struct MapDerivatives {
  double r = 0.0;
  double dr = 0.0;   // r'(x)
  double d2r = 0.0;  // r''(x)
  double d3r = 0.0;  // r'''(x)
};

MapDerivatives map_radial(const GridSpec& spec, double x);

/// (3 r''^2 - 2 r''' r') / (8 r'^4) for an arbitrary map; zero for map_radial.
double vm_term(const MapDerivatives& d);
double vm_term(const GridSpec& spec, double x);

/// Collocation set together with the mapped radii and map derivatives at
/// every node (index 0 is r = 0, index N is r = r_max).
struct MappedGrid {
  GridSpec spec;
  CollocationSet collocation;
  std::vector<double> r;
  std::vector<double> dr;
  std::vector<double> d2r;
  std::vector<double> d3r;

  int order() const { return spec.order; }
  /// Number of interior nodes, N - 1.
  int interior_size() const { return spec.order - 1; }
  /// Inverse map x(r) for r in [0, r_max].
  double to_unit(double radius) const;
};

MappedGrid make_mapped_grid(const GridSpec& spec);

}  // namespace gps
