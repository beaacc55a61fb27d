#include "gps/mapping.hpp"

#include <cmath>
#include <stdexcept>

namespace gps {

void GridSpec::validate() const {
  if (order < 8) throw std::invalid_argument("grid: N must be >= 8");
  if (!(r_max > 0.0) || !std::isfinite(r_max)) throw std::invalid_argument("grid: r_max must be positive");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("grid: alpha must be positive");
}

MapDerivatives map_radial(const GridSpec& spec, double x) {
  const double scale = spec.map_scale();
  const double den = 1.0 - x + spec.alpha;
  const double k = scale * (2.0 + spec.alpha);
  MapDerivatives d;
  d.r = scale * (1.0 + x) / den;
  d.dr = k / (den * den);
  d.d2r = 2.0 * k / (den * den * den);
  d.d3r = 6.0 * k / (den * den * den * den);
  return d;
}

double vm_term(const MapDerivatives& d) {
  const double dr2 = d.dr * d.dr;
  return (3.0 * d.d2r * d.d2r - 2.0 * d.d3r * d.dr) / (8.0 * dr2 * dr2);
}

double vm_term(const GridSpec& spec, double x) { return vm_term(map_radial(spec, x)); }

double MappedGrid::to_unit(double radius) const {
  const double scale = spec.map_scale();
  return (radius * (1.0 + spec.alpha) - scale) / (radius + scale);
}

MappedGrid make_mapped_grid(const GridSpec& spec) {
  spec.validate();
  MappedGrid grid;
  grid.spec = spec;
  grid.collocation = make_collocation(spec.order);
  const auto size = grid.collocation.size();
  grid.r.resize(size);
  grid.dr.resize(size);
  grid.d2r.resize(size);
  grid.d3r.resize(size);
  for (std::size_t j = 0; j < size; ++j) {
    const auto d = map_radial(spec, grid.collocation.nodes[j]);
    grid.r[j] = d.r;
    grid.dr[j] = d.dr;
    grid.d2r[j] = d.d2r;
    grid.d3r[j] = d.d3r;
  }
  grid.r.front() = 0.0;
  return grid;
}

}  // namespace gps
