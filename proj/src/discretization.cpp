#include "gps/discretization.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gps {

void Convention::validate() const {
  if (kinetic != 0.5 && kinetic != 1.0)
    throw std::invalid_argument("convention: kinetic prefactor must be 0.5 or 1");
  if (!(report_scale > 0.0) || !std::isfinite(report_scale))
    throw std::invalid_argument("convention: report scale must be > 0");
}

Eigen::MatrixXd second_derivative_sym(const MappedGrid& grid) {
  const int n = grid.order();
  const Eigen::Index m = grid.interior_size();
  const auto& x = grid.collocation.nodes;
  const double nn1 = n * (n + 1.0);
  Eigen::MatrixXd d(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double xj = x[j + 1];
    const double rj = grid.dr[j + 1];
    for (Eigen::Index k = 0; k < m; ++k) {
      double s;
      if (j == k) {
        s = -nn1 / (3.0 * (1.0 - xj * xj));
      } else {
        const double dx = xj - x[k + 1];
        s = -2.0 / (dx * dx);
      }
      d(j, k) = s / (rj * grid.dr[k + 1]);
    }
  }
  return d;
}

Eigen::VectorXd second_derivative_samples(const MappedGrid& grid, std::span<const double> u) {
  const Eigen::Index m = grid.interior_size();
  if (static_cast<Eigen::Index>(u.size()) != m)
    throw std::invalid_argument("second_derivative_samples: expected one sample per interior node");
  Eigen::VectorXd a(m);
  for (Eigen::Index j = 0; j < m; ++j)
    a[j] = std::sqrt(grid.dr[j + 1]) * u[j] / grid.collocation.pn_at_nodes[j + 1];
  Eigen::VectorXd out = second_derivative_sym(grid) * a;
  for (Eigen::Index j = 0; j < m; ++j)
    out[j] *= grid.collocation.pn_at_nodes[j + 1] / std::sqrt(grid.dr[j + 1]);
  return out;
}

HamiltonianMatrix assemble_hamiltonian(std::shared_ptr<const MappedGrid> grid,
                                       const PotentialSpec& potential, int l,
                                       const Convention& convention) {
  if (!grid) throw std::invalid_argument("assemble_hamiltonian: null grid");
  if (l < 0) throw std::invalid_argument("assemble_hamiltonian: l must be >= 0");
  convention.validate();
  validate(potential);

  const double c = convention.kinetic;
  HamiltonianMatrix h;
  h.matrix = -c * second_derivative_sym(*grid);
  const Eigen::Index m = grid->interior_size();
  for (Eigen::Index j = 0; j < m; ++j) {
    const double r = grid->r[j + 1];
    const double v = evaluate(potential, r);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "assemble_hamiltonian: " << family_name(potential) << " potential is not finite at node "
          << j + 1 << " (r = " << r << "); adjust r_max or alpha";
      throw std::runtime_error(msg.str());
    }
    const MapDerivatives d{r, grid->dr[j + 1], grid->d2r[j + 1], grid->d3r[j + 1]};
    h.matrix(j, j) += v + c * l * (l + 1.0) / (r * r) + 2.0 * c * vm_term(d);
  }
  h.grid = std::move(grid);
  h.convention = convention;
  h.l = l;
  return h;
}

}  // namespace gps
