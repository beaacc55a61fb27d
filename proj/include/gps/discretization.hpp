#pragma once

#include <memory>
#include <span>

#include <Eigen/Dense>

#include "gps/convention.hpp"
#include "gps/mapping.hpp"
#include "gps/potentials.hpp"

namespace gps {

/// Symmetric (N-1)x(N-1) representation of d^2/dr^2 on the interior nodes,
/// acting on the scaled unknowns A_j = sqrt(r'_j) u(r_j) / P_N(x_j).
/// Entries are S_jk / (r'_j r'_k) with the exactly symmetric interior
/// matrix S_jj = -N(N+1) / (3(1-x_j^2)), S_jk = -2 / (x_j - x_k)^2.
Eigen::MatrixXd second_derivative_sym(const MappedGrid& grid);

/// u''(r_j) at the interior nodes from interior samples u(r_j) (Dirichlet
/// zeros at both ends implied), through second_derivative_sym.
Eigen::VectorXd second_derivative_samples(const MappedGrid& grid, std::span<const double> u);

struct HamiltonianMatrix {
  Eigen::MatrixXd matrix;
  std::shared_ptr<const MappedGrid> grid;
  Convention convention;
  int l = 0;

  Eigen::Index dimension() const { return matrix.rows(); }
};

/// H = -c D2_sym + diag(V(r_j) + c l(l+1)/r_j^2 + 2c v_m(x_j)).
/// Throws std::runtime_error naming the node if V is non-finite there.
HamiltonianMatrix assemble_hamiltonian(std::shared_ptr<const MappedGrid> grid,
                                       const PotentialSpec& potential, int l,
                                       const Convention& convention);

}  // namespace gps
