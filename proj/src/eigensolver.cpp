#include "gps/eigensolver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace gps {

namespace {

void check_symmetric(const Eigen::MatrixXd& a) {
  if (a.rows() == 0 || a.rows() != a.cols())
    throw std::invalid_argument("eigh: matrix must be square and non-empty");
  if (!a.allFinite()) throw std::invalid_argument("eigh: matrix has non-finite entries");
  const double scale = a.cwiseAbs().maxCoeff();
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale)
    throw std::invalid_argument("eigh: matrix is not symmetric (max |A - A^T| = " +
                                std::to_string(asym) + ")");
}

}  // namespace

EigenDecomposition eigh(const Eigen::MatrixXd& matrix) {
  check_symmetric(matrix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: QL iteration failed to converge");

  EigenDecomposition out;
  out.values = solver.eigenvalues();
  out.vectors = solver.eigenvectors();
  for (Eigen::Index k = 0; k < out.vectors.cols(); ++k) {
    Eigen::Index arg = 0;
    out.vectors.col(k).cwiseAbs().maxCoeff(&arg);
    if (out.vectors(arg, k) < 0.0) out.vectors.col(k) *= -1.0;
  }
  const Eigen::MatrixXd r = matrix * out.vectors - out.vectors * out.values.asDiagonal();
  out.residuals.resize(static_cast<std::size_t>(r.cols()));
  for (Eigen::Index k = 0; k < r.cols(); ++k) out.residuals[k] = r.col(k).norm();
  return out;
}

Eigen::VectorXd eigvalsh(const Eigen::MatrixXd& matrix) {
  check_symmetric(matrix);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(matrix, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: QL iteration failed to converge");
  return solver.eigenvalues();
}

}  // namespace gps
