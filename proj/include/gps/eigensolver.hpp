#pragma once

#include <vector>

#include <Eigen/Dense>

namespace gps {

struct EigenDecomposition {
  Eigen::VectorXd values;        // ascending
  Eigen::MatrixXd vectors;       // orthonormal columns
  std::vector<double> residuals; // ||H v_k - lambda_k v_k||_2
};

/// Full eigendecomposition of a dense real symmetric matrix. Each
/// eigenvector is signed so its largest-magnitude component is positive.
/// Throws std::invalid_argument if the input is empty, non-finite or
/// asymmetric beyond 1e-12 relative to its largest entry.
EigenDecomposition eigh(const Eigen::MatrixXd& matrix);

/// Eigenvalues only, ascending.
Eigen::VectorXd eigvalsh(const Eigen::MatrixXd& matrix);

}  // namespace gps
