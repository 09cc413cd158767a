#pragma once

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "topontk/hodge.hpp"

namespace topontk {

/// Kernel ridge regression state: dual coefficients (K + lambda I)^{-1} Y,
/// one column per output.
struct RidgeModel {
  Eigen::MatrixXd gram;
  double lambda = 0.0;
  Eigen::MatrixXd dual_coeffs;
  Eigen::RowVectorXd offset;  // per output; zero unless fit with krr_fit_offset
  bool used_eigen_fallback = false;

  /// K c + b, the fitted training values.
  Eigen::MatrixXd fitted() const {
    return (gram * dual_coeffs).rowwise() + offset;
  }
};

/// Cholesky solve of (K + lambda I) C = Y, with an eigendecomposition
/// fallback when the factorization fails. Throws SolveFailure if the
/// shifted matrix is not positive definite.
RidgeModel krr_fit(const Eigen::MatrixXd& gram, const Eigen::MatrixXd& y, double lambda);

/// Ridge regression with an unpenalized constant offset b:
///   (K + lambda I) c + 1 b = y,   1^T c = 0,
/// solved per output column.
RidgeModel krr_fit_offset(const Eigen::MatrixXd& gram, const Eigen::MatrixXd& y, double lambda);

/// cross * dual_coeffs + offset; cross is n_test x n_train.
Eigen::MatrixXd krr_predict(const RidgeModel& model, const Eigen::MatrixXd& cross);

/// Eigenpairs of a symmetric matrix in descending eigenvalue order.
struct SymmetricEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& k);

/// f_t = sum_j (1 - exp(-kappa_j t)) <y, u_j> u_j, starting from f_0 = 0.
Eigen::VectorXd kernel_gradient_flow(const Eigen::MatrixXd& k, const Eigen::VectorXd& y, double t);
Eigen::VectorXd kernel_gradient_flow(const SymmetricEigen& eig, const Eigen::VectorXd& y, double t);

enum class HodgeLabel { Exact = 0, Harmonic = 1, Coexact = 2 };
std::string_view to_string(HodgeLabel label);

struct EigenDiagnostic {
  Eigen::VectorXd eigenvalues;  // descending
  Eigen::MatrixXd eigenvectors;
  std::vector<HodgeLabel> labels;
  Eigen::MatrixXd energies;     // modes x 3: |Pi_E u|^2, |Pi_H u|^2, |Pi_C u|^2
  std::vector<bool> label_tie;  // argmax was not unique
  std::vector<int> cluster;     // modes closer than 1e-10 kappa_max share a cluster id
};

EigenDiagnostic eigen_diagnostic(const Eigen::MatrixXd& k, const HodgeBasis& basis);

}  // namespace topontk
