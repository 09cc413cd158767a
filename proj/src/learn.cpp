#include "topontk/learn.hpp"

#include <cmath>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "topontk/error.hpp"

namespace topontk {

RidgeModel krr_fit(const Eigen::MatrixXd& gram, const Eigen::MatrixXd& y, double lambda) {
  if (!(lambda > 0.0)) throw InvalidArgument("ridge lambda must be positive");
  if (gram.rows() != gram.cols()) throw DimensionMismatch("Gram matrix must be square");
  if (y.rows() != gram.rows()) {
    throw DimensionMismatch("targets have " + std::to_string(y.rows()) + " rows, Gram has " +
                            std::to_string(gram.rows()));
  }
  RidgeModel model;
  model.gram = gram;
  model.lambda = lambda;
  const Eigen::Index n = gram.rows();
  Eigen::MatrixXd shifted = gram;
  shifted.diagonal().array() += lambda;

  Eigen::LLT<Eigen::MatrixXd> llt(shifted);
  if (llt.info() == Eigen::Success) {
    model.dual_coeffs = llt.solve(y);
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(shifted);
    const Eigen::VectorXd& vals = es.eigenvalues();
    const double top = vals.size() ? vals.cwiseAbs().maxCoeff() : 0.0;
    if (vals.size() && vals.minCoeff() < -1e-8 * std::max(top, 1.0)) {
      throw SolveFailure("K + lambda I is indefinite, min eigenvalue " +
                         std::to_string(vals.minCoeff()));
    }
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i) {
      if (vals(i) > 1e-14 * top) inv(i) = 1.0 / vals(i);
    }
    model.dual_coeffs =
        es.eigenvectors() * inv.asDiagonal() * (es.eigenvectors().transpose() * y);
    model.used_eigen_fallback = true;
  }
  if (n > 0 && !model.dual_coeffs.allFinite()) throw SolveFailure("non-finite dual coefficients");
  model.offset = Eigen::RowVectorXd::Zero(y.cols());
  return model;
}

RidgeModel krr_fit_offset(const Eigen::MatrixXd& gram, const Eigen::MatrixXd& y, double lambda) {
  if (gram.rows() == 0) throw DimensionMismatch("offset fit needs at least one sample");
  // With A = K + lambda I: b = 1^T A^-1 y / 1^T A^-1 1 and c = A^-1 (y - 1 b).
  Eigen::MatrixXd rhs(y.rows(), y.cols() + 1);
  rhs << y, Eigen::VectorXd::Ones(y.rows());
  RidgeModel model = krr_fit(gram, rhs, lambda);
  const Eigen::MatrixXd& sol = model.dual_coeffs;
  const double denom = sol.col(y.cols()).sum();
  if (!(denom > 0.0)) throw SolveFailure("offset system is singular");
  Eigen::RowVectorXd b = sol.leftCols(y.cols()).colwise().sum() / denom;
  model.dual_coeffs = sol.leftCols(y.cols()) - sol.col(y.cols()) * b;
  model.offset = std::move(b);
  return model;
}

Eigen::MatrixXd krr_predict(const RidgeModel& model, const Eigen::MatrixXd& cross) {
  if (cross.cols() != model.dual_coeffs.rows()) {
    throw DimensionMismatch("cross kernel has " + std::to_string(cross.cols()) +
                            " columns, model has " + std::to_string(model.dual_coeffs.rows()) +
                            " training points");
  }
  Eigen::MatrixXd out = cross * model.dual_coeffs;
  if (model.offset.size() == out.cols()) out.rowwise() += model.offset;
  return out;
}

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& k) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
  if (es.info() != Eigen::Success) throw SolveFailure("symmetric eigensolver did not converge");
  // Eigen returns ascending order.
  return {es.eigenvalues().reverse(), es.eigenvectors().rowwise().reverse()};
}

Eigen::VectorXd kernel_gradient_flow(const SymmetricEigen& eig, const Eigen::VectorXd& y,
                                     double t) {
  if (t < 0.0) throw InvalidArgument("time must be nonnegative");
  if (y.size() != eig.vectors.rows()) throw DimensionMismatch("target length mismatch");
  const Eigen::VectorXd coeff = eig.vectors.transpose() * y;
  const Eigen::VectorXd gain = (1.0 - (-eig.values.array() * t).exp()).matrix();
  return eig.vectors * gain.cwiseProduct(coeff);
}

Eigen::VectorXd kernel_gradient_flow(const Eigen::MatrixXd& k, const Eigen::VectorXd& y,
                                     double t) {
  return kernel_gradient_flow(symmetric_eigen(k), y, t);
}

std::string_view to_string(HodgeLabel label) {
  switch (label) {
    case HodgeLabel::Exact: return "exact";
    case HodgeLabel::Harmonic: return "harmonic";
    case HodgeLabel::Coexact: return "coexact";
  }
  return "exact";
}

EigenDiagnostic eigen_diagnostic(const Eigen::MatrixXd& k, const HodgeBasis& basis) {
  if (k.rows() != basis.n_edges()) throw DimensionMismatch("kernel and basis sizes differ");
  const SymmetricEigen eig = symmetric_eigen(k);
  EigenDiagnostic d;
  d.eigenvalues = eig.values;
  d.eigenvectors = eig.vectors;
  const Eigen::Index m = eig.values.size();
  d.energies.resize(m, 3);
  d.energies.col(0) = (basis.exact.transpose() * eig.vectors).colwise().squaredNorm().transpose();
  d.energies.col(1) =
      (basis.harmonic.transpose() * eig.vectors).colwise().squaredNorm().transpose();
  d.energies.col(2) =
      (basis.coexact.transpose() * eig.vectors).colwise().squaredNorm().transpose();

  constexpr double kTieTol = 1e-12;
  for (Eigen::Index j = 0; j < m; ++j) {
    int best = 0;
    for (int s = 1; s < 3; ++s) {
      if (d.energies(j, s) > d.energies(j, best) + kTieTol) best = s;  // earlier wins ties
    }
    bool tie = false;
    for (int s = 0; s < 3; ++s) {
      if (s != best && std::abs(d.energies(j, s) - d.energies(j, best)) <= kTieTol) tie = true;
    }
    d.labels.push_back(static_cast<HodgeLabel>(best));
    d.label_tie.push_back(tie);
  }

  const double kmax = m > 0 ? eig.values.cwiseAbs().maxCoeff() : 0.0;
  int cluster = 0;
  for (Eigen::Index j = 0; j < m; ++j) {
    if (j > 0 && eig.values(j - 1) - eig.values(j) >= 1e-10 * kmax) ++cluster;
    d.cluster.push_back(cluster);
  }
  return d;
}

}  // namespace topontk
