#pragma once

#include <string_view>

#include <Eigen/Core>

namespace topontk {

enum class Activation { Linear, ReLU };

std::string_view to_string(Activation a);
Activation parse_activation(std::string_view name);

/// ReLU derivative map at a (numerically) zero variance. Throw raises
/// ZeroVarianceDerivative; ZeroDerivative sets those entries to 0, the
/// s'(0) = 0 convention of the finite-width network.
enum class ZeroVariance { Throw, ZeroDerivative };

std::string_view to_string(ZeroVariance z);
ZeroVariance parse_zero_variance(std::string_view name);

/// Cross-covariance block with the self-variance diagonals of both sides.
struct CovarianceView {
  Eigen::Ref<const Eigen::MatrixXd> cross;  // |E_X| x |E_Y|
  Eigen::Ref<const Eigen::VectorXd> diag_x;
  Eigen::Ref<const Eigen::VectorXd> diag_y;
};

/// Entrywise E[s(g_i) s(g_j)] for the centered Gaussian pair described by
/// the view. ReLU uses the degree-1 arc-cosine form
///   (s / 2pi) (sin t + (pi - t) cos t),  s = sqrt(d_x d_y),  t = acos(rho)
/// with rho clamped to [-1, 1]; entries with s = 0 are 0.
Eigen::MatrixXd phi(Activation kind, const CovarianceView& v);

/// Entrywise E[s'(g_i) s'(g_j)]. ReLU: (pi - t) / 2pi; needs positive
/// diagonals unless `zero` is ZeroDerivative.
Eigen::MatrixXd phi_dot(Activation kind, const CovarianceView& v,
                        ZeroVariance zero = ZeroVariance::Throw);

struct DualMaps {
  Eigen::MatrixXd phi;
  Eigen::MatrixXd phi_dot;
};

/// phi and phi_dot in a single pass (one acos per entry).
DualMaps dual_maps(Activation kind, const CovarianceView& v,
                   ZeroVariance zero = ZeroVariance::Throw);

}  // namespace topontk
