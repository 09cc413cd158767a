#include "topontk/activations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "topontk/error.hpp"

namespace topontk {
namespace {

constexpr double kNegativeTol = 1e-10;
constexpr double kZeroVarianceTol = 1e-12;

void check_diagonals(const CovarianceView& v) {
  if (v.diag_x.size() != v.cross.rows() || v.diag_y.size() != v.cross.cols()) {
    throw DimensionMismatch("covariance view diagonals do not match the cross block");
  }
  const double lo = std::min(v.diag_x.size() ? v.diag_x.minCoeff() : 0.0,
                             v.diag_y.size() ? v.diag_y.minCoeff() : 0.0);
  if (lo < -kNegativeTol) throw NegativeVariance("diagonal entry " + std::to_string(lo));
}

void check_positive(const CovarianceView& v) {
  const double lo = std::min(v.diag_x.size() ? v.diag_x.minCoeff() : 1.0,
                             v.diag_y.size() ? v.diag_y.minCoeff() : 1.0);
  if (lo <= kZeroVarianceTol) {
    throw ZeroVarianceDerivative("ReLU derivative map needs positive variances, got " +
                                 std::to_string(lo));
  }
}

template <bool kPhi, bool kDot>
void relu_pass(const CovarianceView& v, Eigen::MatrixXd* phi_out, Eigen::MatrixXd* dot_out) {
  constexpr double pi = std::numbers::pi;
  const Eigen::Index rows = v.cross.rows();
  const Eigen::Index cols = v.cross.cols();
  if constexpr (kPhi) phi_out->resize(rows, cols);
  if constexpr (kDot) dot_out->resize(rows, cols);
  Eigen::VectorXd sx = v.diag_x.cwiseMax(0.0).cwiseSqrt();
  Eigen::VectorXd sy = v.diag_y.cwiseMax(0.0).cwiseSqrt();
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double s = sx(i) * sy(j);
      if (s == 0.0) {
        if constexpr (kPhi) (*phi_out)(i, j) = 0.0;
        if constexpr (kDot) (*dot_out)(i, j) = 0.0;
        continue;
      }
      if constexpr (kDot) {
        // Only reachable under ZeroVariance::ZeroDerivative.
        if (v.diag_x(i) <= kZeroVarianceTol || v.diag_y(j) <= kZeroVarianceTol) {
          (*dot_out)(i, j) = 0.0;
          if constexpr (kPhi) {
            const double rho = std::clamp(v.cross(i, j) / s, -1.0, 1.0);
            (*phi_out)(i, j) =
                s / (2.0 * pi) * (std::sqrt(1.0 - rho * rho) + (pi - std::acos(rho)) * rho);
          }
          continue;
        }
      }
      const double rho = std::clamp(v.cross(i, j) / s, -1.0, 1.0);
      const double theta = std::acos(rho);
      if constexpr (kPhi) {
        (*phi_out)(i, j) = s / (2.0 * pi) * (std::sqrt(1.0 - rho * rho) + (pi - theta) * rho);
      }
      if constexpr (kDot) (*dot_out)(i, j) = (pi - theta) / (2.0 * pi);
    }
  }
}

}  // namespace

std::string_view to_string(Activation a) {
  return a == Activation::Linear ? "linear" : "relu";
}

std::string_view to_string(ZeroVariance z) {
  return z == ZeroVariance::Throw ? "throw" : "zero-derivative";
}

ZeroVariance parse_zero_variance(std::string_view name) {
  if (name == "throw") return ZeroVariance::Throw;
  if (name == "zero-derivative") return ZeroVariance::ZeroDerivative;
  throw InvalidArgument("unknown zero-variance policy '" + std::string(name) + "'");
}

Activation parse_activation(std::string_view name) {
  if (name == "linear" || name == "Linear") return Activation::Linear;
  if (name == "relu" || name == "ReLU") return Activation::ReLU;
  throw InvalidArgument("unknown activation '" + std::string(name) + "'");
}

Eigen::MatrixXd phi(Activation kind, const CovarianceView& v) {
  check_diagonals(v);
  if (kind == Activation::Linear) return v.cross;
  Eigen::MatrixXd out;
  relu_pass<true, false>(v, &out, nullptr);
  return out;
}

Eigen::MatrixXd phi_dot(Activation kind, const CovarianceView& v, ZeroVariance zero) {
  check_diagonals(v);
  if (kind == Activation::Linear) return Eigen::MatrixXd::Ones(v.cross.rows(), v.cross.cols());
  if (zero == ZeroVariance::Throw) check_positive(v);
  Eigen::MatrixXd out;
  relu_pass<false, true>(v, nullptr, &out);
  return out;
}

DualMaps dual_maps(Activation kind, const CovarianceView& v, ZeroVariance zero) {
  check_diagonals(v);
  DualMaps m;
  if (kind == Activation::Linear) {
    m.phi = v.cross;
    m.phi_dot = Eigen::MatrixXd::Ones(v.cross.rows(), v.cross.cols());
    return m;
  }
  if (zero == ZeroVariance::Throw) check_positive(v);
  relu_pass<true, true>(v, &m.phi, &m.phi_dot);
  return m;
}

}  // namespace topontk
