#include "topontk/hodge.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "topontk/error.hpp"

namespace topontk {
namespace {

constexpr double kRankCutoff = 1e-10;
constexpr double kMinGapRatio = 10.0;

// Orthonormal basis of range(m) by thin SVD with a relative cutoff.
Eigen::MatrixXd range_basis(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() == 0 || m.cols() == 0) return Eigen::MatrixXd(m.rows(), 0);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double smax = s.size() > 0 ? s(0) : 0.0;
  if (smax == 0.0) return Eigen::MatrixXd(m.rows(), 0);
  Eigen::Index rank = 0;
  while (rank < s.size() && s(rank) > kRankCutoff * smax) ++rank;
  if (rank < s.size() && s(rank) > 0.0 && s(rank - 1) / s(rank) < kMinGapRatio) {
    throw DegenerateRank(std::string(what) + ": singular value gap " +
                         std::to_string(s(rank - 1)) + " / " + std::to_string(s(rank)) +
                         " is below " + std::to_string(kMinGapRatio));
  }
  return svd.matrixU().leftCols(rank);
}

}  // namespace

Laplacians laplacians(const BoundaryMatrices& bm) {
  const Eigen::MatrixXd b1 = bm.b1.cast<double>();
  const Eigen::MatrixXd b2 = bm.b2.cast<double>();
  return {b1.transpose() * b1, b2 * b2.transpose()};
}

double spectral_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

HodgePropagator build_propagator(const BoundaryMatrices& bm, double gamma, double alpha,
                                 double beta, bool normalize) {
  auto [down, up] = laplacians(bm);
  if (normalize) {
    if (const double s = spectral_norm(down); s > 0.0) down /= s;
    if (const double s = spectral_norm(up); s > 0.0) up /= s;
  }
  HodgePropagator hp;
  hp.gamma = gamma;
  hp.alpha = alpha;
  hp.beta = beta;
  hp.normalized = normalize;
  const Eigen::Index n = down.rows();
  hp.p = gamma * Eigen::MatrixXd::Identity(n, n);
  if (alpha != 0.0) hp.p += alpha * down;
  if (beta != 0.0) hp.p += beta * up;
  hp.l_down = std::move(down);
  hp.l_up = std::move(up);
  return hp;
}

HodgeBasis hodge_basis(const BoundaryMatrices& bm) {
  const Eigen::Index n_edges = bm.b1.cols();
  HodgeBasis basis;
  basis.exact = range_basis(bm.b1.cast<double>().transpose(), "B1^T");
  basis.coexact = range_basis(bm.b2.cast<double>(), "B2");
  if (bm.b2.cols() == 0) basis.coexact.resize(n_edges, 0);

  const Eigen::Index r = basis.exact.cols() + basis.coexact.cols();
  if (r > n_edges) throw DegenerateRank("exact and coexact ranks exceed |E|");
  if (r == 0) {
    basis.harmonic = Eigen::MatrixXd::Identity(n_edges, n_edges);
    return basis;
  }
  Eigen::MatrixXd both(n_edges, r);
  both << basis.exact, basis.coexact;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(both);
  const Eigen::MatrixXd q = qr.householderQ();
  basis.harmonic = q.rightCols(n_edges - r);
  return basis;
}

HodgeComponents project(const HodgeBasis& basis, const Eigen::VectorXd& x) {
  if (x.size() != basis.n_edges()) {
    throw DimensionMismatch("signal has " + std::to_string(x.size()) + " entries, complex has " +
                            std::to_string(basis.n_edges()) + " edges");
  }
  return {basis.exact * (basis.exact.transpose() * x),
          basis.harmonic * (basis.harmonic.transpose() * x),
          basis.coexact * (basis.coexact.transpose() * x)};
}

Eigen::MatrixXd projector(const Eigen::MatrixXd& basis) {
  return basis * basis.transpose();
}

}  // namespace topontk
