#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "support.hpp"
#include "topontk/error.hpp"
#include "topontk/hodge.hpp"
#include "topontk/learn.hpp"
#include "topontk/ntk.hpp"

using namespace topontk;

namespace {

// sum_j kappa_j / (kappa_j + lambda) <y, u_j> u_j from an independent solver.
Eigen::VectorXd eigen_form(const Eigen::MatrixXd& k, const Eigen::VectorXd& y, double lambda) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(y.size());
  for (Eigen::Index j = 0; j < k.rows(); ++j) {
    const double kj = es.eigenvalues()(j);
    out += kj / (kj + lambda) * es.eigenvectors().col(j).dot(y) * es.eigenvectors().col(j);
  }
  return out;
}

Eigen::VectorXd range_projection(const Eigen::MatrixXd& k, const Eigen::VectorXd& y) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k);
  const double tol = 1e-10 * es.eigenvalues().cwiseAbs().maxCoeff();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(y.size());
  for (Eigen::Index j = 0; j < k.rows(); ++j)
    if (es.eigenvalues()(j) > tol)
      out += es.eigenvectors().col(j).dot(y) * es.eigenvectors().col(j);
  return out;
}

// Low-rank PSD matrix with exact zero modes.
Eigen::MatrixXd low_rank_psd(int n, int r, std::uint64_t seed) {
  const Eigen::MatrixXd g = testing::random_normal(n, r, seed);
  return g * g.transpose() / r;
}

}  // namespace

TEST_CASE("ridge closed forms") {
  const Eigen::VectorXd y = testing::random_normal(6, 1, 1).col(0);
  const auto m = krr_fit(Eigen::MatrixXd::Identity(6, 6), y, 1.0);
  CHECK((m.fitted().col(0) - y / 2).norm() <= 1e-14);

  const Eigen::MatrixXd k = testing::random_psd(10, 2);
  const Eigen::VectorXd t = testing::random_normal(10, 1, 3).col(0);
  double prev = INFINITY;
  for (double lambda : {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0}) {
    const double norm = krr_fit(k, t, lambda).fitted().norm();
    CHECK(norm < prev);
    prev = norm;
  }
  CHECK_THROWS_AS(krr_fit(k, t, 0.0), InvalidArgument);
  CHECK_THROWS_AS(krr_fit(k, Eigen::VectorXd::Zero(4), 1.0), DimensionMismatch);
}

TEST_CASE("ridge fit matches the eigen form") {
  for (int n : {5, 20, 60, 100}) {
    const Eigen::MatrixXd k = testing::random_psd(n, 10 + n);
    const Eigen::VectorXd y = testing::random_normal(n, 1, 20 + n).col(0);
    const auto m = krr_fit(k, y, 1e-4);
    const Eigen::VectorXd expected = eigen_form(k, y, 1e-4);
    CHECK((m.fitted().col(0) - expected).norm() <= 1e-8 * expected.norm());
    const Eigen::MatrixXd shifted = k + 1e-4 * Eigen::MatrixXd::Identity(n, n);
    CHECK((shifted * m.dual_coeffs - y).norm() <= 1e-8 * y.norm());
  }
}

TEST_CASE("multi-output targets solve column by column") {
  const Eigen::MatrixXd k = testing::random_psd(12, 4);
  const Eigen::MatrixXd y = testing::random_normal(12, 3, 5);
  const auto m = krr_fit(k, y, 1e-2);
  for (int j = 0; j < 3; ++j) {
    CHECK((m.dual_coeffs.col(j) - krr_fit(k, y.col(j), 1e-2).dual_coeffs).norm() <= 1e-12);
  }
}

TEST_CASE("prediction") {
  const Eigen::MatrixXd k = testing::random_psd(8, 7);
  const Eigen::VectorXd y = testing::random_normal(8, 1, 8).col(0);
  const auto m = krr_fit(k, y, 1e-3);
  CHECK((krr_predict(m, k) - m.fitted()).norm() <= 1e-12);
  CHECK(krr_predict(m, Eigen::MatrixXd::Zero(3, 8)).norm() == 0.0);
  CHECK_THROWS_AS(krr_predict(m, Eigen::MatrixXd::Zero(3, 7)), DimensionMismatch);

  // One-hot training signals under the identity kernel.
  const double lambda = 0.25;
  const Eigen::MatrixXd g = Eigen::MatrixXd::Identity(5, 5);
  const Eigen::VectorXd labels = testing::random_normal(5, 1, 9).col(0);
  const auto one_hot = krr_fit(g, labels, lambda);
  const Eigen::MatrixXd at_train = krr_predict(one_hot, g.row(2));
  CHECK(at_train(0, 0) == doctest::Approx(labels(2) / (1 + lambda)));
}

TEST_CASE("unpenalized offset") {
  for (int s = 0; s < 5; ++s) {
    const int n = 15;
    const Eigen::MatrixXd k = low_rank_psd(n, 3, 30 + s);
    const Eigen::MatrixXd y = (testing::random_normal(n, 2, 40 + s).array() + 5.0).matrix();
    const double lambda = 1e-2;
    const auto m = krr_fit_offset(k, y, lambda);

    // Brute-force bordered system [[K + lambda I, 1], [1^T, 0]] [c; b] = [y; 0].
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, n + 1);
    a.topLeftCorner(n, n) = k + lambda * Eigen::MatrixXd::Identity(n, n);
    a.topRightCorner(n, 1).setOnes();
    a.bottomLeftCorner(1, n).setOnes();
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n + 1, 2);
    rhs.topRows(n) = y;
    const Eigen::MatrixXd sol = a.fullPivLu().solve(rhs);
    CHECK((m.dual_coeffs - sol.topRows(n)).norm() <= 1e-9 * sol.norm());
    CHECK((m.offset - sol.bottomRows(1)).norm() <= 1e-9 * sol.norm());
    CHECK(m.dual_coeffs.colwise().sum().norm() <= 1e-9 * m.dual_coeffs.norm());

    const Eigen::MatrixXd cross = testing::random_normal(4, n, 50 + s);
    CHECK((krr_predict(m, cross) - ((cross * m.dual_coeffs).rowwise() + m.offset)).norm() <= 1e-12);
  }
  // A constant kernel predicts the training mean.
  const Eigen::VectorXd y = testing::random_normal(9, 1, 3).col(0);
  const auto flat = krr_fit_offset(Eigen::MatrixXd::Constant(9, 9, 2.0), y, 1e-4);
  CHECK((flat.fitted().col(0).array() - y.mean()).abs().maxCoeff() <= 1e-10);
  CHECK(krr_fit(Eigen::MatrixXd::Identity(3, 3), Eigen::VectorXd::Ones(3), 1.0).offset.norm() == 0.0);
}

TEST_CASE("kernel gradient flow") {
  for (int s = 0; s < 3; ++s) {
    const Eigen::MatrixXd k = testing::random_psd(20, 60 + s);
    const Eigen::VectorXd y = testing::random_normal(20, 1, 70 + s).col(0);
    CHECK(kernel_gradient_flow(k, y, 0.0).norm() == 0.0);
    for (double t : {0.5, 2.0, 5.0}) {
      const Eigen::VectorXd closed = kernel_gradient_flow(k, y, t);
      const Eigen::VectorXd euler = testing::euler_flow(k, y, t, 1e-3);
      CHECK((closed - euler).norm() <= 1e-3 * closed.norm());
    }
  }

  const Eigen::MatrixXd k = low_rank_psd(12, 4, 90);
  const Eigen::VectorXd y = testing::random_normal(12, 1, 91).col(0);
  const Eigen::VectorXd limit = range_projection(k, y);
  CHECK((kernel_gradient_flow(k, y, 1e4) - limit).norm() <= 1e-8 * limit.norm());
  CHECK((krr_fit(k, y, 1e-10).fitted().col(0) - kernel_gradient_flow(k, y, 1e4)).norm() <=
        1e-4 * limit.norm());

  // Zero modes are never learned.
  const auto eig = symmetric_eigen(k);
  for (double t : {0.1, 1.0, 100.0}) {
    const Eigen::VectorXd f = kernel_gradient_flow(eig, y, t);
    for (Eigen::Index j = 4; j < 12; ++j) CHECK(std::abs(eig.vectors.col(j).dot(f)) <= 1e-10);
  }
  CHECK_THROWS_AS(kernel_gradient_flow(k, y, -1.0), InvalidArgument);
}

TEST_CASE("symmetric eigen") {
  const Eigen::MatrixXd k = testing::random_psd(15, 4);
  const auto e = symmetric_eigen(k);
  for (Eigen::Index j = 1; j < 15; ++j) CHECK(e.values(j - 1) >= e.values(j));
  CHECK((e.vectors.transpose() * e.vectors - Eigen::MatrixXd::Identity(15, 15)).norm() <= 1e-8);
  for (Eigen::Index j = 0; j < 15; ++j)
    CHECK((k * e.vectors.col(j) - e.values(j) * e.vectors.col(j)).norm() <= 1e-8 * e.values(0));
}

TEST_CASE("eigen diagnostic") {
  const auto c = er_clique_complex(14, 0.4, 0.4, 8);
  const auto basis = hodge_basis(boundary_matrices(c));
  REQUIRE(basis.dims()[1] > 0);

  const auto dh = eigen_diagnostic(projector(basis.harmonic), basis);
  for (Eigen::Index j = 0; j < basis.dims()[1]; ++j) {
    CHECK(dh.eigenvalues(j) == doctest::Approx(1.0));
    CHECK(dh.labels[j] == HodgeLabel::Harmonic);
    CHECK(dh.energies(j, 1) == doctest::Approx(1.0));
  }

  KernelConfig lin;
  lin.activation = Activation::Linear;
  const Eigen::MatrixXd k = architecture_operator(c, lin);
  const auto d = eigen_diagnostic(k, basis);
  const double kmax = d.eigenvalues(0);
  for (Eigen::Index j = 0; j < k.rows(); ++j) {
    CHECK(d.energies.row(j).sum() == doctest::Approx(1.0).epsilon(1e-10));
    CHECK((k * d.eigenvectors.col(j) - d.eigenvalues(j) * d.eigenvectors.col(j)).norm() <=
          1e-8 * kmax);
    Eigen::Index best = 0;
    d.energies.row(j).maxCoeff(&best);
    CHECK(static_cast<int>(d.labels[j]) == best);
    // Clustered eigenvalues can mix subspaces; only isolated modes are pure.
    const bool isolated = (j == 0 || d.cluster[j] != d.cluster[j - 1]) &&
                          (j + 1 == k.rows() || d.cluster[j] != d.cluster[j + 1]);
    if (isolated) CHECK(1.0 - d.energies(j, best) <= 1e-6);

    // Decay of a single mode under the flow.
    for (double t : {0.5, 3.0}) {
      const Eigen::VectorXd u = d.eigenvectors.col(j);
      const double resid = (kernel_gradient_flow(k, u, t) - u).norm();
      CHECK(std::abs(resid - std::exp(-d.eigenvalues(j) * t)) <= 1e-8);
    }
  }
  CHECK(to_string(HodgeLabel::Coexact) == "coexact");
}
