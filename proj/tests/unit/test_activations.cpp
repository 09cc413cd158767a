#include <doctest.h>

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "support.hpp"
#include "topontk/activations.hpp"
#include "topontk/error.hpp"
#include "topontk/rng.hpp"

using namespace topontk;

namespace {

Eigen::MatrixXd scalar_phi(Activation a, double cross, double vx, double vy,
                           ZeroVariance z = ZeroVariance::Throw, bool dot = false) {
  Eigen::MatrixXd c(1, 1);
  c(0, 0) = cross;
  Eigen::VectorXd dx(1), dy(1);
  dx(0) = vx;
  dy(0) = vy;
  const CovarianceView v{c, dx, dy};
  return dot ? phi_dot(a, v, z) : phi(a, v);
}

}  // namespace

TEST_CASE("closed-form values") {
  CHECK(scalar_phi(Activation::ReLU, 1, 1, 1)(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(scalar_phi(Activation::ReLU, 0, 1, 1)(0, 0) ==
        doctest::Approx(1 / (2 * std::numbers::pi)).epsilon(1e-14));
  CHECK(scalar_phi(Activation::ReLU, 1, 1, 1, ZeroVariance::Throw, true)(0, 0) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(scalar_phi(Activation::ReLU, 0, 1, 1, ZeroVariance::Throw, true)(0, 0) ==
        doctest::Approx(0.25).epsilon(1e-14));
  CHECK(scalar_phi(Activation::ReLU, -1, 1, 1, ZeroVariance::Throw, true)(0, 0) ==
        doctest::Approx(0.0).scale(1));
  // Drift beyond |rho| = 1 is clamped.
  CHECK(scalar_phi(Activation::ReLU, 1 + 1e-12, 1, 1)(0, 0) == doctest::Approx(0.5));
  CHECK(std::isfinite(scalar_phi(Activation::ReLU, -1 - 1e-12, 1, 1, ZeroVariance::Throw, true)(0, 0)));
}

TEST_CASE("Monte Carlo at the reference correlations") {
  const auto z = testing::relu_monte_carlo(1, 1, 0.0, 10'000'000, 99);
  CHECK(std::abs(z.phi_mean - 1 / (2 * std::numbers::pi)) <= 1e-3);
  CHECK(std::abs(z.phi_dot_mean - 0.25) <= 1e-3);
}

TEST_CASE("linear maps") {
  const Eigen::MatrixXd c = testing::random_psd(5, 3);
  const Eigen::VectorXd d = c.diagonal();
  const CovarianceView v{c, d, d};
  CHECK(phi(Activation::Linear, v) == c);
  CHECK(phi_dot(Activation::Linear, v) == Eigen::MatrixXd::Ones(5, 5));
}

TEST_CASE("zero and negative variances") {
  CHECK(scalar_phi(Activation::ReLU, 0, 0, 1)(0, 0) == 0.0);
  CHECK_THROWS_AS(scalar_phi(Activation::ReLU, 0, 0, 1, ZeroVariance::Throw, true),
                  ZeroVarianceDerivative);
  CHECK(scalar_phi(Activation::ReLU, 0, 0, 1, ZeroVariance::ZeroDerivative, true)(0, 0) == 0.0);
  CHECK_THROWS_AS(scalar_phi(Activation::ReLU, 0, -1e-6, 1), NegativeVariance);
  CHECK_NOTHROW(scalar_phi(Activation::ReLU, 0, -1e-12, 1));

  // dual_maps under ZeroDerivative: rows with zero variance get phi_dot 0, the rest unchanged.
  Eigen::MatrixXd c(2, 2);
  c << 0, 0, 0, 1;
  Eigen::VectorXd d(2);
  d << 0, 1;
  const CovarianceView v{c, d, d};
  const auto m = dual_maps(Activation::ReLU, v, ZeroVariance::ZeroDerivative);
  CHECK(m.phi_dot(0, 0) == 0.0);
  CHECK(m.phi_dot(0, 1) == 0.0);
  CHECK(m.phi_dot(1, 1) == doctest::Approx(0.5));
  CHECK(m.phi(1, 1) == doctest::Approx(0.5));
  CHECK(m.phi.row(0).norm() == 0.0);
}

TEST_CASE("dual_maps agrees with the separate maps and the entry oracle") {
  const Eigen::MatrixXd g = testing::random_normal(6, 4, 8);
  const Eigen::MatrixXd h = testing::random_normal(7, 4, 9);
  const Eigen::MatrixXd cross = g * h.transpose() / 4;
  const Eigen::VectorXd dx = (g * g.transpose() / 4).diagonal();
  const Eigen::VectorXd dy = (h * h.transpose() / 4).diagonal();
  const CovarianceView v{cross, dx, dy};
  const auto both = dual_maps(Activation::ReLU, v);
  CHECK((both.phi - phi(Activation::ReLU, v)).norm() <= 1e-15);
  CHECK((both.phi_dot - phi_dot(Activation::ReLU, v)).norm() <= 1e-15);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 7; ++j) {
      CHECK(both.phi(i, j) == doctest::Approx(testing::relu_phi_entry(cross(i, j), dx(i), dy(j))));
      CHECK(both.phi_dot(i, j) ==
            doctest::Approx(testing::relu_phi_dot_entry(cross(i, j), dx(i), dy(j))));
    }
  }
  const Eigen::VectorXd wrong(3);
  CHECK_THROWS_AS(phi(Activation::ReLU, CovarianceView{cross, wrong, dy}), DimensionMismatch);
}

TEST_CASE("ReLU covariance map preserves positive semidefiniteness") {
  for (int s = 0; s < 10; ++s) {
    const Eigen::MatrixXd g = testing::random_normal(12, 3, 40 + s);
    const Eigen::MatrixXd c = g * g.transpose();
    const Eigen::VectorXd d = c.diagonal();
    const Eigen::MatrixXd p = phi(Activation::ReLU, CovarianceView{c, d, d});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(p);
    CHECK(es.eigenvalues().minCoeff() >= -1e-8);
  }
}

TEST_CASE("monotone in the cross covariance") {
  Eigen::VectorXd d(1);
  d << 2.0;
  double prev_phi = -1, prev_dot = -1;
  for (int k = -20; k <= 20; ++k) {
    Eigen::MatrixXd c(1, 1);
    c(0, 0) = 2.0 * k / 20.0;
    const auto m = dual_maps(Activation::ReLU, CovarianceView{c, d, d});
    CHECK(m.phi(0, 0) >= prev_phi);
    CHECK(m.phi_dot(0, 0) >= prev_dot);
    prev_phi = m.phi(0, 0);
    prev_dot = m.phi_dot(0, 0);
  }
}

TEST_CASE("Monte Carlo agreement on random triples") {
  Rng rng(2024);
  for (int t = 0; t < 10; ++t) {
    const double vx = 0.2 + 2 * rng.uniform(), vy = 0.2 + 2 * rng.uniform();
    const double rho = 2 * rng.uniform() - 1;
    const double cross = rho * std::sqrt(vx * vy);
    const auto mc = testing::relu_monte_carlo(vx, vy, rho, 200'000, rng.next_u64());
    CHECK(std::abs(scalar_phi(Activation::ReLU, cross, vx, vy)(0, 0) - mc.phi_mean) <=
          3 * mc.phi_se + 1e-12);
    CHECK(std::abs(scalar_phi(Activation::ReLU, cross, vx, vy, ZeroVariance::Throw, true)(0, 0) -
                   mc.phi_dot_mean) <= 3 * mc.phi_dot_se + 1e-12);
  }
}

TEST_CASE("names") {
  CHECK(parse_activation("relu") == Activation::ReLU);
  CHECK(parse_activation(to_string(Activation::Linear)) == Activation::Linear);
  CHECK_THROWS_AS(parse_activation("tanh"), InvalidArgument);
  CHECK(parse_zero_variance(to_string(ZeroVariance::ZeroDerivative)) == ZeroVariance::ZeroDerivative);
}
