#pragma once

// Shared helpers and independent oracles for the unit and acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "topontk/activations.hpp"
#include "topontk/complex.hpp"

namespace topontk::testing {

std::string fixture_path(const std::string& name);

/// Random symmetric PSD matrix G G^T / n with Gaussian G (n x n).
Eigen::MatrixXd random_psd(int n, std::uint64_t seed);

/// Random standard-normal matrix.
Eigen::MatrixXd random_normal(int rows, int cols, std::uint64_t seed);

/// Complexes from every generator: ER clique complexes, filled cycle-chord
/// skeletons and flipped ER complexes, cycling through the three.
std::vector<SimplicialComplex> mixed_complexes(int count, std::uint64_t seed);

/// ER clique complexes with at least one edge.
std::vector<SimplicialComplex> er_complexes(int count, int n, double p, double q,
                                            std::uint64_t seed);

int matrix_rank(const Eigen::MatrixXi& m);

/// Loop-based evaluation of the arc-cosine maps for one entry.
double relu_phi_entry(double cross, double vx, double vy);
double relu_phi_dot_entry(double cross, double vx, double vy);

struct NaiveKernel {
  Eigen::MatrixXd sigma_xy;
  Eigen::MatrixXd theta_xy;
};

/// Direct re-implementation of the joint layer recursion with explicit
/// loops over entries; the XX and YY streams are tracked alongside XY.
NaiveKernel naive_ntk(const Eigen::MatrixXd& px, const Eigen::MatrixXd& py,
                      const Eigen::MatrixXd& s0xy, const Eigen::MatrixXd& s0xx,
                      const Eigen::MatrixXd& s0yy, Activation act, int depth);

struct MonteCarloEstimate {
  double phi_mean = 0.0, phi_se = 0.0;
  double phi_dot_mean = 0.0, phi_dot_se = 0.0;
};

/// Gaussian Monte Carlo of E[relu(u) relu(v)] and E[1{u>0} 1{v>0}] for
/// Var u = vx, Var v = vy, corr(u, v) = rho.
MonteCarloEstimate relu_monte_carlo(double vx, double vy, double rho, int samples,
                                    std::uint64_t seed);

/// Forward-Euler integration of df/dt = -K (f - y) from f = 0.
Eigen::VectorXd euler_flow(const Eigen::MatrixXd& k, const Eigen::VectorXd& y, double t,
                           double dt);

}  // namespace topontk::testing
