#pragma once

#include <array>

#include <Eigen/Core>

#include "topontk/complex.hpp"

namespace topontk {

struct Laplacians {
  Eigen::MatrixXd down;  // B1^T B1
  Eigen::MatrixXd up;    // B2 B2^T
};

Laplacians laplacians(const BoundaryMatrices& bm);

/// Largest eigenvalue of a symmetric PSD matrix (0 for an empty matrix).
double spectral_norm(const Eigen::MatrixXd& m);

/// P = gamma I + alpha L_down + beta L_up, optionally with each Laplacian
/// divided by its own largest eigenvalue first. Zero Laplacians stay zero.
struct HodgePropagator {
  double gamma = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  Eigen::MatrixXd l_down;  // after normalization, if requested
  Eigen::MatrixXd l_up;
  Eigen::MatrixXd p;
  bool normalized = false;
};

HodgePropagator build_propagator(const BoundaryMatrices& bm, double gamma, double alpha,
                                 double beta, bool normalize);

/// Orthonormal bases of the exact, harmonic and coexact subspaces of C^1.
struct HodgeBasis {
  Eigen::MatrixXd exact;     // |E| x rank(B1)
  Eigen::MatrixXd harmonic;  // |E| x (|E| - rank B1 - rank B2)
  Eigen::MatrixXd coexact;   // |E| x rank(B2)

  Eigen::Index n_edges() const { return exact.rows(); }
  std::array<Eigen::Index, 3> dims() const {
    return {exact.cols(), harmonic.cols(), coexact.cols()};
  }
};

/// Singular values kept above 1e-10 * sigma_max. Raises DegenerateRank when
/// the last kept and first dropped singular values are within a factor 10.
HodgeBasis hodge_basis(const BoundaryMatrices& bm);

struct HodgeComponents {
  Eigen::VectorXd exact;
  Eigen::VectorXd harmonic;
  Eigen::VectorXd coexact;
};

HodgeComponents project(const HodgeBasis& basis, const Eigen::VectorXd& x);

/// U U^T for an orthonormal column basis U.
Eigen::MatrixXd projector(const Eigen::MatrixXd& basis);

}  // namespace topontk
