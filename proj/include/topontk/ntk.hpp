#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "topontk/activations.hpp"
#include "topontk/complex.hpp"
#include "topontk/hodge.hpp"

namespace topontk {

/// Which Hodge channels feed the propagator. Graph is the edge-level alias
/// of Lower: on a fixed skeleton the two coincide.
enum class Variant { Graph, Lower, Upper, Full };

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view name);

struct KernelConfig {
  int depth = 2;
  double gamma = 0.5;
  double alpha = 1.0;
  double beta = 1.0;
  Activation activation = Activation::ReLU;
  bool normalize_laplacians = true;
  bool trace_normalize = true;  // architecture operators only
  bool pool_normalize = true;   // pooled cross-complex kernels only
  Variant variant = Variant::Full;
  ZeroVariance zero_variance = ZeroVariance::Throw;

  /// alpha and beta after the variant mask.
  double effective_alpha() const { return variant == Variant::Upper ? 0.0 : alpha; }
  double effective_beta() const {
    return (variant == Variant::Lower || variant == Variant::Graph) ? 0.0 : beta;
  }
  void validate() const;
  KernelConfig with_variant(Variant v) const {
    KernelConfig c = *this;
    c.variant = v;
    return c;
  }
};

/// |E| x d edge feature matrix with finite entries and d >= 1.
class EdgeFeatures {
 public:
  explicit EdgeFeatures(Eigen::MatrixXd values);
  static EdgeFeatures constant(Eigen::Index n_edges, Eigen::Index dim = 1);

  const Eigen::MatrixXd& values() const { return values_; }
  Eigen::Index n_edges() const { return values_.rows(); }
  Eigen::Index dim() const { return values_.cols(); }

 private:
  Eigen::MatrixXd values_;
};

/// (1/d) F_X F_Y^T.
Eigen::MatrixXd initial_covariance(const EdgeFeatures& fx, const EdgeFeatures& fy);

/// Propagator with the variant mask and normalization from cfg applied.
HodgePropagator kernel_propagator(const SimplicialComplex& complex, const KernelConfig& cfg);

/// Sigma / Theta for the XY pair and both self pairs after `layer` steps.
struct KernelState {
  Eigen::MatrixXd sigma_xy, sigma_xx, sigma_yy;
  Eigen::MatrixXd theta_xy, theta_xx, theta_yy;
  int layer = 0;
};

/// The joint recursion on explicit propagators and initial covariances.
/// Runs `depth` layers of
///   Sigma <- P_X Phi(Sigma) P_Y^T
///   Theta <- P_X [Theta .* PhiDot(Sigma)] P_Y^T + Sigma_next
/// with Theta^(0) = Sigma^(0); the XY stream reads its variances from the
/// XX and YY streams.
KernelState ntk_recursion(const Eigen::MatrixXd& px, const Eigen::MatrixXd& py,
                          const Eigen::MatrixXd& sigma0_xy, const Eigen::MatrixXd& sigma0_xx,
                          const Eigen::MatrixXd& sigma0_yy, Activation activation, int depth,
                          ZeroVariance zero = ZeroVariance::Throw);

KernelState ntk_pair(const SimplicialComplex& x, const SimplicialComplex& y,
                     const EdgeFeatures& fx, const EdgeFeatures& fy, const KernelConfig& cfg);

/// Theta^(L)(X, X) with Sigma^(0) = I; trace-normalized to mean diagonal 1
/// when cfg.trace_normalize.
Eigen::MatrixXd architecture_operator(const SimplicialComplex& complex, const KernelConfig& cfg);

/// 1^T Theta_xy 1, divided by sqrt(|E_X| |E_Y|) when cfg.pool_normalize.
double pooled_kernel(const KernelState& state, const KernelConfig& cfg);

/// Per-input data for repeated pooled evaluations: the propagator, the
/// features and the self-variance diagonals of every layer.
struct PreparedInput {
  Eigen::MatrixXd p;
  Eigen::MatrixXd features;
  std::vector<Eigen::VectorXd> sigma_diag;  // layers 0 .. depth-1
  Eigen::VectorXd p_t_ones;                 // P^T 1
};

PreparedInput prepare_input(const Eigen::MatrixXd& p, const Eigen::MatrixXd& features,
                            Activation activation, int depth);

/// pooled_kernel(ntk_recursion(...)) without forming the last layer's
/// matrices.
double pooled_pair(const PreparedInput& a, const PreparedInput& b, Activation activation,
                   int depth, bool pool_normalize, ZeroVariance zero = ZeroVariance::Throw);

struct GramOptions {
  bool clip_negative = false;
  int threads = 1;
};

struct GramResult {
  Eigen::MatrixXd gram;
  double clipped_mass = 0.0;  // sum of |negative eigenvalues| removed
  int n_clipped = 0;
};

/// Symmetrize (G + G^T)/2 and optionally zero out negative eigenvalues.
GramResult psd_repair(Eigen::MatrixXd gram, bool clip_negative);

GramResult gram_matrix(std::span<const SimplicialComplex> complexes,
                       std::span<const EdgeFeatures> features, const KernelConfig& cfg,
                       const GramOptions& opts = {});

/// Pooled Gram over already-prepared inputs (edge- or node-level).
GramResult gram_from_prepared(std::span<const PreparedInput> inputs, const KernelConfig& cfg,
                              const GramOptions& opts = {});

/// Cross pooled kernels rows x cols (no symmetrization).
Eigen::MatrixXd cross_from_prepared(std::span<const PreparedInput> rows,
                                    std::span<const PreparedInput> cols,
                                    const KernelConfig& cfg, int threads = 1);

/// Empirical edge-level NTK averaged over `n_nets` random finite-width
/// networks H <- P s(H W / sqrt(m)) with standard-normal weights and a
/// scalar readout (1/sqrt(m)) sum_r a_r H_{ir}. Gradients are taken with
/// respect to the standard-normal parameters.
Eigen::MatrixXd finite_width_ntk(const SimplicialComplex& complex, const EdgeFeatures& fx,
                                 const KernelConfig& cfg, int width, int n_nets,
                                 std::uint64_t seed, int threads = 1);

}  // namespace topontk
