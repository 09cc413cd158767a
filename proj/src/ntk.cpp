#include "topontk/ntk.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "topontk/error.hpp"
#include "topontk/parallel.hpp"
#include "topontk/rng.hpp"

namespace topontk {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Graph: return "graph";
    case Variant::Lower: return "lower";
    case Variant::Upper: return "upper";
    case Variant::Full: return "full";
  }
  return "full";
}

Variant parse_variant(std::string_view name) {
  if (name == "graph") return Variant::Graph;
  if (name == "lower") return Variant::Lower;
  if (name == "upper") return Variant::Upper;
  if (name == "full") return Variant::Full;
  throw InvalidArgument("unknown variant '" + std::string(name) + "'");
}

void KernelConfig::validate() const {
  if (depth < 1) throw InvalidArgument("depth must be >= 1, got " + std::to_string(depth));
  if (!std::isfinite(gamma) || !std::isfinite(alpha) || !std::isfinite(beta)) {
    throw InvalidArgument("propagator weights must be finite");
  }
}

EdgeFeatures::EdgeFeatures(Eigen::MatrixXd values) : values_(std::move(values)) {
  if (values_.cols() < 1) throw InvalidArgument("edge features need d >= 1");
  if (!values_.allFinite()) throw InvalidArgument("edge features must be finite");
}

EdgeFeatures EdgeFeatures::constant(Eigen::Index n_edges, Eigen::Index dim) {
  return EdgeFeatures(Eigen::MatrixXd::Ones(n_edges, dim));
}

Eigen::MatrixXd initial_covariance(const EdgeFeatures& fx, const EdgeFeatures& fy) {
  if (fx.dim() != fy.dim()) {
    throw FeatureDimMismatch("feature dims " + std::to_string(fx.dim()) + " and " +
                             std::to_string(fy.dim()));
  }
  return fx.values() * fy.values().transpose() / static_cast<double>(fx.dim());
}

HodgePropagator kernel_propagator(const SimplicialComplex& complex, const KernelConfig& cfg) {
  return build_propagator(boundary_matrices(complex), cfg.gamma, cfg.effective_alpha(),
                          cfg.effective_beta(), cfg.normalize_laplacians);
}

namespace {

struct SelfStream {
  Eigen::MatrixXd sigma;
  Eigen::MatrixXd theta;
  std::vector<Eigen::VectorXd> diag;  // Sigma^(l) diagonals, l = 0 .. depth-1
};

SelfStream self_stream(const Eigen::MatrixXd& p, Eigen::MatrixXd sigma0, Activation act,
                       int depth, bool want_theta, ZeroVariance zero = ZeroVariance::Throw) {
  SelfStream s;
  s.sigma = std::move(sigma0);
  if (want_theta) s.theta = s.sigma;
  for (int l = 0; l < depth; ++l) {
    const Eigen::VectorXd d = s.sigma.diagonal();
    s.diag.push_back(d);
    const CovarianceView view{s.sigma, d, d};
    if (want_theta) {
      DualMaps m = dual_maps(act, view, zero);
      const Eigen::MatrixXd next_sigma = p * m.phi * p.transpose();
      s.theta = p * s.theta.cwiseProduct(m.phi_dot) * p.transpose() + next_sigma;
      s.sigma = next_sigma;
    } else {
      s.sigma = p * phi(act, view) * p.transpose();
    }
  }
  return s;
}

}  // namespace

KernelState ntk_recursion(const Eigen::MatrixXd& px, const Eigen::MatrixXd& py,
                          const Eigen::MatrixXd& sigma0_xy, const Eigen::MatrixXd& sigma0_xx,
                          const Eigen::MatrixXd& sigma0_yy, Activation activation, int depth,
                          ZeroVariance zero) {
  if (depth < 0) throw InvalidArgument("negative depth");
  if (px.rows() != px.cols() || py.rows() != py.cols() || sigma0_xy.rows() != px.rows() ||
      sigma0_xy.cols() != py.rows() || sigma0_xx.rows() != px.rows() ||
      sigma0_yy.rows() != py.rows()) {
    throw DimensionMismatch("propagator and covariance shapes disagree");
  }
  const SelfStream xx = self_stream(px, sigma0_xx, activation, depth, true, zero);
  const SelfStream yy = self_stream(py, sigma0_yy, activation, depth, true, zero);

  KernelState st;
  st.sigma_xy = sigma0_xy;
  st.theta_xy = sigma0_xy;
  for (int l = 0; l < depth; ++l) {
    const CovarianceView view{st.sigma_xy, xx.diag[l], yy.diag[l]};
    DualMaps m = dual_maps(activation, view, zero);
    Eigen::MatrixXd next_sigma = px * m.phi * py.transpose();
    st.theta_xy = px * st.theta_xy.cwiseProduct(m.phi_dot) * py.transpose() + next_sigma;
    st.sigma_xy = std::move(next_sigma);
  }
  st.sigma_xx = xx.sigma;
  st.theta_xx = xx.theta;
  st.sigma_yy = yy.sigma;
  st.theta_yy = yy.theta;
  st.layer = depth;
  return st;
}

KernelState ntk_pair(const SimplicialComplex& x, const SimplicialComplex& y,
                     const EdgeFeatures& fx, const EdgeFeatures& fy, const KernelConfig& cfg) {
  cfg.validate();
  if (fx.n_edges() != static_cast<Eigen::Index>(x.n_edges()) ||
      fy.n_edges() != static_cast<Eigen::Index>(y.n_edges())) {
    throw DimensionMismatch("feature rows must match edge counts");
  }
  const auto px = kernel_propagator(x, cfg).p;
  const auto py = kernel_propagator(y, cfg).p;
  return ntk_recursion(px, py, initial_covariance(fx, fy), initial_covariance(fx, fx),
                       initial_covariance(fy, fy), cfg.activation, cfg.depth, cfg.zero_variance);
}

Eigen::MatrixXd architecture_operator(const SimplicialComplex& complex, const KernelConfig& cfg) {
  cfg.validate();
  const auto p = kernel_propagator(complex, cfg).p;
  const Eigen::Index n = p.rows();
  SelfStream s =
      self_stream(p, Eigen::MatrixXd::Identity(n, n), cfg.activation, cfg.depth, true,
                  cfg.zero_variance);
  if (cfg.trace_normalize && n > 0) {
    const double tr = s.theta.trace();
    if (tr > 0.0) s.theta *= static_cast<double>(n) / tr;
  }
  return s.theta;
}

double pooled_kernel(const KernelState& state, const KernelConfig& cfg) {
  const double total = state.theta_xy.sum();
  if (!cfg.pool_normalize) return total;
  const double scale =
      std::sqrt(static_cast<double>(state.theta_xy.rows()) * static_cast<double>(state.theta_xy.cols()));
  return scale > 0.0 ? total / scale : 0.0;
}

PreparedInput prepare_input(const Eigen::MatrixXd& p, const Eigen::MatrixXd& features,
                            Activation activation, int depth) {
  if (depth < 1) throw InvalidArgument("depth must be >= 1");
  if (p.rows() != features.rows()) throw DimensionMismatch("propagator / feature rows differ");
  PreparedInput in;
  in.p = p;
  in.features = features;
  const Eigen::MatrixXd s0 = features * features.transpose() / static_cast<double>(features.cols());
  in.sigma_diag = self_stream(p, s0, activation, depth, false).diag;
  in.p_t_ones = p.transpose() * Eigen::VectorXd::Ones(p.rows());
  return in;
}

namespace {

// Layer 0 for scalar features in closed form. Sigma^(0) = f g^T has rank
// one, so rho = +-1 everywhere and Theta^(0) .* PhiDot + Phi = L R^T with at
// most two columns; Phi itself is half of that for both activations.
// Returns false when a variance is too small for the closed form to match
// the entrywise maps.
bool scalar_feature_layer(const PreparedInput& a, const PreparedInput& b, Activation act,
                          Eigen::MatrixXd& left, Eigen::MatrixXd& right) {
  if (a.features.cols() != 1 || b.features.cols() != 1) return false;
  const Eigen::VectorXd f = a.features.col(0);
  const Eigen::VectorXd g = b.features.col(0);
  if (act == Activation::Linear) {
    left = std::sqrt(2.0) * f;
    right = std::sqrt(2.0) * g;
    return true;
  }
  constexpr double kTol = 1e-12;
  if ((f.array().square() <= kTol).any() || (g.array().square() <= kTol).any()) return false;
  left.resize(f.size(), 2);
  right.resize(g.size(), 2);
  left.col(0) = f.cwiseMax(0.0);
  left.col(1) = (-f).cwiseMax(0.0);
  right.col(0) = g.cwiseMax(0.0);
  right.col(1) = (-g).cwiseMax(0.0);
  return true;
}

}  // namespace

double pooled_pair(const PreparedInput& a, const PreparedInput& b, Activation activation,
                   int depth, bool pool_normalize, ZeroVariance zero) {
  if (a.features.cols() != b.features.cols()) {
    throw FeatureDimMismatch("feature dims " + std::to_string(a.features.cols()) + " and " +
                             std::to_string(b.features.cols()));
  }
  Eigen::MatrixXd sigma, theta;
  double total = 0.0;
  int start = 0;
  Eigen::MatrixXd left, right;
  if (scalar_feature_layer(a, b, activation, left, right)) {
    if (depth == 1) {
      total = (a.p_t_ones.transpose() * left).dot(right.transpose() * b.p_t_ones);
    } else {
      theta.noalias() = (a.p * left) * (b.p * right).transpose();
      sigma = 0.5 * theta;
    }
    start = 1;
  } else {
    sigma = a.features * b.features.transpose() / static_cast<double>(a.features.cols());
    theta = sigma;
  }
  for (int l = start; l < depth; ++l) {
    const CovarianceView view{sigma, a.sigma_diag[l], b.sigma_diag[l]};
    DualMaps m = dual_maps(activation, view, zero);
    // Theta^(l+1) = P_a [Theta .* PhiDot + Phi] P_b^T
    Eigen::MatrixXd inner = theta.cwiseProduct(m.phi_dot) + m.phi;
    if (l + 1 == depth) {
      total = a.p_t_ones.dot(inner * b.p_t_ones);
    } else {
      theta = a.p * inner * b.p.transpose();
      sigma = a.p * m.phi * b.p.transpose();
    }
  }
  if (!pool_normalize) return total;
  const double scale = std::sqrt(static_cast<double>(a.p.rows()) * static_cast<double>(b.p.rows()));
  return scale > 0.0 ? total / scale : 0.0;
}

GramResult psd_repair(Eigen::MatrixXd gram, bool clip_negative) {
  GramResult r;
  r.gram = 0.5 * (gram + gram.transpose());
  if (!clip_negative || r.gram.size() == 0) return r;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r.gram);
  Eigen::VectorXd vals = es.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals(i) < 0.0) {
      r.clipped_mass += -vals(i);
      ++r.n_clipped;
      vals(i) = 0.0;
    }
  }
  if (r.n_clipped > 0) {
    r.gram = es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().transpose();
    r.gram = 0.5 * (r.gram + r.gram.transpose()).eval();
  }
  return r;
}

GramResult gram_from_prepared(std::span<const PreparedInput> inputs, const KernelConfig& cfg,
                              const GramOptions& opts) {
  const auto n = static_cast<Eigen::Index>(inputs.size());
  Eigen::MatrixXd g(n, n);
  // Row i owns the entries (i, j >= i).
  parallel_for(inputs.size(), opts.threads, [&](std::size_t i) {
    for (std::size_t j = i; j < inputs.size(); ++j) {
      const double v =
          pooled_pair(inputs[i], inputs[j], cfg.activation, cfg.depth, cfg.pool_normalize,
                      cfg.zero_variance);
      g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  });
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) g(i, j) = g(j, i);
  }
  return psd_repair(std::move(g), opts.clip_negative);
}

Eigen::MatrixXd cross_from_prepared(std::span<const PreparedInput> rows,
                                    std::span<const PreparedInput> cols,
                                    const KernelConfig& cfg, int threads) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(cols.size()));
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          pooled_pair(rows[i], cols[j], cfg.activation, cfg.depth, cfg.pool_normalize,
                      cfg.zero_variance);
    }
  });
  return out;
}

GramResult gram_matrix(std::span<const SimplicialComplex> complexes,
                       std::span<const EdgeFeatures> features, const KernelConfig& cfg,
                       const GramOptions& opts) {
  cfg.validate();
  if (complexes.size() != features.size()) {
    throw DimensionMismatch("complex and feature lists differ in length");
  }
  std::vector<PreparedInput> inputs(complexes.size());
  parallel_for(complexes.size(), opts.threads, [&](std::size_t i) {
    if (features[i].n_edges() != static_cast<Eigen::Index>(complexes[i].n_edges())) {
      throw DimensionMismatch("feature rows must match edge counts");
    }
    inputs[i] = prepare_input(kernel_propagator(complexes[i], cfg).p, features[i].values(),
                              cfg.activation, cfg.depth);
  });
  return gram_from_prepared(inputs, cfg, opts);
}

namespace {

Eigen::MatrixXd activate(const Eigen::MatrixXd& z, Activation act) {
  return act == Activation::Linear ? z : Eigen::MatrixXd(z.cwiseMax(0.0));
}

Eigen::MatrixXd activate_grad(const Eigen::MatrixXd& z, Activation act) {
  if (act == Activation::Linear) return Eigen::MatrixXd::Ones(z.rows(), z.cols());
  return (z.array() > 0.0).cast<double>().matrix();
}

Eigen::MatrixXd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.normal();
  }
  return m;
}

// Empirical NTK of a single network.
Eigen::MatrixXd single_network_ntk(const Eigen::MatrixXd& p, const Eigen::MatrixXd& h0,
                                   Activation act, int depth, int width, Rng& rng) {
  const Eigen::Index n = p.rows();
  std::vector<Eigen::MatrixXd> h{h0};       // H^(l), l = 0 .. depth
  std::vector<Eigen::MatrixXd> grad_act;   // s'(Z^(l)), l = 0 .. depth-1
  std::vector<Eigen::MatrixXd> weights;    // standard-normal w^(l)
  for (int l = 0; l < depth; ++l) {
    const Eigen::Index fan_in = h.back().cols();
    weights.push_back(gaussian_matrix(fan_in, width, rng));
    const Eigen::MatrixXd z = h.back() * weights.back() / std::sqrt(static_cast<double>(fan_in));
    grad_act.push_back(activate_grad(z, act));
    h.push_back(p * activate(z, act));
  }
  Eigen::VectorXd a(width);
  for (Eigen::Index r = 0; r < width; ++r) a(r) = rng.normal();
  const double inv_sqrt_w = 1.0 / std::sqrt(static_cast<double>(width));

  // Readout parameters.
  Eigen::MatrixXd ntk = h[depth] * h[depth].transpose() / static_cast<double>(width);

  // g[i] = d f_i / d Z^(l), an n x width matrix per output edge i.
  std::vector<Eigen::MatrixXd> g(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    // d f_i / d H^(L) = e_i a^T / sqrt(w); through P: P(i, :)^T a^T.
    g[i] = (p.row(i).transpose() * a.transpose() * inv_sqrt_w).cwiseProduct(grad_act[depth - 1]);
  }
  for (int l = depth - 1; l >= 0; --l) {
    const double fan_in = static_cast<double>(h[l].cols());
    const Eigen::MatrixXd c = h[l] * h[l].transpose() / fan_in;
    std::vector<Eigen::MatrixXd> cg(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) cg[i] = c * g[i];
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i; j < n; ++j) {
        const double v = cg[i].cwiseProduct(g[j]).sum();
        ntk(i, j) += v;
        if (j != i) ntk(j, i) += v;
      }
    }
    if (l == 0) break;
    // d f_i / d H^(l) = g W^T / sqrt(fan_in); then through P and s'.
    const Eigen::MatrixXd wt = weights[l].transpose() / std::sqrt(fan_in);
    for (Eigen::Index i = 0; i < n; ++i) {
      g[i] = (p.transpose() * (g[i] * wt)).cwiseProduct(grad_act[l - 1]);
    }
  }
  return ntk;
}

}  // namespace

Eigen::MatrixXd finite_width_ntk(const SimplicialComplex& complex, const EdgeFeatures& fx,
                                 const KernelConfig& cfg, int width, int n_nets,
                                 std::uint64_t seed, int threads) {
  cfg.validate();
  if (width < 1 || n_nets < 1) throw InvalidArgument("width and n_nets must be positive");
  if (fx.n_edges() != static_cast<Eigen::Index>(complex.n_edges())) {
    throw DimensionMismatch("feature rows must match edge counts");
  }
  const Eigen::MatrixXd p = kernel_propagator(complex, cfg).p;
  std::vector<Eigen::MatrixXd> per_net(static_cast<std::size_t>(n_nets));
  parallel_for(per_net.size(), threads, [&](std::size_t k) {
    Rng rng(Rng::derive(seed, {0x66776e74ULL, k}));
    per_net[k] = single_network_ntk(p, fx.values(), cfg.activation, cfg.depth, width, rng);
  });
  Eigen::MatrixXd mean = Eigen::MatrixXd::Zero(p.rows(), p.rows());
  for (const auto& k : per_net) mean += k;
  return mean / static_cast<double>(n_nets);
}

}  // namespace topontk
