#include "support.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/LU>

#include "topontk/rng.hpp"

namespace topontk::testing {

std::string fixture_path(const std::string& name) {
  return std::string(TOPONTK_FIXTURE_DIR) + "/" + name;
}

Eigen::MatrixXd random_normal(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = rng.normal();
  return m;
}

Eigen::MatrixXd random_psd(int n, std::uint64_t seed) {
  const Eigen::MatrixXd g = random_normal(n, n, seed);
  return g * g.transpose() / n;
}

std::vector<SimplicialComplex> mixed_complexes(int count, std::uint64_t seed) {
  std::vector<SimplicialComplex> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = Rng::derive(seed, {static_cast<std::uint64_t>(i)});
    switch (i % 3) {
      case 0:
        out.push_back(er_clique_complex(8 + i % 13, 0.45, 0.5, s));
        break;
      case 1: {
        const auto cc = cycle_chord_skeleton(5 + i % 20);
        out.push_back(fill_candidates(cc.skeleton, cc.candidates, 0.5, s));
        break;
      }
      default:
        out.push_back(flip_triangles(er_clique_complex(12, 0.5, 0.3, s), 0.4, s + 1));
    }
  }
  return out;
}

std::vector<SimplicialComplex> er_complexes(int count, int n, double p, double q,
                                            std::uint64_t seed) {
  std::vector<SimplicialComplex> out;
  for (std::uint64_t k = 0; static_cast<int>(out.size()) < count; ++k) {
    auto c = er_clique_complex(n, p, q, Rng::derive(seed, {k}));
    if (c.n_edges() > 0) out.push_back(std::move(c));
  }
  return out;
}

int matrix_rank(const Eigen::MatrixXi& m) {
  if (m.size() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m.cast<double>());
  lu.setThreshold(1e-9);
  return static_cast<int>(lu.rank());
}

double relu_phi_entry(double cross, double vx, double vy) {
  const double s = std::sqrt(vx * vy);
  if (s == 0.0) return 0.0;
  const double rho = std::max(-1.0, std::min(1.0, cross / s));
  const double t = std::acos(rho);
  return s / (2 * std::numbers::pi) * (std::sin(t) + (std::numbers::pi - t) * std::cos(t));
}

double relu_phi_dot_entry(double cross, double vx, double vy) {
  const double s = std::sqrt(vx * vy);
  const double rho = std::max(-1.0, std::min(1.0, cross / s));
  return (std::numbers::pi - std::acos(rho)) / (2 * std::numbers::pi);
}

namespace {

struct Maps {
  Eigen::MatrixXd phi, dot;
};

Maps entry_maps(const Eigen::MatrixXd& cross, const Eigen::VectorXd& dx,
                const Eigen::VectorXd& dy, Activation act) {
  Maps m{Eigen::MatrixXd(cross.rows(), cross.cols()), Eigen::MatrixXd(cross.rows(), cross.cols())};
  for (Eigen::Index i = 0; i < cross.rows(); ++i) {
    for (Eigen::Index j = 0; j < cross.cols(); ++j) {
      if (act == Activation::Linear) {
        m.phi(i, j) = cross(i, j);
        m.dot(i, j) = 1.0;
      } else {
        m.phi(i, j) = relu_phi_entry(cross(i, j), dx(i), dy(j));
        m.dot(i, j) = relu_phi_dot_entry(cross(i, j), dx(i), dy(j));
      }
    }
  }
  return m;
}

}  // namespace

NaiveKernel naive_ntk(const Eigen::MatrixXd& px, const Eigen::MatrixXd& py,
                      const Eigen::MatrixXd& s0xy, const Eigen::MatrixXd& s0xx,
                      const Eigen::MatrixXd& s0yy, Activation act, int depth) {
  Eigen::MatrixXd sxy = s0xy, sxx = s0xx, syy = s0yy;
  Eigen::MatrixXd txy = s0xy;
  for (int l = 0; l < depth; ++l) {
    const Eigen::VectorXd dx = sxx.diagonal(), dy = syy.diagonal();
    const Maps xy = entry_maps(sxy, dx, dy, act);
    const Maps xx = entry_maps(sxx, dx, dx, act);
    const Maps yy = entry_maps(syy, dy, dy, act);
    Eigen::MatrixXd txy_in(txy.rows(), txy.cols());
    for (Eigen::Index i = 0; i < txy.rows(); ++i)
      for (Eigen::Index j = 0; j < txy.cols(); ++j) txy_in(i, j) = txy(i, j) * xy.dot(i, j);
    sxy = px * xy.phi * py.transpose();
    sxx = px * xx.phi * px.transpose();
    syy = py * yy.phi * py.transpose();
    txy = px * txy_in * py.transpose() + sxy;
  }
  return {sxy, txy};
}

MonteCarloEstimate relu_monte_carlo(double vx, double vy, double rho, int samples,
                                    std::uint64_t seed) {
  Rng rng(seed);
  const double sx = std::sqrt(vx), sy = std::sqrt(vy);
  const double c = std::sqrt(std::max(0.0, 1.0 - rho * rho));
  double s1 = 0, s2 = 0, d1 = 0, d2 = 0;
  for (int k = 0; k < samples; ++k) {
    const double z1 = rng.normal(), z2 = rng.normal();
    const double u = sx * z1;
    const double v = sy * (rho * z1 + c * z2);
    const double p = std::max(u, 0.0) * std::max(v, 0.0);
    const double d = (u > 0 && v > 0) ? 1.0 : 0.0;
    s1 += p;
    s2 += p * p;
    d1 += d;
    d2 += d * d;
  }
  const double n = samples;
  MonteCarloEstimate e;
  e.phi_mean = s1 / n;
  e.phi_se = std::sqrt(std::max(0.0, (s2 / n - e.phi_mean * e.phi_mean) / (n - 1)));
  e.phi_dot_mean = d1 / n;
  e.phi_dot_se = std::sqrt(std::max(0.0, (d2 / n - e.phi_dot_mean * e.phi_dot_mean) / (n - 1)));
  return e;
}

Eigen::VectorXd euler_flow(const Eigen::MatrixXd& k, const Eigen::VectorXd& y, double t,
                           double dt) {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(y.size());
  const int steps = static_cast<int>(std::llround(t / dt));
  for (int s = 0; s < steps; ++s) f -= dt * (k * (f - y));
  return f;
}

}  // namespace topontk::testing
