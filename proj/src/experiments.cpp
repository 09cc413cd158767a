#include "topontk/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>
#include <ostream>
#include <utility>

#include <Eigen/Eigenvalues>

#include "topontk/error.hpp"
#include "topontk/io.hpp"
#include "topontk/parallel.hpp"
#include "topontk/rng.hpp"

namespace topontk {

MeanSe mean_se(std::span<const double> values) {
  MeanSe r;
  const auto n = static_cast<double>(values.size());
  if (values.empty()) return r;
  r.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() < 2) return r;
  double ss = 0.0;
  for (double v : values) ss += (v - r.mean) * (v - r.mean);
  r.se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  return r;
}

namespace {

using S = std::string;

S fmt(double v) { return format_double(v); }
S fmt(std::uint64_t v) { return std::to_string(v); }
S fmt(int v) { return std::to_string(v); }

Eigen::VectorXd gaussian_vector(Eigen::Index n, Rng& rng) {
  Eigen::VectorXd g(n);
  for (Eigen::Index i = 0; i < n; ++i) g(i) = rng.normal();
  return g;
}

double median(std::vector<double> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double operator_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  // Largest singular value via the smaller Gram matrix.
  const Eigen::MatrixXd g = m.rows() <= m.cols() ? Eigen::MatrixXd(m * m.transpose())
                                                 : Eigen::MatrixXd(m.transpose() * m);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

double symmetric_operator_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

int triangle_sym_diff(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Triangle> out;
  std::set_symmetric_difference(a.triangles().begin(), a.triangles().end(),
                                b.triangles().begin(), b.triangles().end(),
                                std::back_inserter(out));
  return static_cast<int>(out.size());
}

}  // namespace

// ---------------------------------------------------------------- signals

HodgeSignalSample sample_hodge_signal(const HodgeBasis& basis, std::uint64_t seed,
                                      std::array<double, 3> weights) {
  const auto dims = basis.dims();
  if (dims[0] == 0 || dims[1] == 0 || dims[2] == 0) {
    throw DegenerateSubspace("Hodge subspace dims (" + std::to_string(dims[0]) + ", " +
                             std::to_string(dims[1]) + ", " + std::to_string(dims[2]) +
                             ") include an empty subspace");
  }
  Rng rng(seed);
  HodgeSignalSample s;
  s.weights = weights;
  s.components.exact = weights[0] * (basis.exact * gaussian_vector(dims[0], rng));
  s.components.harmonic = weights[1] * (basis.harmonic * gaussian_vector(dims[1], rng));
  s.components.coexact = weights[2] * (basis.coexact * gaussian_vector(dims[2], rng));
  const Eigen::VectorXd sum = s.components.exact + s.components.harmonic + s.components.coexact;
  const double norm = sum.norm();
  if (!(norm > 0.0)) throw DegenerateSubspace("mixed signal has zero norm");
  s.scale = 1.0 / norm;
  s.components.exact *= s.scale;
  s.components.harmonic *= s.scale;
  s.components.coexact *= s.scale;
  s.signal = s.components.exact + s.components.harmonic + s.components.coexact;
  return s;
}

Eigen::VectorXd mixed_target_signal(const HodgeBasis& basis, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(basis.n_edges());
  for (const Eigen::MatrixXd* u : {&basis.exact, &basis.harmonic, &basis.coexact}) {
    if (u->cols() == 0) continue;  // empty subspaces contribute nothing
    const Eigen::VectorXd part = *u * gaussian_vector(u->cols(), rng);
    y += part / part.norm();
  }
  if (y.size() > 0) y.array() -= y.mean();
  const double norm = y.norm();
  if (!(norm > 0.0)) throw DegenerateSubspace("mixed target signal vanishes after centering");
  return y / norm;
}

// ---------------------------------------------------------- triangle count

const TriangleCountRow* TriangleCountResult::find(double q, Variant v) const {
  for (const auto& r : rows) {
    if (std::abs(r.q - q) < 1e-12 && r.variant == v) return &r;
  }
  return nullptr;
}

TriangleCountResult run_triangle_count(const TriangleCountConfig& cfg, std::uint64_t seed) {
  if (!(cfg.train_frac > 0.0 && cfg.train_frac < 1.0)) {
    throw InvalidArgument("train_frac must lie in (0, 1)");
  }
  if (cfg.samples_per_density < 2 || cfg.repetitions < 1) {
    throw InvalidArgument("need >= 2 samples and >= 1 repetition");
  }
  if (!(cfg.lambda > 0.0)) throw InvalidArgument("ridge lambda must be positive");
  cfg.kernel.validate();
  const CycleChordSkeleton skel = cycle_chord_skeleton(cfg.n);
  const int n_samples = cfg.samples_per_density;
  const auto n_train = static_cast<int>(std::floor(cfg.train_frac * n_samples + 1e-9));
  if (n_train < 1 || n_train >= n_samples) throw InvalidArgument("degenerate train/test split");
  const int n_test = n_samples - n_train;
  const Eigen::MatrixXd features = EdgeFeatures::constant(
      static_cast<Eigen::Index>(skel.skeleton.n_edges())).values();

  TriangleCountResult result;
  for (std::size_t di = 0; di < cfg.densities.size(); ++di) {
    const double q = cfg.densities[di];
    std::vector<TriangleCountRow> rows(cfg.variants.size());
    for (std::size_t vi = 0; vi < cfg.variants.size(); ++vi) {
      rows[vi].q = q;
      rows[vi].variant = cfg.variants[vi];
    }
    for (int r = 0; r < cfg.repetitions; ++r) {
      std::vector<SimplicialComplex> complexes(n_samples);
      Eigen::VectorXd y(n_samples);
      for (int k = 0; k < n_samples; ++k) {
        complexes[k] = fill_candidates(
            skel.skeleton, skel.candidates, q,
            Rng::derive(seed, {stream::kTriangleSample, static_cast<std::uint64_t>(r),
                               static_cast<std::uint64_t>(di), static_cast<std::uint64_t>(k)}));
        y(k) = static_cast<double>(complexes[k].n_triangles());
      }
      std::vector<int> order(n_samples);
      std::iota(order.begin(), order.end(), 0);
      Rng split(Rng::derive(seed, {stream::kTriangleSplit, static_cast<std::uint64_t>(r),
                                   static_cast<std::uint64_t>(di)}));
      split.shuffle(std::span<int>(order));
      const double target_mean = y.mean();
      const double target_std =
          std::sqrt((y.array() - target_mean).square().sum() / static_cast<double>(n_samples));

      // Variants with equal effective weights share one Gram.
      std::map<std::pair<double, double>, GramResult> cache;
      for (std::size_t vi = 0; vi < cfg.variants.size(); ++vi) {
        const KernelConfig kc = cfg.kernel.with_variant(cfg.variants[vi]);
        const auto key = std::make_pair(kc.effective_alpha(), kc.effective_beta());
        auto it = cache.find(key);
        if (it == cache.end()) {
          std::vector<PreparedInput> inputs(n_samples);
          parallel_for(inputs.size(), cfg.threads, [&](std::size_t k) {
            inputs[k] = prepare_input(kernel_propagator(complexes[k], kc).p, features,
                                      kc.activation, kc.depth);
          });
          it = cache.emplace(key, gram_from_prepared(inputs, kc, {true, cfg.threads})).first;
        }
        const GramResult& g = it->second;

        Eigen::MatrixXd k_train(n_train, n_train), k_cross(n_test, n_train);
        Eigen::VectorXd y_train(n_train), y_test(n_test);
        for (int a = 0; a < n_train; ++a) {
          y_train(a) = y(order[a]);
          for (int b = 0; b < n_train; ++b) k_train(a, b) = g.gram(order[a], order[b]);
        }
        for (int a = 0; a < n_test; ++a) {
          y_test(a) = y(order[n_train + a]);
          for (int b = 0; b < n_train; ++b) k_cross(a, b) = g.gram(order[n_train + a], order[b]);
        }
        const RidgeModel model = cfg.fit_offset ? krr_fit_offset(k_train, y_train, cfg.lambda)
                                                : krr_fit(k_train, y_train, cfg.lambda);
        const Eigen::VectorXd pred = krr_predict(model, k_cross).col(0);
        const double rmse = std::sqrt((pred - y_test).squaredNorm() / n_test);

        const double gmax = g.gram.cwiseAbs().maxCoeff();
        const double spread =
            gmax > 0.0 ? (g.gram.array() - g.gram.mean()).abs().maxCoeff() / gmax : 0.0;

        TriangleCountRow& row = rows[vi];
        row.rmse_per_rep.push_back(rmse);
        row.target_std += target_std / cfg.repetitions;
        row.gram_row_spread = std::max(row.gram_row_spread, spread);
        row.clipped_mass = std::max(row.clipped_mass, g.clipped_mass);
      }
    }
    for (auto& row : rows) {
      row.rmse = mean_se(row.rmse_per_rep);
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

void write_csv(std::ostream& out, const TriangleCountResult& r, const TriangleCountConfig& cfg,
               std::uint64_t seed) {
  CsvWriter csv(out);
  csv.row({"seed", "n", "samples_per_density", "repetitions", "train_frac", "lambda", "depth",
           "activation", "q", "variant", "metric", "value", "stderr"});
  for (const auto& row : r.rows) {
    auto emit = [&](const S& metric, double value, double se) {
      csv.row({fmt(seed), fmt(cfg.n), fmt(cfg.samples_per_density), fmt(cfg.repetitions),
               fmt(cfg.train_frac), fmt(cfg.lambda), fmt(cfg.kernel.depth),
               S(to_string(cfg.kernel.activation)), fmt(row.q), S(to_string(row.variant)), metric,
               fmt(value), fmt(se)});
    };
    emit("rmse", row.rmse.mean, row.rmse.se);
    for (std::size_t i = 0; i < row.rmse_per_rep.size(); ++i) {
      emit("rmse_rep" + std::to_string(i), row.rmse_per_rep[i], 0.0);
    }
    emit("target_std", row.target_std, 0.0);
    emit("gram_row_spread", row.gram_row_spread, 0.0);
    emit("clipped_mass", row.clipped_mass, 0.0);
  }
}

// ---------------------------------------------------------- hodge recovery

std::array<double, 3> hodge_recovery_errors(const Eigen::MatrixXd& k_arch,
                                            std::span<const HodgeSignalSample> train,
                                            std::span<const HodgeSignalSample> test,
                                            double lambda) {
  if (train.empty() || test.empty()) throw InvalidArgument("empty signal set");
  const Eigen::Index e = k_arch.rows();
  const auto nt = static_cast<Eigen::Index>(train.size());
  const auto ns = static_cast<Eigen::Index>(test.size());
  Eigen::MatrixXd xtr(e, nt), xte(e, ns);
  std::array<Eigen::MatrixXd, 3> ytr{Eigen::MatrixXd(nt, e), Eigen::MatrixXd(nt, e),
                                     Eigen::MatrixXd(nt, e)};
  for (Eigen::Index i = 0; i < nt; ++i) {
    const auto& s = train[static_cast<std::size_t>(i)];
    if (s.signal.size() != e) throw DimensionMismatch("signal length differs from kernel size");
    xtr.col(i) = s.signal;
    ytr[0].row(i) = s.components.exact.transpose();
    ytr[1].row(i) = s.components.harmonic.transpose();
    ytr[2].row(i) = s.components.coexact.transpose();
  }
  for (Eigen::Index i = 0; i < ns; ++i) {
    const auto& s = test[static_cast<std::size_t>(i)];
    if (s.signal.size() != e) throw DimensionMismatch("signal length differs from kernel size");
    xte.col(i) = s.signal;
  }
  const Eigen::MatrixXd kx = k_arch * xtr;
  const Eigen::MatrixXd gram = xtr.transpose() * kx;
  const Eigen::MatrixXd cross = xte.transpose() * kx;

  std::array<double, 3> err{};
  for (int c = 0; c < 3; ++c) {
    const Eigen::MatrixXd pred = krr_predict(krr_fit(gram, ytr[c], lambda), cross);
    double acc = 0.0;
    for (Eigen::Index i = 0; i < ns; ++i) {
      const auto& comp = test[static_cast<std::size_t>(i)].components;
      const Eigen::VectorXd& target = c == 0 ? comp.exact : (c == 1 ? comp.harmonic : comp.coexact);
      const double tn = target.norm();
      if (!(tn > 0.0)) throw DegenerateSubspace("test target component has zero norm");
      acc += (pred.row(i).transpose() - target).norm() / tn;
    }
    err[c] = acc / static_cast<double>(ns);
  }
  return err;
}

const HodgeRecoveryRow* HodgeRecoveryResult::find(Variant v, HodgeLabel c) const {
  for (const auto& r : rows) {
    if (r.variant == v && r.component == c) return &r;
  }
  return nullptr;
}

HodgeRecoveryResult run_hodge_recovery(const HodgeRecoveryConfig& cfg, std::uint64_t seed) {
  cfg.kernel.validate();
  HodgeRecoveryResult result;
  for (Variant v : cfg.variants) {
    for (int c = 0; c < 3; ++c) {
      HodgeRecoveryRow row;
      row.variant = v;
      row.component = static_cast<HodgeLabel>(c);
      result.rows.push_back(row);
    }
  }
  for (int s = 0; s < cfg.seeds; ++s) {
    SimplicialComplex complex;
    HodgeBasis basis;
    bool found = false;
    for (int attempt = 0; attempt < cfg.max_resamples && !found; ++attempt) {
      complex = er_clique_complex(
          cfg.n, cfg.p, cfg.q,
          Rng::derive(seed, {stream::kHodgeComplex, static_cast<std::uint64_t>(s),
                             static_cast<std::uint64_t>(attempt)}));
      try {
        basis = hodge_basis(boundary_matrices(complex));
      } catch (const DegenerateRank&) {
        continue;
      }
      const auto d = basis.dims();
      found = d[0] > 0 && d[1] > 0 && d[2] > 0;
    }
    if (!found) {
      throw DegenerateSubspace("no complex with three nonempty Hodge subspaces after " +
                               std::to_string(cfg.max_resamples) + " draws");
    }
    result.dims.push_back(basis.dims());
    std::vector<HodgeSignalSample> train, test;
    for (int i = 0; i < cfg.n_train + cfg.n_test; ++i) {
      auto sample = sample_hodge_signal(
          basis, Rng::derive(seed, {stream::kHodgeSignal, static_cast<std::uint64_t>(s),
                                    static_cast<std::uint64_t>(i)}));
      (i < cfg.n_train ? train : test).push_back(std::move(sample));
    }
    for (std::size_t vi = 0; vi < cfg.variants.size(); ++vi) {
      const Eigen::MatrixXd k = architecture_operator(complex, cfg.kernel.with_variant(cfg.variants[vi]));
      const auto err = hodge_recovery_errors(k, train, test, cfg.lambda);
      for (int c = 0; c < 3; ++c) result.rows[vi * 3 + c].per_seed.push_back(err[c]);
    }
  }
  for (auto& row : result.rows) row.rel_rmse = mean_se(row.per_seed);
  return result;
}

void write_csv(std::ostream& out, const HodgeRecoveryResult& r, const HodgeRecoveryConfig& cfg,
               std::uint64_t seed) {
  CsvWriter csv(out);
  csv.row({"seed", "n", "p", "q", "n_train", "n_test", "seeds", "lambda", "depth", "variant",
           "component", "metric", "value", "stderr"});
  for (const auto& row : r.rows) {
    auto emit = [&](const S& metric, double value, double se) {
      csv.row({fmt(seed), fmt(cfg.n), fmt(cfg.p), fmt(cfg.q), fmt(cfg.n_train), fmt(cfg.n_test),
               fmt(cfg.seeds), fmt(cfg.lambda), fmt(cfg.kernel.depth), S(to_string(row.variant)),
               S(to_string(row.component)), metric, fmt(value), fmt(se)});
    };
    emit("rel_rmse", row.rel_rmse.mean, row.rel_rmse.se);
    for (std::size_t i = 0; i < row.per_seed.size(); ++i) {
      emit("rel_rmse_seed" + std::to_string(i), row.per_seed[i], 0.0);
    }
  }
}

// ------------------------------------------------------ spectral diagnostic

SpectralResult run_spectral_diagnostic(const SpectralConfig& cfg, std::uint64_t seed) {
  const KernelConfig kc = cfg.kernel.with_variant(Variant::Full);
  const SimplicialComplex complex =
      er_clique_complex(cfg.n, cfg.p, cfg.q, Rng::derive(seed, {stream::kSpectralComplex}));
  const HodgeBasis basis = hodge_basis(boundary_matrices(complex));
  const Eigen::MatrixXd k = architecture_operator(complex, kc);
  const EigenDiagnostic diag = eigen_diagnostic(k, basis);
  const SymmetricEigen eig{diag.eigenvalues, diag.eigenvectors};

  SpectralResult r;
  r.dims = basis.dims();
  std::vector<double> all, harmonic;
  for (Eigen::Index j = 0; j < diag.eigenvalues.size(); ++j) {
    SpectralMode m;
    m.index = static_cast<int>(j);
    m.eigenvalue = diag.eigenvalues(j);
    m.label = diag.labels[j];
    for (int s = 0; s < 3; ++s) m.energy[s] = diag.energies(j, s);
    m.cluster = diag.cluster[j];
    m.tie = diag.label_tie[j];
    const Eigen::VectorXd u = diag.eigenvectors.col(j);
    for (double t : cfg.t_grid) {
      const Eigen::VectorXd f = kernel_gradient_flow(eig, u, t);
      const double res = std::abs((f - u).norm() - std::exp(-m.eigenvalue * t));
      m.decay_residual = std::max(m.decay_residual, res);
    }
    r.max_decay_residual = std::max(r.max_decay_residual, m.decay_residual);
    all.push_back(m.eigenvalue);
    if (m.label == HodgeLabel::Harmonic) harmonic.push_back(m.eigenvalue);
    r.modes.push_back(m);
  }
  r.n_harmonic_modes = static_cast<int>(harmonic.size());
  r.harmonic_median = median(std::move(harmonic));
  r.global_median = median(std::move(all));
  return r;
}

void write_csv(std::ostream& out, const SpectralResult& r) {
  CsvWriter csv(out);
  csv.row({"index", "eigenvalue", "label", "e_E", "e_H", "e_C", "decay_residual", "cluster",
           "label_tie"});
  for (const auto& m : r.modes) {
    csv.row({fmt(m.index), fmt(m.eigenvalue), S(to_string(m.label)), fmt(m.energy[0]),
             fmt(m.energy[1]), fmt(m.energy[2]), fmt(m.decay_residual), fmt(m.cluster),
             m.tie ? "1" : "0"});
  }
}

// --------------------------------------------------------------- stability

std::vector<StabilityRecord> run_stability(const StabilityConfig& cfg, std::uint64_t seed) {
  cfg.kernel.validate();
  for (double l : cfg.lambdas) {
    if (!(l > 0.0)) throw InvalidArgument("ridge lambda must be positive");
  }
  struct Base {
    SimplicialComplex complex;
    std::vector<Triangle> candidates;
    Eigen::MatrixXd b2, l_up, k;
    Eigen::VectorXd y;
    std::vector<Eigen::VectorXd> yhat;  // per lambda
    double k_norm = 0.0, b2_op = 0.0;
  };
  std::vector<Base> bases(static_cast<std::size_t>(cfg.runs));
  parallel_for(bases.size(), cfg.threads, [&](std::size_t r) {
    Base& b = bases[r];
    b.complex = er_clique_complex(cfg.n, cfg.p, cfg.q,
                                  Rng::derive(seed, {stream::kStabilityComplex, r}));
    const HodgeBasis basis = hodge_basis(boundary_matrices(b.complex));
    b.y = mixed_target_signal(basis, Rng::derive(seed, {stream::kStabilitySignal, r}));
    b.candidates = three_cliques(b.complex);
    b.b2 = boundary_over_candidates(b.complex, b.candidates).cast<double>();
    b.l_up = b.b2 * b.b2.transpose();
    b.k = architecture_operator(b.complex, cfg.kernel);
    b.k_norm = b.k.norm();
    b.b2_op = operator_norm(b.b2);
    for (double l : cfg.lambdas) b.yhat.push_back(krr_fit(b.k, b.y, l).fitted().col(0));
  });

  const std::size_t n_eps = cfg.eps_grid.size();
  const auto n_pert = static_cast<std::size_t>(cfg.perturbations_per_run);
  const std::size_t n_cells = bases.size() * n_eps * n_pert;
  const std::size_t n_lam = cfg.lambdas.size();
  std::vector<StabilityRecord> records(n_cells * n_lam);
  parallel_for(n_cells, cfg.threads, [&](std::size_t cell) {
    const std::size_t r = cell / (n_eps * n_pert);
    const std::size_t e = (cell / n_pert) % n_eps;
    const std::size_t k = cell % n_pert;
    const Base& b = bases[r];
    const double eps = cfg.eps_grid[e];
    const SimplicialComplex perturbed =
        flip_triangles(b.complex, eps, Rng::derive(seed, {stream::kStabilityFlip, r, e, k}));
    const Eigen::MatrixXd b2p = boundary_over_candidates(perturbed, b.candidates).cast<double>();
    const Eigen::MatrixXd d_b2 = b.b2 - b2p;
    const Eigen::MatrixXd d_l = b.l_up - b2p * b2p.transpose();
    const Eigen::MatrixXd kp = architecture_operator(perturbed, cfg.kernel);
    const double kernel_change = (b.k - kp).norm();

    StabilityRecord base_rec;
    base_rec.run = static_cast<int>(r);
    base_rec.perturbation = static_cast<int>(k);
    base_rec.eps = eps;
    base_rec.n_flipped = triangle_sym_diff(b.complex, perturbed);
    base_rec.kernel_change = kernel_change;
    base_rec.kernel_norm = b.k_norm;
    base_rec.delta_k = b.k_norm > 0.0 ? kernel_change / b.k_norm : 0.0;
    base_rec.delta_l = d_l.norm();
    base_rec.target_norm = b.y.norm();
    base_rec.delta_l_op = symmetric_operator_norm(d_l);
    base_rec.b2_op = b.b2_op;
    base_rec.b2p_op = operator_norm(b2p);
    base_rec.delta_b2_op = operator_norm(d_b2);
    base_rec.delta_b2_fro = d_b2.norm();
    for (std::size_t li = 0; li < n_lam; ++li) {
      StabilityRecord rec = base_rec;
      rec.lambda = cfg.lambdas[li];
      const Eigen::VectorXd yhat_p = krr_fit(kp, b.y, rec.lambda).fitted().col(0);
      rec.pred_change = (b.yhat[li] - yhat_p).norm();
      rec.pred_norm = b.yhat[li].norm();
      rec.delta_y = rec.pred_norm > 0.0 ? rec.pred_change / rec.pred_norm : 0.0;
      records[cell * n_lam + li] = rec;
    }
  });
  return records;
}

void write_csv(std::ostream& out, std::span<const StabilityRecord> records, std::uint64_t seed) {
  CsvWriter csv(out);
  csv.row({"seed", "run", "perturbation", "eps", "lambda", "n_flipped", "delta_k", "delta_l",
           "delta_y", "kernel_change", "kernel_norm", "pred_change", "pred_norm", "target_norm",
           "delta_l_op", "b2_op", "b2p_op", "delta_b2_op", "delta_b2_fro"});
  for (const auto& r : records) {
    csv.row({fmt(seed), fmt(r.run), fmt(r.perturbation), fmt(r.eps), fmt(r.lambda),
             fmt(r.n_flipped), fmt(r.delta_k), fmt(r.delta_l), fmt(r.delta_y),
             fmt(r.kernel_change), fmt(r.kernel_norm), fmt(r.pred_change), fmt(r.pred_norm),
             fmt(r.target_norm), fmt(r.delta_l_op), fmt(r.b2_op), fmt(r.b2p_op),
             fmt(r.delta_b2_op), fmt(r.delta_b2_fro)});
  }
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch("pearson inputs differ in length");
  const auto n = static_cast<double>(a.size());
  if (a.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return std::numeric_limits<double>::quiet_NaN();
  return sab / std::sqrt(saa * sbb);
}

namespace {

// Average ranks, ties share the mean rank.
std::vector<double> ranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return v[x] < v[y]; });
  std::vector<double> r(v.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[idx[k]] = avg;
    i = j + 1;
  }
  return r;
}

}  // namespace

double spearman(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch("spearman inputs differ in length");
  const auto ra = ranks(a);
  const auto rb = ranks(b);
  return pearson(ra, rb);
}

StabilityBoundReport stability_bound_check(std::span<const StabilityRecord> records) {
  StabilityBoundReport rep;
  constexpr double kRel = 1e-12;  // rounding slack on the inequality checks
  std::map<double, double> by_eps;
  for (const auto& r : records) {
    const double bound_op = (r.b2_op + r.b2p_op) * r.delta_b2_op;
    const double bound_fro = (r.b2_op + r.b2p_op) * r.delta_b2_fro;
    if (r.delta_l_op > bound_op * (1.0 + kRel) + kRel || r.delta_l > bound_fro * (1.0 + kRel) + kRel) {
      rep.b2_bound_holds = false;
    }
    if (r.pred_change > r.kernel_change * r.target_norm / r.lambda * (1.0 + kRel) + kRel) {
      rep.resolvent_bound_holds = false;
    }
    if (r.delta_l > 0.0) {
      const double ck = r.kernel_change / r.delta_l;
      const double cp = r.lambda * r.pred_change / (r.delta_l * r.target_norm);
      if (!std::isfinite(ck) || !std::isfinite(cp)) rep.ratios_finite = false;
      rep.c_k_hat = std::max(rep.c_k_hat, ck);
      rep.c_pred_hat = std::max(rep.c_pred_hat, cp);
      by_eps[r.eps] = std::max(by_eps[r.eps], ck);
    } else if (r.kernel_change != 0.0 || r.pred_change != 0.0) {
      rep.ratios_finite = false;  // a kernel change without a Laplacian change
    }
  }
  for (const auto& [eps, c] : by_eps) rep.c_k_by_eps.push_back({eps, c});
  for (const auto& r : records) {
    if (r.delta_l > 0.0 &&
        r.pred_change > rep.c_pred_hat / r.lambda * r.delta_l * r.target_norm * (1.0 + kRel)) {
      rep.pred_bound_holds = false;
    }
  }

  std::vector<double> dl, kc, dy, dl_over_lambda;
  std::map<std::tuple<int, int, double>, bool> seen;
  std::map<double, std::map<double, std::pair<double, int>>> cells;
  for (const auto& r : records) {
    if (!(r.eps > 0.0)) continue;
    if (seen.emplace(std::make_tuple(r.run, r.perturbation, r.eps), true).second) {
      dl.push_back(r.delta_l);
      kc.push_back(r.kernel_change);
    }
    dy.push_back(r.delta_y);
    dl_over_lambda.push_back(r.delta_l / r.lambda);
    auto& cell = cells[r.eps][r.lambda];
    cell.first += r.delta_y;
    cell.second += 1;
  }
  rep.pearson_dl_kernel_change = pearson(dl, kc);
  rep.spearman_dy_dl_over_lambda = spearman(dy, dl_over_lambda);
  for (const auto& [eps, per_lambda] : cells) {
    rep.eps_values.push_back(eps);
    std::vector<double> means;
    if (rep.lambda_values.empty()) {
      for (const auto& [lam, _] : per_lambda) rep.lambda_values.push_back(lam);
    }
    for (const auto& [lam, acc] : per_lambda) means.push_back(acc.first / acc.second);
    for (std::size_t i = 1; i < means.size(); ++i) {
      if (means[i] > means[i - 1]) rep.dy_nonincreasing_in_lambda = false;
    }
    rep.mean_delta_y.push_back(std::move(means));
  }
  return rep;
}

// -------------------------------------------------------------- separation

namespace {

SeparationPair compare_pair(std::string name, const SimplicialComplex& x,
                            const SimplicialComplex& xp, KernelConfig cfg, bool constant_features,
                            bool witness) {
  SeparationPair pair;
  pair.name = std::move(name);
  pair.sym_diff = triangle_sym_diff(x, xp);
  pair.witness = witness;

  // Sigma^(0) = I (architecture operator) or constant features.
  auto theta = [&](const SimplicialComplex& c, const KernelConfig& kc) -> Eigen::MatrixXd {
    if (!constant_features) return architecture_operator(c, kc);
    const auto f = EdgeFeatures::constant(static_cast<Eigen::Index>(c.n_edges()));
    return ntk_pair(c, c, f, f, kc).theta_xy;
  };
  KernelConfig no_up = cfg;
  no_up.beta = 0.0;
  const Eigen::MatrixXd a0 = theta(x, no_up);
  const Eigen::MatrixXd b0 = theta(xp, no_up);
  pair.beta0_bit_equal = a0.size() == b0.size() && (a0.array() == b0.array()).all();
  pair.beta0_max_abs_diff = (a0 - b0).cwiseAbs().maxCoeff();

  const Eigen::MatrixXd a = theta(x, cfg);
  const Eigen::MatrixXd b = theta(xp, cfg);
  const double na = a.norm();
  pair.rel_frobenius = na > 0.0 ? (a - b).norm() / na : (a - b).norm();
  pair.pooled_diff = a.sum() - b.sum();
  return pair;
}

SimplicialComplex filled_triangle(bool filled) {
  std::vector<Triangle> t;
  if (filled) t.push_back({0, 1, 2});
  return SimplicialComplex(3, {{0, 1}, {0, 2}, {1, 2}}, std::move(t));
}

}  // namespace

SeparationReport separation_test(const SeparationConfig& cfg, std::uint64_t seed) {
  cfg.kernel.validate();
  SeparationReport rep;
  constexpr int kMaxAttempts = 100;
  for (int i = 0; i < cfg.pairs; ++i) {
    SimplicialComplex x, xp;
    bool found = false;
    for (int attempt = 0; attempt < kMaxAttempts && !found; ++attempt) {
      const auto tag = {stream::kSeparationComplex, static_cast<std::uint64_t>(i),
                        static_cast<std::uint64_t>(attempt)};
      x = er_clique_complex(cfg.n, cfg.p, cfg.q, Rng::derive(seed, tag));
      xp = flip_triangles(x, cfg.flip_eps,
                          Rng::derive(seed, {stream::kSeparationFlip, static_cast<std::uint64_t>(i),
                                             static_cast<std::uint64_t>(attempt)}));
      found = triangle_sym_diff(x, xp) > 0;
    }
    if (!found) throw InvalidArgument("could not generate a pair with differing triangles");
    SeparationPair p =
        compare_pair("generated-" + std::to_string(i), x, xp, cfg.kernel, false, false);
    ++rep.n_generated;
    if (p.rel_frobenius > 1e-6) ++rep.n_separated;
    if (std::abs(p.pooled_diff) <= 1e-12 * std::max(1.0, static_cast<double>(x.n_edges()))) {
      ++rep.n_pool_cancel;
    }
    rep.pairs.push_back(std::move(p));
  }

  KernelConfig linear = cfg.kernel;
  linear.activation = Activation::Linear;
  linear.depth = 1;
  linear.variant = Variant::Full;
  rep.pairs.push_back(compare_pair("triangle-linear-identity", filled_triangle(false),
                                   filled_triangle(true), linear, false, true));
  KernelConfig relu = cfg.kernel;
  relu.variant = Variant::Full;
  rep.pairs.push_back(compare_pair("triangle-relu-constant", filled_triangle(false),
                                   filled_triangle(true), relu, true, true));
  const CycleChordSkeleton cc = cycle_chord_skeleton(6);
  rep.pairs.push_back(compare_pair("cycle-chord-6", cc.skeleton,
                                   cc.skeleton.with_triangles({cc.candidates.front()}), relu,
                                   true, true));

  for (const auto& p : rep.pairs) {
    if (!p.beta0_bit_equal) rep.beta0_all_equal = false;
    if (p.witness && !(std::abs(p.pooled_diff) > 1e-12)) rep.witnesses_pool_separate = false;
  }
  return rep;
}

void write_csv(std::ostream& out, const SeparationReport& r) {
  CsvWriter csv(out);
  csv.row({"name", "sym_diff", "beta0_bit_equal", "beta0_max_abs_diff", "rel_frobenius",
           "pooled_diff", "witness"});
  for (const auto& p : r.pairs) {
    csv.row({p.name, fmt(p.sym_diff), p.beta0_bit_equal ? "1" : "0", fmt(p.beta0_max_abs_diff),
             fmt(p.rel_frobenius), fmt(p.pooled_diff), p.witness ? "1" : "0"});
  }
}

}  // namespace topontk
