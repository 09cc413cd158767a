#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "topontk/hodge.hpp"
#include "topontk/learn.hpp"
#include "topontk/ntk.hpp"

namespace topontk {

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;  // unbiased sample sd / sqrt(n); 0 when n < 2
};

MeanSe mean_se(std::span<const double> values);

// Stream tags for Rng::derive. Every experiment cell draws from
// derive(master_seed, {tag, cell indices...}).
namespace stream {
inline constexpr std::uint64_t kTriangleSample = 0x7472690001;
inline constexpr std::uint64_t kTriangleSplit = 0x7472690002;
inline constexpr std::uint64_t kHodgeComplex = 0x686f640001;
inline constexpr std::uint64_t kHodgeSignal = 0x686f640002;
inline constexpr std::uint64_t kSpectralComplex = 0x7370650001;
inline constexpr std::uint64_t kStabilityComplex = 0x7374610001;
inline constexpr std::uint64_t kStabilitySignal = 0x7374610002;
inline constexpr std::uint64_t kStabilityFlip = 0x7374610003;
inline constexpr std::uint64_t kSeparationComplex = 0x7365700001;
inline constexpr std::uint64_t kSeparationFlip = 0x7365700002;
}  // namespace stream

// ---------------------------------------------------------------- signals

struct HodgeSignalSample {
  Eigen::VectorXd signal;  // unit norm
  HodgeComponents components;
  std::array<double, 3> weights{1.0, 1.0, 1.0};  // mixing weight per component
  double scale = 1.0;                            // normalization applied to the sum
};

/// Gaussian coefficients in each subspace basis, weighted, summed and scaled
/// to unit norm. Every subspace must be nonempty (DegenerateSubspace).
HodgeSignalSample sample_hodge_signal(const HodgeBasis& basis, std::uint64_t seed,
                                      std::array<double, 3> weights = {1.0, 1.0, 1.0});

/// Sum of one unit-norm Gaussian draw per subspace, mean-centered and
/// rescaled to unit norm.
Eigen::VectorXd mixed_target_signal(const HodgeBasis& basis, std::uint64_t seed);

// ---------------------------------------------------------- triangle count

struct TriangleCountConfig {
  int n = 30;
  std::vector<double> densities{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  int samples_per_density = 200;
  int repetitions = 5;
  double train_frac = 0.7;
  double lambda = 1e-4;
  bool fit_offset = true;  // unpenalized constant offset in the ridge fit
  // Constant features on this skeleton drive some edge variances to exactly
  // zero after one layer, so the derivative map uses s'(0) = 0 there.
  KernelConfig kernel = [] {
    KernelConfig k;
    k.zero_variance = ZeroVariance::ZeroDerivative;
    return k;
  }();
  std::vector<Variant> variants{Variant::Graph, Variant::Lower, Variant::Upper, Variant::Full};
  int threads = 1;
};

struct TriangleCountRow {
  double q = 0.0;
  Variant variant = Variant::Full;
  std::vector<double> rmse_per_rep;
  MeanSe rmse;
  double target_std = 0.0;       // mean over repetitions
  double gram_row_spread = 0.0;  // max over repetitions of max|G - mean G| / max|G|
  double clipped_mass = 0.0;     // max over repetitions
};

struct TriangleCountResult {
  std::vector<TriangleCountRow> rows;
  const TriangleCountRow* find(double q, Variant v) const;
};

TriangleCountResult run_triangle_count(const TriangleCountConfig& cfg, std::uint64_t seed);
void write_csv(std::ostream& out, const TriangleCountResult& r, const TriangleCountConfig& cfg,
               std::uint64_t seed);

// ---------------------------------------------------------- hodge recovery

struct HodgeRecoveryConfig {
  int n = 20;
  double p = 0.35;
  double q = 0.4;
  int n_train = 120;
  int n_test = 60;
  int seeds = 5;
  double lambda = 1e-3;
  int max_resamples = 50;
  KernelConfig kernel{};
  std::vector<Variant> variants{Variant::Lower, Variant::Upper, Variant::Full};
};

/// Mean over test signals of |pred - target| / |target| for the exact,
/// harmonic and coexact targets, using G_ij = x_i^T K x_j and multi-output
/// ridge regression.
std::array<double, 3> hodge_recovery_errors(const Eigen::MatrixXd& k_arch,
                                            std::span<const HodgeSignalSample> train,
                                            std::span<const HodgeSignalSample> test,
                                            double lambda);

struct HodgeRecoveryRow {
  Variant variant = Variant::Full;
  HodgeLabel component = HodgeLabel::Exact;
  std::vector<double> per_seed;
  MeanSe rel_rmse;
};

struct HodgeRecoveryResult {
  std::vector<HodgeRecoveryRow> rows;
  std::vector<std::array<Eigen::Index, 3>> dims;  // per seed
  const HodgeRecoveryRow* find(Variant v, HodgeLabel c) const;
};

HodgeRecoveryResult run_hodge_recovery(const HodgeRecoveryConfig& cfg, std::uint64_t seed);
void write_csv(std::ostream& out, const HodgeRecoveryResult& r, const HodgeRecoveryConfig& cfg,
               std::uint64_t seed);

// ------------------------------------------------------ spectral diagnostic

struct SpectralConfig {
  int n = 30;
  double p = 0.35;
  double q = 0.4;
  std::vector<double> t_grid{0.0, 0.5, 1.0, 2.0, 5.0, 10.0};
  KernelConfig kernel{};  // variant forced to Full
};

struct SpectralMode {
  int index = 0;
  double eigenvalue = 0.0;
  HodgeLabel label = HodgeLabel::Exact;
  std::array<double, 3> energy{};
  double decay_residual = 0.0;  // max over t of | |f_t - u_j| - exp(-kappa_j t) |
  int cluster = 0;
  bool tie = false;
};

struct SpectralResult {
  std::vector<SpectralMode> modes;
  std::array<Eigen::Index, 3> dims{};
  double harmonic_median = 0.0;  // NaN without harmonic modes
  double global_median = 0.0;
  int n_harmonic_modes = 0;
  double max_decay_residual = 0.0;
};

SpectralResult run_spectral_diagnostic(const SpectralConfig& cfg, std::uint64_t seed);
void write_csv(std::ostream& out, const SpectralResult& r);

// --------------------------------------------------------------- stability

struct StabilityConfig {
  int n = 30;
  double p = 0.35;
  double q = 0.4;
  std::vector<double> eps_grid{0.0, 0.02, 0.05, 0.1, 0.2, 0.3};
  std::vector<double> lambdas{1e-4, 1e-3, 1e-2, 1e-1};
  int perturbations_per_run = 3;
  int runs = 5;
  KernelConfig kernel{};  // variant forced to Full unless overridden
  int threads = 1;
};

struct StabilityRecord {
  int run = 0;
  int perturbation = 0;
  double eps = 0.0;
  double lambda = 0.0;
  int n_flipped = 0;
  double delta_k = 0.0;  // |K_X - K_X'|_F / |K_X|_F
  double delta_l = 0.0;  // |L_up - L_up'|_F
  double delta_y = 0.0;  // |yhat_X - yhat_X'| / |yhat_X|
  double kernel_change = 0.0;  // |K_X - K_X'|_F
  double kernel_norm = 0.0;    // |K_X|_F
  double pred_change = 0.0;    // |yhat_X - yhat_X'|
  double pred_norm = 0.0;      // |yhat_X|
  double target_norm = 0.0;    // |y|
  double delta_l_op = 0.0;     // |L_up - L_up'|_2
  double b2_op = 0.0;          // |B2|_2 over the common candidate set
  double b2p_op = 0.0;         // |B2'|_2
  double delta_b2_op = 0.0;    // |B2 - B2'|_2
  double delta_b2_fro = 0.0;   // |B2 - B2'|_F
};

std::vector<StabilityRecord> run_stability(const StabilityConfig& cfg, std::uint64_t seed);
void write_csv(std::ostream& out, std::span<const StabilityRecord> records,
               std::uint64_t seed);

struct StabilityBoundReport {
  double c_k_hat = 0.0;     // max |dK|_F / dL over records with dL > 0
  double c_pred_hat = 0.0;  // max lambda |dyhat| / (dL |y|)
  std::vector<std::array<double, 2>> c_k_by_eps;  // (eps, max ratio)
  bool ratios_finite = true;
  // |dL|_2 <= (|B2|_2 + |B2'|_2) |dB2|_2 and |dL|_F <= (|B2|_2 + |B2'|_2) |dB2|_F
  bool b2_bound_holds = true;
  bool resolvent_bound_holds = true;  // |dyhat| <= |dK|_F |y| / lambda
  bool pred_bound_holds = true;       // |dyhat| <= (c_pred_hat / lambda) dL |y|
  double pearson_dl_kernel_change = 0.0;  // over eps > 0 records (one per pair)
  double spearman_dy_dl_over_lambda = 0.0;
  bool dy_nonincreasing_in_lambda = true;
  // Ensemble-mean delta_y indexed [eps][lambda] over eps > 0.
  std::vector<double> eps_values;
  std::vector<double> lambda_values;
  std::vector<std::vector<double>> mean_delta_y;
};

StabilityBoundReport stability_bound_check(std::span<const StabilityRecord> records);

double pearson(std::span<const double> a, std::span<const double> b);
double spearman(std::span<const double> a, std::span<const double> b);

// -------------------------------------------------------------- separation

struct SeparationConfig {
  int pairs = 50;
  int n = 14;
  double p = 0.45;
  double q = 0.4;
  double flip_eps = 0.3;
  KernelConfig kernel{};
};

struct SeparationPair {
  std::string name;
  int sym_diff = 0;
  bool beta0_bit_equal = false;
  double beta0_max_abs_diff = 0.0;
  double rel_frobenius = 0.0;  // beta > 0 edge-level difference
  double pooled_diff = 0.0;    // 1^T (Theta_X - Theta_X') 1
  bool witness = false;
};

struct SeparationReport {
  std::vector<SeparationPair> pairs;
  int n_separated = 0;      // generated pairs with rel_frobenius > 1e-6
  int n_generated = 0;
  int n_pool_cancel = 0;    // generated pairs with pooled_diff == 0 (logged)
  bool beta0_all_equal = true;
  bool witnesses_pool_separate = true;
};

SeparationReport separation_test(const SeparationConfig& cfg, std::uint64_t seed);
void write_csv(std::ostream& out, const SeparationReport& r);

}  // namespace topontk
