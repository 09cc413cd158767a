#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "topontk/complex.hpp"
#include "topontk/dblp.hpp"
#include "topontk/error.hpp"
#include "topontk/experiments.hpp"
#include "topontk/io.hpp"
#include "topontk/ntk.hpp"
#include "topontk/parallel.hpp"

namespace topontk::cli {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

bool is_flag(const CLI::Option* opt) { return opt->get_expected_max() == 0; }

// Every option of `sub` under its long name: parsed values when given,
// captured defaults otherwise.
json resolved_config(const CLI::App* sub) {
  json j = json::object();
  for (const CLI::Option* opt : sub->get_options({})) {
    if (opt->get_lnames().empty()) continue;
    const std::string& name = opt->get_lnames().front();
    if (name == "help" || name == "config") continue;
    if (is_flag(opt)) {
      j[name] = opt->count() > 0 ? opt->as<bool>() : false;
      continue;
    }
    std::vector<std::string> values;
    if (opt->count() > 0) {
      values = opt->results();
    } else {
      const std::string d = opt->get_default_str();
      if (d.size() >= 2 && d.front() == '[' && d.back() == ']') {
        std::stringstream ss(d.substr(1, d.size() - 2));
        for (std::string item; std::getline(ss, item, ',');) values.push_back(item);
      } else if (!d.empty()) {
        values.push_back(d);
      } else {
        continue;
      }
    }
    if (opt->get_items_expected_max() > 1) {
      j[name] = values;
    } else {
      j[name] = values.back();
    }
  }
  return j;
}

std::string config_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

// Loads a JSON config (a flat object keyed by long flag names, or a run
// manifest whose "config" member is one) into every option of `sub` that was
// not given on the command line.
void apply_config(CLI::App* sub, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw CLI::ValidationError("--config", path + ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) throw CLI::ValidationError("--config", path + ": expected an object");
  json body = j;
  if (j.contains("command") && j.contains("config") && j["config"].is_object()) {
    body = j["config"];
  }
  for (const auto& [key, value] : body.items()) {
    if (key == "config") continue;
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) throw CLI::ValidationError("--config", path + ": unknown key " + key);
    if (opt->count() > 0 || value.is_null()) continue;
    std::vector<std::string> inputs;
    if (value.is_array()) {
      for (const auto& v : value) inputs.push_back(config_scalar(v));
    } else {
      inputs.push_back(config_scalar(value));
    }
    if (is_flag(opt)) {
      if (inputs.size() != 1) throw CLI::ValidationError("--" + key, "expected a boolean");
      if (CLI::detail::to_flag_value(inputs[0]) <= 0) continue;
      inputs = {"true"};
    }
    opt->add_result(inputs);
    opt->run_callback();
  }
}

struct Common {
  std::string config;
  std::uint64_t seed = 1;
  std::string out_dir;
  int threads = 0;
};

struct KernelFlags {
  KernelConfig cfg;
  std::string activation = "relu";
  std::string zero_variance;
  bool no_normalize = false;

  explicit KernelFlags(KernelConfig base = {})
      : cfg(base), zero_variance(std::string(to_string(base.zero_variance))) {}

  KernelConfig resolve() const {
    KernelConfig k = cfg;
    k.activation = parse_activation(activation);
    k.zero_variance = parse_zero_variance(zero_variance);
    k.normalize_laplacians = !no_normalize;
    k.validate();
    return k;
  }
};

struct Context {
  std::ostream& out;
  std::ostream& err;
  CLI::App* sub = nullptr;
  Common common;
  std::vector<std::string> outputs;

  fs::path path(const std::string& name) const {
    return fs::path(common.out_dir.empty() ? "." : common.out_dir) / name;
  }

  std::ofstream open(const std::string& name) {
    const fs::path p = path(name);
    fs::create_directories(p.parent_path());
    std::ofstream f(p, std::ios::binary);
    if (!f) throw Error("cannot write " + p.string());
    outputs.push_back(p.string());
    return f;
  }
};

std::vector<Variant> parse_variants(const std::vector<std::string>& names) {
  std::vector<Variant> out;
  for (const auto& n : names) out.push_back(parse_variant(n));
  return out;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "JSON config file (flat flag object or a run manifest)");
  sub->add_option("--seed", c.seed, "Master seed");
  const char* env = std::getenv("TOPONTK_OUT_DIR");
  c.out_dir = env ? env : ".";
  sub->add_option("--out", c.out_dir, "Output directory (default $TOPONTK_OUT_DIR or .)");
  sub->add_option("--threads", c.threads, "Worker threads; 0 uses every core");
}

void add_kernel(CLI::App* sub, KernelFlags& k) {
  sub->add_option("--depth", k.cfg.depth, "Network depth L")->capture_default_str();
  sub->add_option("--gamma", k.cfg.gamma, "Identity weight in the propagator")
      ->capture_default_str();
  sub->add_option("--alpha", k.cfg.alpha, "Lower Laplacian weight")->capture_default_str();
  sub->add_option("--beta", k.cfg.beta, "Upper Laplacian weight")->capture_default_str();
  sub->add_option("--activation", k.activation, "linear or relu")
      ->check(CLI::IsMember({"linear", "relu"}))
      ->capture_default_str();
  sub->add_option("--zero-variance", k.zero_variance,
                  "ReLU derivative at zero variance: throw or zero-derivative")
      ->check(CLI::IsMember({"throw", "zero-derivative"}))
      ->capture_default_str();
  sub->add_flag("--no-normalize", k.no_normalize,
                "Use raw Laplacians instead of dividing by their largest eigenvalue");
}

void write_manifest(Context& ctx, const std::string& command, double seconds) {
  json m;
  m["command"] = command;
  m["version"] = kVersion;
  m["seed"] = ctx.common.seed;
  m["config"] = resolved_config(ctx.sub);
  m["outputs"] = ctx.outputs;
  m["duration_seconds"] = seconds;
  const fs::path p = ctx.path(command + ".manifest.json");
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot write " + p.string());
  f << m.dump(2) << '\n';
}

SimplicialComplex filled_triangle() {
  return SimplicialComplex(3, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hodge-Laplacian neural tangent kernels on simplicial complexes", "topontk"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  Context ctx{out, err};
  std::string command;
  std::function<void()> action;
  std::function<void()> validate = [] {};

  // ------------------------------------------------------------ triangle-count
  TriangleCountConfig tc;
  KernelFlags tc_kernel(tc.kernel);
  std::vector<std::string> tc_variants{"graph", "lower", "upper", "full"};
  bool tc_no_offset = false;
  {
    auto* sub = app.add_subcommand("triangle-count",
                                   "Predict the filled-triangle count on cycle-chord complexes");
    add_common(sub, ctx.common);
    sub->add_option("--n", tc.n, "Cycle length");
    sub->add_option("--densities", tc.densities, "Fill probabilities q")->delimiter(',');
    sub->add_option("--samples", tc.samples_per_density, "Complexes per density");
    sub->add_option("--reps", tc.repetitions, "Repetitions (fresh samples and split)");
    sub->add_option("--train-frac", tc.train_frac, "Training fraction");
    sub->add_option("--lambda", tc.lambda, "Ridge parameter");
    sub->add_option("--variants", tc_variants, "graph, lower, upper, full")->delimiter(',');
    sub->add_flag("--no-offset", tc_no_offset, "Fit without the unpenalized offset");
    add_kernel(sub, tc_kernel);
    sub->callback([&, sub] {
      command = "triangle_count";
      ctx.sub = sub;
      action = [&] {
        tc.kernel = tc_kernel.resolve();
        tc.variants = parse_variants(tc_variants);
        tc.fit_offset = !tc_no_offset;
        tc.threads = ctx.common.threads;
        const auto r = run_triangle_count(tc, ctx.common.seed);
        auto f = ctx.open("triangle_count.csv");
        write_csv(f, r, tc, ctx.common.seed);
      };
    });
  }

  // ------------------------------------------------------------ hodge-recovery
  HodgeRecoveryConfig hr;
  KernelFlags hr_kernel(hr.kernel);
  std::vector<std::string> hr_variants{"lower", "upper", "full"};
  {
    auto* sub = app.add_subcommand("hodge-recovery",
                                   "Recover exact, harmonic and coexact components of edge signals");
    add_common(sub, ctx.common);
    sub->add_option("--n", hr.n, "Vertices of the random complex");
    sub->add_option("--p", hr.p, "Edge probability");
    sub->add_option("--q", hr.q, "Triangle fill probability");
    sub->add_option("--n-train", hr.n_train, "Training signals");
    sub->add_option("--n-test", hr.n_test, "Test signals");
    sub->add_option("--seeds", hr.seeds, "Independent complexes");
    sub->add_option("--lambda", hr.lambda, "Ridge parameter");
    sub->add_option("--max-resamples", hr.max_resamples, "Draws allowed per seed");
    sub->add_option("--variants", hr_variants, "lower, upper, full")->delimiter(',');
    add_kernel(sub, hr_kernel);
    sub->callback([&, sub] {
      command = "hodge_recovery";
      ctx.sub = sub;
      action = [&] {
        hr.kernel = hr_kernel.resolve();
        hr.variants = parse_variants(hr_variants);
        const auto r = run_hodge_recovery(hr, ctx.common.seed);
        auto f = ctx.open("hodge_recovery.csv");
        write_csv(f, r, hr, ctx.common.seed);
      };
    });
  }

  // ------------------------------------------------------------------ spectral
  SpectralConfig sp;
  KernelFlags sp_kernel(sp.kernel);
  {
    auto* sub = app.add_subcommand("spectral", "Eigen-mode Hodge diagnostic of the full kernel");
    add_common(sub, ctx.common);
    sub->add_option("--n", sp.n, "Vertices");
    sub->add_option("--p", sp.p, "Edge probability");
    sub->add_option("--q", sp.q, "Triangle fill probability");
    sub->add_option("--t-grid", sp.t_grid, "Gradient-flow times for the decay check")
        ->delimiter(',');
    add_kernel(sub, sp_kernel);
    sub->callback([&, sub] {
      command = "spectral";
      ctx.sub = sub;
      action = [&] {
        sp.kernel = sp_kernel.resolve();
        const auto r = run_spectral_diagnostic(sp, ctx.common.seed);
        auto f = ctx.open("spectral.csv");
        write_csv(f, r);
      };
    });
  }

  // ----------------------------------------------------------------- stability
  StabilityConfig st;
  KernelFlags st_kernel(st.kernel);
  {
    auto* sub = app.add_subcommand("stability", "Kernel and prediction change under triangle flips");
    add_common(sub, ctx.common);
    sub->add_option("--n", st.n, "Vertices");
    sub->add_option("--p", st.p, "Edge probability");
    sub->add_option("--q", st.q, "Triangle fill probability");
    sub->add_option("--eps", st.eps_grid, "Flip probabilities")->delimiter(',');
    sub->add_option("--lambdas", st.lambdas, "Ridge parameters")->delimiter(',');
    sub->add_option("--perturbations", st.perturbations_per_run, "Perturbations per run");
    sub->add_option("--runs", st.runs, "Base complexes");
    add_kernel(sub, st_kernel);
    sub->callback([&, sub] {
      command = "stability";
      ctx.sub = sub;
      action = [&] {
        st.kernel = st_kernel.resolve();
        st.threads = ctx.common.threads;
        const auto records = run_stability(st, ctx.common.seed);
        {
          auto f = ctx.open("stability.csv");
          write_csv(f, records, ctx.common.seed);
        }
        const auto rep = stability_bound_check(records);
        auto f = ctx.open("stability_summary.csv");
        CsvWriter csv(f);
        csv.row({"seed", "metric", "value"});
        auto emit = [&](const std::string& m, double v) {
          csv.row({std::to_string(ctx.common.seed), m, format_double(v)});
        };
        emit("c_k_hat", rep.c_k_hat);
        emit("c_pred_hat", rep.c_pred_hat);
        for (const auto& [eps, c] : rep.c_k_by_eps) emit("c_k_eps=" + format_double(eps), c);
        emit("pearson_dl_kernel_change", rep.pearson_dl_kernel_change);
        emit("spearman_dy_dl_over_lambda", rep.spearman_dy_dl_over_lambda);
        emit("ratios_finite", rep.ratios_finite);
        emit("b2_bound_holds", rep.b2_bound_holds);
        emit("resolvent_bound_holds", rep.resolvent_bound_holds);
        emit("pred_bound_holds", rep.pred_bound_holds);
        emit("dy_nonincreasing_in_lambda", rep.dy_nonincreasing_in_lambda);
        for (std::size_t e = 0; e < rep.eps_values.size(); ++e) {
          for (std::size_t l = 0; l < rep.lambda_values.size(); ++l) {
            emit("mean_delta_y_eps=" + format_double(rep.eps_values[e]) +
                     "_lambda=" + format_double(rep.lambda_values[l]),
                 rep.mean_delta_y[e][l]);
          }
        }
      };
    });
  }

  // ---------------------------------------------------------------- separation
  SeparationConfig se;
  KernelFlags se_kernel(se.kernel);
  {
    auto* sub = app.add_subcommand("separation",
                                   "Kernel sensitivity to filled triangles on a fixed skeleton");
    add_common(sub, ctx.common);
    sub->add_option("--pairs", se.pairs, "Generated skeleton-sharing pairs");
    sub->add_option("--n", se.n, "Vertices");
    sub->add_option("--p", se.p, "Edge probability");
    sub->add_option("--q", se.q, "Triangle fill probability");
    sub->add_option("--flip-eps", se.flip_eps, "Flip probability producing the partner");
    add_kernel(sub, se_kernel);
    sub->callback([&, sub] {
      command = "separation";
      ctx.sub = sub;
      action = [&] {
        se.kernel = se_kernel.resolve();
        const auto r = separation_test(se, ctx.common.seed);
        auto f = ctx.open("separation.csv");
        write_csv(f, r);
        ctx.out << r.n_separated << "/" << r.n_generated << " generated pairs separated; "
                << r.n_pool_cancel << " pooled cancellations\n";
      };
    });
  }

  // ---------------------------------------------------------------------- dblp
  DblpConfig db;
  KernelFlags db_kernel(db.kernel);
  std::string db_dir, db_nverts, db_simplices, db_times;
  std::vector<std::string> db_variants{"graph", "lower", "upper", "full"};
  bool db_no_offset = false, db_dump = false;
  {
    auto* sub = app.add_subcommand("dblp", "Simplicial closure prediction on a ScHoLP stream");
    add_common(sub, ctx.common);
    sub->add_option("--dir", db_dir, "Directory holding coauth-DBLP-{nverts,simplices,times}.txt");
    sub->add_option("--nverts", db_nverts, "Simplex size file");
    sub->add_option("--simplices", db_simplices, "Vertex id file");
    sub->add_option("--times", db_times, "Timestamp file");
    sub->add_option("--temporal-frac", db.temporal_frac, "History fraction of the stream");
    sub->add_option("--max-simplices", db.caps.max_simplices, "History simplices retained");
    sub->add_option("--max-simplex-size", db.caps.max_simplex_size, "Largest retained simplex");
    sub->add_option("--n-pos", db.caps.n_pos, "Positive candidates per run");
    sub->add_option("--n-neg", db.caps.n_neg, "Negative candidates per run");
    sub->add_option("--ego-size", db.ego.ego_size, "Ego node cap");
    sub->add_option("--max-group-size", db.ego.max_group_size,
                    "Largest history simplex contributing triangles");
    sub->add_option("--max-local-triangles", db.ego.max_local_triangles, "Ego triangle cap");
    sub->add_option("--runs", db.runs, "Independent runs");
    sub->add_option("--lambda", db.lambda, "Ridge parameter");
    sub->add_option("--train-frac", db.train_frac, "Candidate training fraction");
    sub->add_option("--variants", db_variants, "graph (node-level baseline), lower, upper, full")
        ->delimiter(',');
    sub->add_flag("--shuffle-labels", db.shuffle_labels, "Permutation-null control");
    sub->add_flag("--no-offset", db_no_offset, "Fit without the unpenalized offset");
    sub->add_flag("--dump-candidates", db_dump, "Also write dblp_candidates.csv");
    add_kernel(sub, db_kernel);
    sub->callback([&, sub] {
      command = "dblp";
      ctx.sub = sub;
      validate = [&] {
        const fs::path dir(db_dir);
        auto resolve = [&](std::string& p, const char* stem) {
          if (p.empty() && !db_dir.empty()) {
            p = (dir / (std::string("coauth-DBLP-") + stem + ".txt")).string();
          }
          if (p.empty()) throw CLI::RequiredError(std::string("--") + stem);
          if (!fs::is_regular_file(p)) throw CLI::ValidationError("missing input file: " + p);
        };
        resolve(db_nverts, "nverts");
        resolve(db_simplices, "simplices");
        resolve(db_times, "times");
      };
      action = [&] {
        db.kernel = db_kernel.resolve();
        db.variants = parse_variants(db_variants);
        db.fit_offset = !db_no_offset;
        db.threads = ctx.common.threads;
        const auto stream = parse_scholp_files(db_nverts, db_simplices, db_times);
        const auto r = run_dblp(stream, db, ctx.common.seed);
        {
          auto f = ctx.open("dblp.csv");
          write_metrics_csv(f, r, db, ctx.common.seed);
        }
        if (db_dump) {
          auto f = ctx.open("dblp_candidates.csv");
          write_candidates_csv(f, r);
        }
        for (Variant v : db.variants) {
          const auto ap = r.ap(v);
          ctx.out << to_string(v) << ": AP " << ap.mean << " +- " << ap.se << "\n";
        }
      };
    });
  }

  // -------------------------------------------------------- finite-width-check
  KernelFlags fw_kernel;
  std::vector<int> fw_widths{256, 1024, 4096};
  int fw_nets = 32;
  std::string fw_complex, fw_features = "identity";
  {
    auto* sub = app.add_subcommand(
        "finite-width-check", "Compare the analytic kernel with finite-width network averages");
    add_common(sub, ctx.common);
    sub->add_option("--widths", fw_widths, "Hidden widths")->delimiter(',');
    sub->add_option("--nets", fw_nets, "Networks averaged per width");
    sub->add_option("--complex", fw_complex, "Complex file (default: one filled triangle)");
    sub->add_option("--features", fw_features, "identity or constant")
        ->check(CLI::IsMember({"identity", "constant"}));
    add_kernel(sub, fw_kernel);
    sub->callback([&, sub] {
      command = "finite_width_check";
      ctx.sub = sub;
      action = [&] {
        const KernelConfig k = fw_kernel.resolve();
        const SimplicialComplex c = fw_complex.empty() ? filled_triangle() : read_complex_file(fw_complex);
        const auto m = static_cast<Eigen::Index>(c.n_edges());
        const EdgeFeatures f = fw_features == "identity"
                                   ? EdgeFeatures(Eigen::MatrixXd::Identity(m, m))
                                   : EdgeFeatures::constant(m);
        const Eigen::MatrixXd analytic = ntk_pair(c, c, f, f, k).theta_xy;
        auto file = ctx.open("finite_width_check.csv");
        CsvWriter csv(file);
        csv.row({"seed", "activation", "depth", "n_nets", "width", "relative_error"});
        for (int w : fw_widths) {
          const Eigen::MatrixXd emp = finite_width_ntk(c, f, k, w, fw_nets, ctx.common.seed,
                                                       ctx.common.threads);
          const double rel = (emp - analytic).norm() / analytic.norm();
          csv.row({std::to_string(ctx.common.seed), std::string(to_string(k.activation)),
                   std::to_string(k.depth), std::to_string(fw_nets), std::to_string(w),
                   format_double(rel)});
        }
      };
    });
  }

  // ------------------------------------------------------------- export-kernel
  KernelFlags ex_kernel;
  std::string ex_complex, ex_variant = "full";
  {
    auto* sub = app.add_subcommand("export-kernel",
                                   "Write the edge-level architecture operator of a complex");
    add_common(sub, ctx.common);
    sub->add_option("--complex", ex_complex, "Complex file (required)");
    sub->add_option("--variant", ex_variant, "graph, lower, upper or full");
    add_kernel(sub, ex_kernel);
    sub->callback([&, sub] {
      command = "export_kernel";
      ctx.sub = sub;
      validate = [&] {
        if (ex_complex.empty()) throw CLI::RequiredError("--complex");
      };
      action = [&] {
        KernelConfig k = ex_kernel.resolve();
        k.variant = parse_variant(ex_variant);
        const SimplicialComplex c = read_complex_file(ex_complex);
        auto f = ctx.open("kernel.csv");
        write_kernel_csv(f, architecture_operator(c, k), c.edges(), c.edges());
      };
    });
  }

  // ------------------------------------------------------------------ generate
  std::string gen_kind = "er", gen_name;
  int gen_n = 30, gen_count = 6000;
  double gen_p = 0.35, gen_q = 0.4;
  {
    auto* sub = app.add_subcommand("generate", "Write a random complex or a synthetic ScHoLP stream");
    add_common(sub, ctx.common);
    sub->add_option("--kind", gen_kind, "er, cycle-chord or scholp")
        ->check(CLI::IsMember({"er", "cycle-chord", "scholp"}));
    sub->add_option("--n", gen_n, "Vertices");
    sub->add_option("--p", gen_p, "Edge probability (er)");
    sub->add_option("--q", gen_q, "Triangle fill probability");
    sub->add_option("--count", gen_count, "Simplices in the stream (scholp)");
    sub->add_option("--name", gen_name, "Output stem (default: the kind)");
    sub->callback([&, sub] {
      command = "generate";
      ctx.sub = sub;
      action = [&] {
        const std::string stem = gen_name.empty() ? gen_kind : gen_name;
        if (gen_kind == "scholp") {
          SyntheticStreamConfig sc;
          sc.n_vertices = gen_n;
          sc.n_simplices = gen_count;
          sc.n_communities = std::max(1, gen_n / 10);
          const auto s = synthetic_stream(sc, ctx.common.seed);
          auto a = ctx.open(stem + "-nverts.txt");
          auto b = ctx.open(stem + "-simplices.txt");
          auto c = ctx.open(stem + "-times.txt");
          write_scholp(a, b, c, s);
          return;
        }
        SimplicialComplex c;
        if (gen_kind == "er") {
          c = er_clique_complex(gen_n, gen_p, gen_q, ctx.common.seed);
        } else {
          const auto cc = cycle_chord_skeleton(gen_n);
          c = fill_candidates(cc.skeleton, cc.candidates, gen_q, ctx.common.seed);
        }
        auto f = ctx.open(stem + ".txt");
        write_complex(f, c);
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (!ctx.common.config.empty()) apply_config(ctx.sub, ctx.common.config);
    validate();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    // Invalid enum names and similar rejected while resolving flags.
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    action();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(ctx, command, secs);
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace topontk::cli
