#include "topontk/dblp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <istream>
#include <numeric>
#include <ostream>
#include <string_view>

#include "topontk/error.hpp"
#include "topontk/hodge.hpp"
#include "topontk/io.hpp"
#include "topontk/learn.hpp"
#include "topontk/parallel.hpp"
#include "topontk/rng.hpp"

namespace topontk {
namespace {

// Non-blank lines of a stream as integers, with 1-based line numbers.
struct IntLines {
  std::vector<std::int64_t> values;
  std::vector<int> lines;
};

IntLines read_int_lines(std::istream& in, std::string_view what) {
  IntLines out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    const std::string_view tok(line.data() + b, e - b + 1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw FormatError(std::string(what) + " line " + std::to_string(lineno) +
                        ": expected one integer, got '" + std::string(tok) + "'");
    }
    out.values.push_back(v);
    out.lines.push_back(lineno);
  }
  return out;
}

std::uint64_t pair_key(int u, int v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

bool sorted_contains(const std::vector<int>& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

// Simplex ids (into `simplices`) containing every vertex of the triad,
// scanning the shortest incidence list.
bool any_contains(const std::vector<std::vector<int>>& simplices,
                  const std::vector<std::vector<int>>& incident, const std::array<int, 3>& t) {
  const auto in_range = [&](int v) {
    return v >= 0 && static_cast<std::size_t>(v) < incident.size();
  };
  if (!in_range(t[0]) || !in_range(t[1]) || !in_range(t[2])) return false;
  const std::vector<int>* shortest = &incident[t[0]];
  for (int k = 1; k < 3; ++k) {
    if (incident[t[k]].size() < shortest->size()) shortest = &incident[t[k]];
  }
  for (int s : *shortest) {
    const auto& simplex = simplices[s];
    if (sorted_contains(simplex, t[0]) && sorted_contains(simplex, t[1]) &&
        sorted_contains(simplex, t[2])) {
      return true;
    }
  }
  return false;
}

std::vector<std::vector<int>> incidence(const std::vector<std::vector<int>>& simplices,
                                        int n_vertices) {
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(n_vertices));
  for (std::size_t s = 0; s < simplices.size(); ++s) {
    for (int v : simplices[s]) inc[v].push_back(static_cast<int>(s));
  }
  return inc;
}

std::vector<CandidateTriad> enumerate_from_index(const HistoryIndex& index,
                                                 const SimplexStream& future) {
  const auto future_inc = incidence(future.simplices, future.n_vertices);
  std::vector<CandidateTriad> out;
  for (const auto& t : three_cliques(index.skeleton())) {
    if (index.closed(t)) continue;
    out.push_back({t, any_contains(future.simplices, future_inc, t)});
  }
  return out;
}

std::vector<CandidateTriad> sample_candidates(const std::vector<CandidateTriad>& all,
                                              const MiningCaps& caps, std::uint64_t seed) {
  std::vector<int> pos, neg;
  for (std::size_t i = 0; i < all.size(); ++i) {
    (all[i].positive ? pos : neg).push_back(static_cast<int>(i));
  }
  if (static_cast<int>(pos.size()) < caps.n_pos || static_cast<int>(neg.size()) < caps.n_neg) {
    throw InsufficientCandidates("requested " + std::to_string(caps.n_pos) + " positives and " +
                                 std::to_string(caps.n_neg) + " negatives, available " +
                                 std::to_string(pos.size()) + " and " +
                                 std::to_string(neg.size()));
  }
  Rng rng(seed);
  rng.shuffle(std::span<int>(pos));
  rng.shuffle(std::span<int>(neg));
  std::vector<CandidateTriad> out;
  for (int i = 0; i < caps.n_pos; ++i) out.push_back(all[pos[i]]);
  for (int i = 0; i < caps.n_neg; ++i) out.push_back(all[neg[i]]);
  return out;
}

SimplexStream slice(const SimplexStream& s, std::size_t begin, std::size_t end) {
  SimplexStream out;
  out.simplices.assign(s.simplices.begin() + begin, s.simplices.begin() + end);
  out.times.assign(s.times.begin() + begin, s.times.begin() + end);
  out.original_ids = s.original_ids;
  out.n_vertices = s.n_vertices;
  return out;
}

}  // namespace

// ------------------------------------------------------------------ parsing

SimplexStream parse_scholp(std::istream& nverts, std::istream& simplices, std::istream& times) {
  const IntLines sizes = read_int_lines(nverts, "nverts");
  const IntLines ids = read_int_lines(simplices, "simplices");
  const IntLines stamps = read_int_lines(times, "times");
  std::int64_t total = 0;
  for (std::size_t i = 0; i < sizes.values.size(); ++i) {
    if (sizes.values[i] < 1) {
      throw FormatError("nverts line " + std::to_string(sizes.lines[i]) +
                        ": simplex size must be >= 1");
    }
    total += sizes.values[i];
  }
  if (total != static_cast<std::int64_t>(ids.values.size())) {
    const int at = ids.lines.empty() ? 0 : ids.lines.back();
    throw FormatError("simplices file: nverts sums to " + std::to_string(total) +
                      " vertex ids, found " + std::to_string(ids.values.size()) +
                      " (last line " + std::to_string(at) + ")");
  }
  if (sizes.values.size() != stamps.values.size()) {
    const int at = stamps.lines.empty() ? 0 : stamps.lines.back();
    throw FormatError("times file: expected " + std::to_string(sizes.values.size()) +
                      " timestamps, found " + std::to_string(stamps.values.size()) +
                      " (last line " + std::to_string(at) + ")");
  }

  SimplexStream out;
  out.original_ids = ids.values;
  std::sort(out.original_ids.begin(), out.original_ids.end());
  out.original_ids.erase(std::unique(out.original_ids.begin(), out.original_ids.end()),
                         out.original_ids.end());
  out.n_vertices = static_cast<int>(out.original_ids.size());
  const auto dense = [&](std::int64_t id) {
    return static_cast<int>(std::lower_bound(out.original_ids.begin(), out.original_ids.end(), id) -
                            out.original_ids.begin());
  };

  std::vector<std::vector<int>> raw(sizes.values.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < sizes.values.size(); ++i) {
    auto& s = raw[i];
    for (std::int64_t k = 0; k < sizes.values[i]; ++k) s.push_back(dense(ids.values[pos++]));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return stamps.values[a] < stamps.values[b];
  });
  for (std::size_t i : order) {
    out.simplices.push_back(std::move(raw[i]));
    out.times.push_back(stamps.values[i]);
  }
  return out;
}

SimplexStream parse_scholp_files(const std::string& nverts_path,
                                 const std::string& simplices_path,
                                 const std::string& times_path) {
  std::ifstream a(nverts_path), b(simplices_path), c(times_path);
  if (!a) throw FormatError("cannot open " + nverts_path);
  if (!b) throw FormatError("cannot open " + simplices_path);
  if (!c) throw FormatError("cannot open " + times_path);
  return parse_scholp(a, b, c);
}

void write_scholp(std::ostream& nverts, std::ostream& simplices, std::ostream& times,
                  const SimplexStream& stream) {
  for (std::size_t i = 0; i < stream.size(); ++i) {
    nverts << stream.simplices[i].size() << '\n';
    for (int v : stream.simplices[i]) simplices << stream.original_ids[v] << '\n';
    times << stream.times[i] << '\n';
  }
}

TemporalSplit temporal_split(const SimplexStream& stream, double frac) {
  if (!(frac >= 0.0 && frac <= 1.0)) throw InvalidArgument("split fraction must lie in [0, 1]");
  const auto n = stream.size();
  const auto cut = std::min(n, static_cast<std::size_t>(std::floor(frac * static_cast<double>(n) + 1e-9)));
  return {slice(stream, 0, cut), slice(stream, cut, n)};
}

// ------------------------------------------------------------------- mining

HistoryIndex::HistoryIndex(const SimplexStream& history, const MiningCaps& caps)
    : n_vertices_(history.n_vertices) {
  if (caps.max_simplices < 1 || caps.max_simplex_size < 1) {
    throw InvalidArgument("mining caps must be positive");
  }
  for (const auto& s : history.simplices) {
    if (static_cast<int>(simplices_.size()) >= caps.max_simplices) break;
    if (static_cast<int>(s.size()) <= caps.max_simplex_size) simplices_.push_back(s);
  }
  neighbors_.resize(static_cast<std::size_t>(n_vertices_));
  for (const auto& s : simplices_) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (pair_count_[pair_key(s[i], s[j])]++ == 0) {
          neighbors_[s[i]].push_back(s[j]);
          neighbors_[s[j]].push_back(s[i]);
        }
      }
    }
  }
  for (auto& n : neighbors_) std::sort(n.begin(), n.end());
  incident_ = incidence(simplices_, n_vertices_);
}

int HistoryIndex::cooccurrence(int u, int v) const {
  const auto it = pair_count_.find(pair_key(u, v));
  return it == pair_count_.end() ? 0 : it->second;
}

bool HistoryIndex::closed(const std::array<int, 3>& triad) const {
  return any_contains(simplices_, incident_, triad);
}

SimplicialComplex HistoryIndex::skeleton() const {
  std::vector<Edge> edges;
  edges.reserve(pair_count_.size());
  for (int u = 0; u < n_vertices_; ++u) {
    for (int v : neighbors_[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return SimplicialComplex(n_vertices_, std::move(edges), {});
}

bool contains_triad(const SimplexStream& stream, const std::array<int, 3>& triad) {
  for (const auto& s : stream.simplices) {
    if (sorted_contains(s, triad[0]) && sorted_contains(s, triad[1]) &&
        sorted_contains(s, triad[2])) {
      return true;
    }
  }
  return false;
}

std::vector<CandidateTriad> enumerate_candidates(const SimplexStream& history,
                                                 const SimplexStream& future,
                                                 const MiningCaps& caps) {
  return enumerate_from_index(HistoryIndex(history, caps), future);
}

std::vector<CandidateTriad> mine_candidates(const SimplexStream& history,
                                            const SimplexStream& future,
                                            const MiningCaps& caps, std::uint64_t seed) {
  if (caps.n_pos < 0 || caps.n_neg < 0) throw InvalidArgument("class sizes must be >= 0");
  return sample_candidates(enumerate_candidates(history, future, caps), caps, seed);
}

// --------------------------------------------------------------------- egos

EgoComplexSample build_ego_complex(const HistoryIndex& index, const CandidateTriad& triad,
                                   const EgoCaps& caps) {
  if (caps.ego_size < 3) throw InvalidArgument("ego_size must be >= 3");
  const auto& t = triad.nodes;
  std::vector<int> others;
  for (int m : t) {
    for (int w : index.neighbors(m)) {
      if (w != t[0] && w != t[1] && w != t[2]) others.push_back(w);
    }
  }
  std::sort(others.begin(), others.end());
  others.erase(std::unique(others.begin(), others.end()), others.end());
  std::vector<std::pair<int, int>> ranked;  // (-score, id)
  for (int w : others) {
    int score = 0;
    for (int m : t) score += index.cooccurrence(m, w);
    ranked.emplace_back(-score, w);
  }
  std::sort(ranked.begin(), ranked.end());

  EgoComplexSample ego;
  ego.positive = triad.positive;
  ego.node_map.assign(t.begin(), t.end());
  for (std::size_t i = 0; i < ranked.size() && static_cast<int>(ego.node_map.size()) < caps.ego_size;
       ++i) {
    ego.node_map.push_back(ranked[i].second);
  }
  const int n = static_cast<int>(ego.node_map.size());
  std::unordered_map<int, int> local;
  for (int i = 0; i < n; ++i) local[ego.node_map[i]] = i;

  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (index.cooccurrence(ego.node_map[i], ego.node_map[j]) > 0) edges.push_back({i, j});
    }
  }

  std::vector<int> touching;
  for (int g : ego.node_map) {
    const auto& inc = index.incident(g);
    touching.insert(touching.end(), inc.begin(), inc.end());
  }
  std::sort(touching.begin(), touching.end());
  touching.erase(std::unique(touching.begin(), touching.end()), touching.end());

  std::vector<Triangle> triangles;
  std::vector<Triangle> seen;  // sorted copy for dedup
  for (int sid : touching) {
    if (static_cast<int>(triangles.size()) >= caps.max_local_triangles) break;
    const auto& simplex = index.simplices()[sid];
    const int size = static_cast<int>(simplex.size());
    if (size < 3 || size > caps.max_group_size) continue;
    std::vector<int> inside;
    for (int g : simplex) {
      if (auto it = local.find(g); it != local.end()) inside.push_back(it->second);
    }
    for (std::size_t a = 0; a < inside.size(); ++a) {
      for (std::size_t b = a + 1; b < inside.size(); ++b) {
        for (std::size_t c = b + 1; c < inside.size(); ++c) {
          if (static_cast<int>(triangles.size()) >= caps.max_local_triangles) break;
          Triangle tri{inside[a], inside[b], inside[c]};
          std::sort(tri.begin(), tri.end());
          const auto pos = std::lower_bound(seen.begin(), seen.end(), tri);
          if (pos != seen.end() && *pos == tri) continue;
          seen.insert(pos, tri);
          triangles.push_back(tri);
        }
      }
    }
  }
  ego.complex = SimplicialComplex(n, std::move(edges), std::move(triangles));
  ego.features = EdgeFeatures::constant(static_cast<Eigen::Index>(ego.complex.n_edges()));
  return ego;
}

EgoComplexSample build_ego_complex(const SimplexStream& history, const CandidateTriad& triad,
                                   const MiningCaps& mining, const EgoCaps& caps) {
  return build_ego_complex(HistoryIndex(history, mining), triad, caps);
}

PreparedInput prepare_node_input(const SimplicialComplex& complex, const KernelConfig& cfg) {
  const int n = complex.n_vertices();
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  for (const auto& e : complex.edges()) {
    a(e[0], e[1]) = 1.0;
    a(e[1], e[0]) = 1.0;
  }
  const double norm = spectral_norm(a);
  if (norm > 0.0) a /= norm;
  return prepare_input(a, Eigen::MatrixXd::Ones(n, 1), cfg.activation, cfg.depth);
}

double node_graph_ntk(const EgoComplexSample& a, const EgoComplexSample& b,
                      const KernelConfig& cfg) {
  cfg.validate();
  return pooled_pair(prepare_node_input(a.complex, cfg), prepare_node_input(b.complex, cfg),
                     cfg.activation, cfg.depth, cfg.pool_normalize, cfg.zero_variance);
}

// ------------------------------------------------------------------ metrics

double average_precision(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw DimensionMismatch("scores and labels differ");
  const int n_pos = static_cast<int>(std::count(labels.begin(), labels.end(), 1));
  if (n_pos == 0) return std::numeric_limits<double>::quiet_NaN();
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  double ap = 0.0, prev_recall = 0.0;
  int tp = 0, seen = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) {
      tp += labels[order[j]] == 1;
      ++seen;
      ++j;
    }
    const double recall = static_cast<double>(tp) / n_pos;
    const double precision = static_cast<double>(tp) / seen;
    ap += (recall - prev_recall) * precision;
    prev_recall = recall;
    i = j;
  }
  return ap;
}

double f1_score(std::span<const double> scores, std::span<const int> labels, double threshold) {
  if (scores.size() != labels.size()) throw DimensionMismatch("scores and labels differ");
  int tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool pred = scores[i] > threshold;
    if (pred && labels[i] == 1) ++tp;
    if (pred && labels[i] != 1) ++fp;
    if (!pred && labels[i] == 1) ++fn;
  }
  const int denom = 2 * tp + fp + fn;
  return denom > 0 ? 2.0 * tp / denom : 0.0;
}

// --------------------------------------------------------------- benchmark

MeanSe DblpResult::ap(Variant v) const {
  std::vector<double> vals;
  for (const auto& r : runs) {
    if (r.variant == v) vals.push_back(r.ap);
  }
  return mean_se(vals);
}

MeanSe DblpResult::f1(Variant v) const {
  std::vector<double> vals;
  for (const auto& r : runs) {
    if (r.variant == v) vals.push_back(r.f1);
  }
  return mean_se(vals);
}

std::vector<DblpRunMetrics> evaluate_egos(std::span<const EgoComplexSample> egos,
                                          std::span<const int> train_idx,
                                          std::span<const int> test_idx, const DblpConfig& cfg,
                                          int run) {
  if (train_idx.empty() || test_idx.empty()) throw InvalidArgument("empty train or test split");
  const auto n_train = static_cast<Eigen::Index>(train_idx.size());
  const auto n_test = static_cast<Eigen::Index>(test_idx.size());
  Eigen::VectorXd y(n_train);
  for (Eigen::Index i = 0; i < n_train; ++i) y(i) = egos[train_idx[i]].positive ? 1.0 : -1.0;
  std::vector<int> test_labels;
  for (int i : test_idx) test_labels.push_back(egos[i].positive ? 1 : 0);

  std::vector<DblpRunMetrics> out;
  for (Variant v : cfg.variants) {
    const KernelConfig kc = cfg.kernel.with_variant(v);
    kc.validate();
    std::vector<PreparedInput> inputs(egos.size());
    parallel_for(egos.size(), cfg.threads, [&](std::size_t i) {
      inputs[i] = v == Variant::Graph
                      ? prepare_node_input(egos[i].complex, kc)
                      : prepare_input(kernel_propagator(egos[i].complex, kc).p,
                                      egos[i].features.values(), kc.activation, kc.depth);
    });
    const GramResult g = gram_from_prepared(inputs, kc, {true, cfg.threads});
    Eigen::MatrixXd k_train(n_train, n_train), k_cross(n_test, n_train);
    for (Eigen::Index a = 0; a < n_train; ++a) {
      for (Eigen::Index b = 0; b < n_train; ++b) k_train(a, b) = g.gram(train_idx[a], train_idx[b]);
    }
    for (Eigen::Index a = 0; a < n_test; ++a) {
      for (Eigen::Index b = 0; b < n_train; ++b) k_cross(a, b) = g.gram(test_idx[a], train_idx[b]);
    }
    const RidgeModel model = cfg.fit_offset ? krr_fit_offset(k_train, y, cfg.lambda)
                                            : krr_fit(k_train, y, cfg.lambda);
    const Eigen::VectorXd scores = krr_predict(model, k_cross).col(0);
    const std::vector<double> s(scores.data(), scores.data() + scores.size());
    out.push_back({run, v, average_precision(s, test_labels), f1_score(s, test_labels, 0.0),
                   g.clipped_mass});
  }
  return out;
}

DblpResult run_dblp(const SimplexStream& stream, const DblpConfig& cfg, std::uint64_t seed) {
  if (!(cfg.train_frac > 0.0 && cfg.train_frac < 1.0)) {
    throw InvalidArgument("train_frac must lie in (0, 1)");
  }
  const TemporalSplit split = temporal_split(stream, cfg.temporal_frac);
  const HistoryIndex index(split.history, cfg.caps);
  const auto all = enumerate_from_index(index, split.future);

  DblpResult result;
  result.history_size = split.history.size();
  result.future_size = split.future.size();
  for (int r = 0; r < cfg.runs; ++r) {
    const auto ur = static_cast<std::uint64_t>(r);
    const auto cands = sample_candidates(all, cfg.caps, Rng::derive(seed, {stream::kDblpMine, ur}));
    std::vector<EgoComplexSample> egos(cands.size());
    parallel_for(cands.size(), cfg.threads,
                 [&](std::size_t i) { egos[i] = build_ego_complex(index, cands[i], cfg.ego); });
    if (cfg.shuffle_labels) {
      std::vector<bool> labels;
      for (const auto& e : egos) labels.push_back(e.positive);
      std::vector<int> perm(labels.size());
      std::iota(perm.begin(), perm.end(), 0);
      Rng(Rng::derive(seed, {stream::kDblpShuffle, ur})).shuffle(std::span<int>(perm));
      for (std::size_t i = 0; i < egos.size(); ++i) egos[i].positive = labels[perm[i]];
    }
    std::vector<int> order(egos.size());
    std::iota(order.begin(), order.end(), 0);
    Rng(Rng::derive(seed, {stream::kDblpSplit, ur})).shuffle(std::span<int>(order));
    const auto n_train = static_cast<std::size_t>(
        std::floor(cfg.train_frac * static_cast<double>(order.size()) + 1e-9));
    const std::span<const int> train(order.data(), n_train);
    const std::span<const int> test(order.data() + n_train, order.size() - n_train);
    auto metrics = evaluate_egos(egos, train, test, cfg, r);
    result.runs.insert(result.runs.end(), metrics.begin(), metrics.end());

    std::vector<bool> in_train(egos.size(), false);
    for (int i : train) in_train[i] = true;
    for (std::size_t i = 0; i < egos.size(); ++i) {
      DblpCandidateRecord rec;
      rec.run = r;
      for (int k = 0; k < 3; ++k) rec.original_nodes[k] = stream.original_ids[cands[i].nodes[k]];
      rec.positive = egos[i].positive;
      rec.train = in_train[i];
      rec.ego_nodes = egos[i].complex.n_vertices();
      rec.ego_edges = static_cast<int>(egos[i].complex.n_edges());
      rec.ego_triangles = static_cast<int>(egos[i].complex.n_triangles());
      result.candidates.push_back(rec);
    }
  }
  return result;
}

void write_metrics_csv(std::ostream& out, const DblpResult& r, const DblpConfig& cfg,
                       std::uint64_t seed) {
  CsvWriter csv(out);
  csv.row({"seed", "runs", "lambda", "depth", "n_pos", "n_neg", "ego_size", "shuffle_labels",
           "run", "variant", "metric", "value", "stderr"});
  auto emit = [&](const std::string& run, Variant v, const std::string& metric, double value,
                  double se) {
    csv.row({std::to_string(seed), std::to_string(cfg.runs), format_double(cfg.lambda),
             std::to_string(cfg.kernel.depth), std::to_string(cfg.caps.n_pos),
             std::to_string(cfg.caps.n_neg), std::to_string(cfg.ego.ego_size),
             cfg.shuffle_labels ? "1" : "0", run, std::string(to_string(v)), metric,
             format_double(value), format_double(se)});
  };
  for (const auto& m : r.runs) {
    emit(std::to_string(m.run), m.variant, "ap", m.ap, 0.0);
    emit(std::to_string(m.run), m.variant, "f1", m.f1, 0.0);
  }
  for (Variant v : cfg.variants) {
    const MeanSe ap = r.ap(v), f1 = r.f1(v);
    emit("mean", v, "ap", ap.mean, ap.se);
    emit("mean", v, "f1", f1.mean, f1.se);
  }
}

void write_candidates_csv(std::ostream& out, const DblpResult& r) {
  CsvWriter csv(out);
  csv.row({"run", "a", "b", "c", "label", "split", "ego_nodes", "ego_edges", "ego_triangles"});
  for (const auto& c : r.candidates) {
    csv.row({std::to_string(c.run), std::to_string(c.original_nodes[0]),
             std::to_string(c.original_nodes[1]), std::to_string(c.original_nodes[2]),
             c.positive ? "1" : "0", c.train ? "train" : "test", std::to_string(c.ego_nodes),
             std::to_string(c.ego_edges), std::to_string(c.ego_triangles)});
  }
}

SimplexStream synthetic_stream(const SyntheticStreamConfig& cfg, std::uint64_t seed) {
  if (cfg.n_vertices < cfg.max_size || cfg.n_communities < 1 || cfg.min_size < 1 ||
      cfg.max_size < cfg.min_size) {
    throw InvalidArgument("inconsistent synthetic stream configuration");
  }
  if (!(cfg.p_outside >= 0.0 && cfg.p_outside <= 1.0)) throw InvalidArgument("p_outside must lie in [0, 1]");
  Rng rng(Rng::derive(seed, {stream::kDblpSynthetic}));
  SimplexStream out;
  out.n_vertices = cfg.n_vertices;
  out.original_ids.resize(static_cast<std::size_t>(cfg.n_vertices));
  std::iota(out.original_ids.begin(), out.original_ids.end(), std::int64_t{0});
  const int per = std::max(1, cfg.n_vertices / cfg.n_communities);
  for (int i = 0; i < cfg.n_simplices; ++i) {
    const int c = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(cfg.n_communities)));
    const int size = cfg.min_size + static_cast<int>(rng.uniform_int(
                                        static_cast<std::uint64_t>(cfg.max_size - cfg.min_size + 1)));
    std::vector<int> s;
    while (static_cast<int>(s.size()) < size) {
      int v;
      if (rng.bernoulli(cfg.p_outside)) {
        v = static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(cfg.n_vertices)));
      } else {
        v = std::min(cfg.n_vertices - 1,
                     c * per + static_cast<int>(rng.uniform_int(static_cast<std::uint64_t>(per))));
      }
      if (std::find(s.begin(), s.end(), v) == s.end()) s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    out.simplices.push_back(std::move(s));
    out.times.push_back(i / 4);  // four simplices per timestamp
  }
  return out;
}

}  // namespace topontk
