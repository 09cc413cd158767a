#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "topontk/complex.hpp"
#include "topontk/experiments.hpp"
#include "topontk/ntk.hpp"

namespace topontk {

/// Temporal stream of simplices (author sets) with dense 0-based vertex ids.
/// Sorted by timestamp; equal timestamps keep file order.
struct SimplexStream {
  std::vector<std::vector<int>> simplices;  // each sorted, duplicates removed
  std::vector<std::int64_t> times;
  std::vector<std::int64_t> original_ids;   // dense id -> id in the source files
  int n_vertices = 0;

  std::size_t size() const { return simplices.size(); }
  bool operator==(const SimplexStream&) const = default;
};

/// Reads the three-file ScHoLP layout: per-simplex sizes, the concatenated
/// vertex ids and per-simplex timestamps, one integer per line. Ids are
/// remapped to their rank among the distinct ids. FormatError on any count
/// mismatch or malformed line.
SimplexStream parse_scholp(std::istream& nverts, std::istream& simplices, std::istream& times);
SimplexStream parse_scholp_files(const std::string& nverts_path,
                                 const std::string& simplices_path,
                                 const std::string& times_path);

/// Writes the stream in the same layout using the original ids.
void write_scholp(std::ostream& nverts, std::ostream& simplices, std::ostream& times,
                  const SimplexStream& stream);

struct TemporalSplit {
  SimplexStream history;
  SimplexStream future;
};

/// First floor(frac N) simplices of the (time-sorted) stream form the history.
TemporalSplit temporal_split(const SimplexStream& stream, double frac);

struct MiningCaps {
  int max_simplices = 50000;   // history prefix used for mining and egos
  int max_simplex_size = 10;   // larger history simplices are dropped entirely
  int n_pos = 120;
  int n_neg = 120;
};

struct CandidateTriad {
  std::array<int, 3> nodes{};  // sorted dense ids
  bool positive = false;
  bool operator==(const CandidateTriad&) const = default;
};

/// History restricted by the caps, with the lookups the miner and the ego
/// builder share.
class HistoryIndex {
 public:
  HistoryIndex(const SimplexStream& history, const MiningCaps& caps);

  const std::vector<std::vector<int>>& simplices() const { return simplices_; }
  int n_vertices() const { return n_vertices_; }
  /// Number of retained simplices containing both u and v.
  int cooccurrence(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return neighbors_[v]; }
  /// Retained simplex ids containing v, ascending.
  const std::vector<int>& incident(int v) const { return incident_[v]; }
  /// Some retained simplex of size >= 3 contains all three vertices.
  bool closed(const std::array<int, 3>& triad) const;
  /// The retained 1-skeleton (every pair inside a retained simplex).
  SimplicialComplex skeleton() const;

 private:
  std::vector<std::vector<int>> simplices_;
  std::unordered_map<std::uint64_t, int> pair_count_;
  std::vector<std::vector<int>> neighbors_;  // sorted
  std::vector<std::vector<int>> incident_;
  int n_vertices_ = 0;
};

/// Some simplex of the stream contains all three vertices.
bool contains_triad(const SimplexStream& stream, const std::array<int, 3>& triad);

/// Every open triad of the capped history with its label, lexicographic.
std::vector<CandidateTriad> enumerate_candidates(const SimplexStream& history,
                                                 const SimplexStream& future,
                                                 const MiningCaps& caps);

/// n_pos positives and n_neg negatives drawn uniformly without replacement
/// from enumerate_candidates; positives first, each class in sampled order.
/// InsufficientCandidates when a class is too small.
std::vector<CandidateTriad> mine_candidates(const SimplexStream& history,
                                            const SimplexStream& future,
                                            const MiningCaps& caps, std::uint64_t seed);

struct EgoCaps {
  int ego_size = 10;
  int max_group_size = 8;
  int max_local_triangles = 200;
};

struct EgoComplexSample {
  SimplicialComplex complex;
  EdgeFeatures features = EdgeFeatures::constant(0);
  std::vector<int> node_map;       // local -> dense global id
  std::array<int, 3> triad_local{0, 1, 2};
  bool positive = false;
};

/// Ego complex around a triad: the triad plus the highest co-occurrence
/// neighbors (ties by smaller id), induced history edges, and the 3-subsets
/// of history simplices of size <= max_group_size inside the node set.
EgoComplexSample build_ego_complex(const HistoryIndex& index, const CandidateTriad& triad,
                                   const EgoCaps& caps = {});
EgoComplexSample build_ego_complex(const SimplexStream& history, const CandidateTriad& triad,
                                   const MiningCaps& mining = {}, const EgoCaps& caps = {});

/// Node-level input for the graph baseline: propagator (A + I) / |A + I|_2
/// on the ego 1-skeleton and constant node features.
PreparedInput prepare_node_input(const SimplicialComplex& complex, const KernelConfig& cfg);

/// Pooled node-level graph NTK between two egos, |V|^{-1/2} per side.
double node_graph_ntk(const EgoComplexSample& a, const EgoComplexSample& b,
                      const KernelConfig& cfg);

/// Average precision (step-wise, ties grouped by score) and F1 at score > 0.
double average_precision(std::span<const double> scores, std::span<const int> labels);
double f1_score(std::span<const double> scores, std::span<const int> labels, double threshold);

struct DblpConfig {
  double temporal_frac = 0.7;
  MiningCaps caps{};
  EgoCaps ego{};
  // Constant features zero out some propagated variances (see the
  // triangle-count note), so s'(0) = 0 is used here as well.
  KernelConfig kernel = [] {
    KernelConfig k;
    k.zero_variance = ZeroVariance::ZeroDerivative;
    return k;
  }();
  double lambda = 1e-3;
  int runs = 5;
  double train_frac = 0.7;  // random candidate split per run
  bool fit_offset = true;
  bool shuffle_labels = false;  // permutation-null control
  // Graph selects the node-level baseline; the others are edge-level.
  std::vector<Variant> variants{Variant::Graph, Variant::Lower, Variant::Upper, Variant::Full};
  int threads = 1;
};

struct DblpRunMetrics {
  int run = 0;
  Variant variant = Variant::Full;
  double ap = 0.0;
  double f1 = 0.0;
  double clipped_mass = 0.0;
};

struct DblpCandidateRecord {
  int run = 0;
  std::array<std::int64_t, 3> original_nodes{};
  bool positive = false;
  bool train = false;
  int ego_nodes = 0;
  int ego_edges = 0;
  int ego_triangles = 0;
};

struct DblpResult {
  std::vector<DblpRunMetrics> runs;
  std::vector<DblpCandidateRecord> candidates;
  std::size_t history_size = 0;
  std::size_t future_size = 0;

  MeanSe ap(Variant v) const;
  MeanSe f1(Variant v) const;
};

DblpResult run_dblp(const SimplexStream& stream, const DblpConfig& cfg, std::uint64_t seed);

/// Run on explicit candidate egos (already labeled); used by run_dblp per run.
std::vector<DblpRunMetrics> evaluate_egos(std::span<const EgoComplexSample> egos,
                                          std::span<const int> train_idx,
                                          std::span<const int> test_idx, const DblpConfig& cfg,
                                          int run);

void write_metrics_csv(std::ostream& out, const DblpResult& r, const DblpConfig& cfg,
                       std::uint64_t seed);
void write_candidates_csv(std::ostream& out, const DblpResult& r);

struct SyntheticStreamConfig {
  int n_vertices = 400;
  int n_simplices = 6000;
  int n_communities = 40;
  double p_outside = 0.1;  // chance an author is drawn outside the community
  int min_size = 2;
  int max_size = 5;
};

/// Community-structured random co-authorship stream with increasing times.
SimplexStream synthetic_stream(const SyntheticStreamConfig& cfg, std::uint64_t seed);

namespace stream {
inline constexpr std::uint64_t kDblpMine = 0x64626c0001;
inline constexpr std::uint64_t kDblpSplit = 0x64626c0002;
inline constexpr std::uint64_t kDblpShuffle = 0x64626c0003;
inline constexpr std::uint64_t kDblpSynthetic = 0x64626c0004;
}  // namespace stream

}  // namespace topontk
