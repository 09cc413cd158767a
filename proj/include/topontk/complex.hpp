#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace topontk {

using Edge = std::array<int, 2>;      // (i, j) with i < j
using Triangle = std::array<int, 3>;  // (i, j, k) with i < j < k

/// Oriented simplicial complex of dimension at most two.
///
/// Orientation follows increasing vertex index. Construction canonicalizes
/// the input (sorts endpoints, sorts and deduplicates simplices) and checks
/// that every triangle's three faces are edges of the complex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int n_vertices, std::vector<Edge> edges, std::vector<Triangle> triangles);

  int n_vertices() const { return n_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  std::size_t n_edges() const { return edges_.size(); }
  std::size_t n_triangles() const { return triangles_.size(); }

  /// Position of edge {i, j} in edges(), or -1.
  int edge_index(int i, int j) const;
  bool has_edge(int i, int j) const { return edge_index(i, j) >= 0; }
  bool has_triangle(const Triangle& t) const;

  /// Same vertices and edges, different triangle set.
  SimplicialComplex with_triangles(std::vector<Triangle> triangles) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int n_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<Triangle> triangles_;
};

/// Signed incidence matrices. b1 is |V| x |E|, b2 is |E| x |T|.
struct BoundaryMatrices {
  Eigen::MatrixXi b1;
  Eigen::MatrixXi b2;
};

BoundaryMatrices boundary_matrices(const SimplicialComplex& complex);

/// B2 over an explicit candidate triangle set; unfilled candidates get a
/// zero column. Used to compare complexes that share a candidate set.
Eigen::MatrixXi boundary_over_candidates(const SimplicialComplex& complex,
                                         std::span<const Triangle> candidates);

/// All 3-cliques of the 1-skeleton in lexicographic order.
std::vector<Triangle> three_cliques(const SimplicialComplex& complex);

/// Number of connected components of the 1-skeleton (isolated vertices count).
int connected_components(const SimplicialComplex& complex);

struct CycleChordSkeleton {
  SimplicialComplex skeleton;
  std::vector<Triangle> candidates;
};

/// Cycle edges (i, i+1) and chords (i, i+2), indices mod n, with the n
/// candidate triples {i, i+1, i+2}. Requires n >= 5.
CycleChordSkeleton cycle_chord_skeleton(int n);

/// Fills each candidate independently with probability q. One Bernoulli
/// draw per candidate, in the order given.
SimplicialComplex fill_candidates(const SimplicialComplex& skeleton,
                                  std::span<const Triangle> candidates, double q,
                                  std::uint64_t seed);

/// G(n, p) 1-skeleton (edges drawn in lexicographic order), then every
/// 3-clique filled independently with probability q (lexicographic order).
SimplicialComplex er_clique_complex(int n, double p, double q, std::uint64_t seed);

/// Toggles each 3-clique of the skeleton independently with probability eps.
SimplicialComplex flip_triangles(const SimplicialComplex& complex, double eps,
                                 std::uint64_t seed);

// Plain-text fixture format:
//   n <n_vertices>
//   e <i> <j>
//   t <i> <j> <k>
// Whitespace separated; '#' starts a comment.
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);
void write_complex(std::ostream& out, const SimplicialComplex& complex);
void write_complex_file(const std::string& path, const SimplicialComplex& complex);

}  // namespace topontk
