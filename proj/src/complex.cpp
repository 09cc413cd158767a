#include "topontk/complex.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "topontk/error.hpp"
#include "topontk/rng.hpp"

namespace topontk {
namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
  }
}

std::string edge_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<Edge> edges,
                                     std::vector<Triangle> triangles)
    : n_vertices_(n_vertices), edges_(std::move(edges)), triangles_(std::move(triangles)) {
  if (n_vertices_ < 0) throw IndexOutOfRange("negative vertex count");
  auto in_range = [&](int v) { return v >= 0 && v < n_vertices_; };

  for (auto& e : edges_) {
    if (!in_range(e[0]) || !in_range(e[1])) {
      throw IndexOutOfRange("edge " + edge_str(e[0], e[1]) + " with n_vertices=" +
                            std::to_string(n_vertices_));
    }
    if (e[0] == e[1]) throw IndexOutOfRange("self-loop at vertex " + std::to_string(e[0]));
    if (e[0] > e[1]) std::swap(e[0], e[1]);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  for (auto& t : triangles_) {
    for (int v : t) {
      if (!in_range(v)) {
        throw IndexOutOfRange("triangle vertex " + std::to_string(v) + " with n_vertices=" +
                              std::to_string(n_vertices_));
      }
    }
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) throw IndexOutOfRange("degenerate triangle");
  }
  std::sort(triangles_.begin(), triangles_.end());
  triangles_.erase(std::unique(triangles_.begin(), triangles_.end()), triangles_.end());

  for (const auto& t : triangles_) {
    const Edge faces[3] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
    for (const auto& f : faces) {
      if (!has_edge(f[0], f[1])) {
        throw ClosureViolation("face " + edge_str(f[0], f[1]) + " of triangle (" +
                               std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                               std::to_string(t[2]) + ") is not an edge");
      }
    }
  }
}

int SimplicialComplex::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  const Edge key{i, j};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

bool SimplicialComplex::has_triangle(const Triangle& t) const {
  Triangle key = t;
  std::sort(key.begin(), key.end());
  return std::binary_search(triangles_.begin(), triangles_.end(), key);
}

SimplicialComplex SimplicialComplex::with_triangles(std::vector<Triangle> triangles) const {
  return SimplicialComplex(n_vertices_, edges_, std::move(triangles));
}

BoundaryMatrices boundary_matrices(const SimplicialComplex& complex) {
  const auto& edges = complex.edges();
  const auto& tris = complex.triangles();
  BoundaryMatrices bm;
  bm.b1 = Eigen::MatrixXi::Zero(complex.n_vertices(), static_cast<Eigen::Index>(edges.size()));
  for (Eigen::Index e = 0; e < bm.b1.cols(); ++e) {
    bm.b1(edges[e][0], e) = -1;
    bm.b1(edges[e][1], e) = +1;
  }
  bm.b2 = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(edges.size()),
                                static_cast<Eigen::Index>(tris.size()));
  for (Eigen::Index t = 0; t < bm.b2.cols(); ++t) {
    const auto [i, j, k] = tris[t];
    bm.b2(complex.edge_index(j, k), t) = +1;
    bm.b2(complex.edge_index(i, k), t) = -1;
    bm.b2(complex.edge_index(i, j), t) = +1;
  }
  return bm;
}

Eigen::MatrixXi boundary_over_candidates(const SimplicialComplex& complex,
                                         std::span<const Triangle> candidates) {
  Eigen::MatrixXi b2 = Eigen::MatrixXi::Zero(static_cast<Eigen::Index>(complex.n_edges()),
                                             static_cast<Eigen::Index>(candidates.size()));
  for (Eigen::Index c = 0; c < b2.cols(); ++c) {
    if (!complex.has_triangle(candidates[c])) continue;
    Triangle t = candidates[c];
    std::sort(t.begin(), t.end());
    b2(complex.edge_index(t[1], t[2]), c) = +1;
    b2(complex.edge_index(t[0], t[2]), c) = -1;
    b2(complex.edge_index(t[0], t[1]), c) = +1;
  }
  return b2;
}

std::vector<Triangle> three_cliques(const SimplicialComplex& complex) {
  const int n = complex.n_vertices();
  std::vector<std::vector<int>> upper(n);  // neighbours with larger index, sorted
  for (const auto& e : complex.edges()) upper[e[0]].push_back(e[1]);
  std::vector<Triangle> out;
  for (int i = 0; i < n; ++i) {
    const auto& ni = upper[i];
    for (std::size_t a = 0; a < ni.size(); ++a) {
      const int j = ni[a];
      const auto& nj = upper[j];
      // intersect ni[a+1..] with nj
      auto p = ni.begin() + static_cast<std::ptrdiff_t>(a) + 1;
      auto q = nj.begin();
      while (p != ni.end() && q != nj.end()) {
        if (*p < *q) {
          ++p;
        } else if (*q < *p) {
          ++q;
        } else {
          out.push_back({i, j, *p});
          ++p;
          ++q;
        }
      }
    }
  }
  return out;
}

int connected_components(const SimplicialComplex& complex) {
  std::vector<int> parent(static_cast<std::size_t>(complex.n_vertices()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = complex.n_vertices();
  for (const auto& e : complex.edges()) {
    const int a = find(e[0]);
    const int b = find(e[1]);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

CycleChordSkeleton cycle_chord_skeleton(int n) {
  if (n < 5) throw TooSmall("cycle-chord skeleton needs n >= 5, got " + std::to_string(n));
  std::vector<Edge> edges;
  std::vector<Triangle> candidates;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n});
    edges.push_back({i, (i + 2) % n});
    Triangle t{i, (i + 1) % n, (i + 2) % n};
    std::sort(t.begin(), t.end());
    candidates.push_back(t);
  }
  std::sort(candidates.begin(), candidates.end());
  return {SimplicialComplex(n, std::move(edges), {}), std::move(candidates)};
}

SimplicialComplex fill_candidates(const SimplicialComplex& skeleton,
                                  std::span<const Triangle> candidates, double q,
                                  std::uint64_t seed) {
  check_probability(q, "q");
  Rng rng(seed);
  std::vector<Triangle> filled;
  for (const auto& c : candidates) {
    if (rng.bernoulli(q)) filled.push_back(c);
  }
  return skeleton.with_triangles(std::move(filled));
}

SimplicialComplex er_clique_complex(int n, double p, double q, std::uint64_t seed) {
  if (n < 0) throw InvalidArgument("negative vertex count");
  check_probability(p, "p");
  check_probability(q, "q");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.push_back({i, j});
    }
  }
  SimplicialComplex skeleton(n, std::move(edges), {});
  const auto cliques = three_cliques(skeleton);
  std::vector<Triangle> filled;
  for (const auto& c : cliques) {
    if (rng.bernoulli(q)) filled.push_back(c);
  }
  return skeleton.with_triangles(std::move(filled));
}

SimplicialComplex flip_triangles(const SimplicialComplex& complex, double eps,
                                 std::uint64_t seed) {
  check_probability(eps, "eps");
  Rng rng(seed);
  std::vector<Triangle> out;
  for (const auto& c : three_cliques(complex)) {
    const bool filled = complex.has_triangle(c);
    const bool flip = rng.bernoulli(eps);
    if (filled != flip) out.push_back(c);
  }
  return complex.with_triangles(std::move(out));
}

SimplicialComplex read_complex(std::istream& in) {
  int n = -1;
  std::vector<Edge> edges;
  std::vector<Triangle> tris;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& msg) {
      throw FormatError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (tag == "n") {
      if (!(ls >> n) || n < 0) fail("expected 'n <count>'");
    } else if (tag == "e") {
      Edge e;
      if (!(ls >> e[0] >> e[1])) fail("expected 'e <i> <j>'");
      edges.push_back(e);
    } else if (tag == "t") {
      Triangle t;
      if (!(ls >> t[0] >> t[1] >> t[2])) fail("expected 't <i> <j> <k>'");
      tris.push_back(t);
    } else {
      fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (n < 0) throw FormatError("missing 'n <count>' header");
  return SimplicialComplex(n, std::move(edges), std::move(tris));
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_complex(in);
}

void write_complex(std::ostream& out, const SimplicialComplex& complex) {
  out << "n " << complex.n_vertices() << '\n';
  for (const auto& e : complex.edges()) out << "e " << e[0] << ' ' << e[1] << '\n';
  for (const auto& t : complex.triangles()) {
    out << "t " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
}

void write_complex_file(const std::string& path, const SimplicialComplex& complex) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  write_complex(out, complex);
}

}  // namespace topontk
