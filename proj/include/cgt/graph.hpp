#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/finite_group.hpp"

namespace cgt {

/// Fixed-size bitset sized at runtime.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  int count() const;
  /// Number of set bits shared with another bitset of the same size.
  int count_and(const Bitset &other) const;
  bool operator==(const Bitset &other) const = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Simple undirected graph: symmetric adjacency, no loops. Optional
/// per-vertex text labels. Immutable in spirit: build with add_edge,
/// then treat as read-only.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

  int vertex_count() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset &row(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  void add_edge(int u, int v);

  std::vector<int> neighbors(int v) const;
  /// Sorted edge list, u < v in each pair.
  std::vector<std::pair<int, int>> edges() const;
  std::uint64_t edge_count() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::string &label(int v) const { return labels_[v]; }
  void set_labels(std::vector<std::string> labels);

  /// `n <vertices> m <edges>` header then sorted `u v` lines.
  std::string to_edge_list() const;
  static Graph from_edge_list(const std::string &text);
  std::string to_dot() const;
  std::string to_json() const;

private:
  int n_ = 0;
  std::vector<Bitset> adj_;
  std::vector<std::string> labels_;
};

// ---- constructors ---------------------------------------------------------

/// Circulant on Z_n with connection set S (inverse-closed, no 0).
Graph circulant(int n, const std::vector<int> &s);

/// Cay(G, S): vertices are element ids, g ~ s*g for s in S.
Graph cayley_graph(const FiniteGroup &g, const std::vector<int> &s);

/// Cos(G, H, D): vertices are right cosets Hg, edges {Hg, Hdg}. D must
/// be inverse-closed, disjoint from H and a union of double cosets HdH.
Graph coset_graph(const FiniteGroup &g, const std::vector<int> &h,
                  const std::vector<int> &d);

/// Cos(G, H, H{g,g^-1}H); requires g outside H.
Graph coset_graph_from_arc(const FiniteGroup &grp, const std::vector<int> &h,
                           int g);

/// Largest normal subgroup of G inside H (trivial core means the coset
/// action of G on H's cosets is faithful).
std::vector<int> subgroup_core(const FiniteGroup &g, const std::vector<int> &h);

/// Gamma1[Gamma2]: (x1,x2) ~ (y1,y2) iff x1 ~ y1, or x1 = y1 and
/// x2 ~ y2. Vertex (x1,x2) has index x1 * |V2| + x2.
Graph lexicographic_product(const Graph &g1, const Graph &g2);

/// Generalized Petersen graph P(n, t): outer n-cycle u_i, inner vertices
/// v_i with v_i ~ v_{i+t}, spokes u_i ~ v_i. u_i = i, v_i = n + i.
Graph generalized_petersen(int n, int t);

/// Multilayer generalized Petersen graph parameters. t is accepted for
/// any unit mod m (canonical representative min(t, m-t) gives the same
/// edge set).
struct MPParams {
  int m, n, s, t;
  void validate() const; // throws std::invalid_argument
  int canonical_t() const;
};

/// MP_{m,n,s,t}: n layers of m vertices; (j,i) has index i*m + j.
/// Inner edges (j,i) ~ (j +- (k*s + t^i), i) for k in Z_{m/s}, spokes
/// (j,i) ~ (j, i+1 mod n).
Graph multilayer_generalized_petersen(const MPParams &params);

/// Cells adjacent iff some cross edge exists. Cell order follows the
/// given partition.
Graph quotient_graph(const Graph &g, const std::vector<std::vector<int>> &parts);

/// Induced subgraph on the given vertices (result vertex i = verts[i]).
Graph induced_subgraph(const Graph &g, const std::vector<int> &verts);

/// BFS shortest-path length; nullopt when disconnected.
std::optional<int> bfs_distance(const Graph &g, int u, int v);

} // namespace cgt
