#include "cgt/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace cgt {

int Bitset::count() const {
  int c = 0;
  for (std::uint64_t w : w_)
    c += std::popcount(w);
  return c;
}

int Bitset::count_and(const Bitset &other) const {
  int c = 0;
  for (std::size_t i = 0; i < w_.size(); ++i)
    c += std::popcount(w_[i] & other.w_[i]);
  return c;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::out_of_range("add_edge: vertex out of range");
  if (u == v)
    throw std::invalid_argument("add_edge: loops not allowed");
  adj_[u].set(v);
  adj_[v].set(u);
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u)
    if (adj_[v].test(u))
      out.push_back(u);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adj_[u].test(v))
        out.emplace_back(u, v);
  return out;
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t total = 0;
  for (int v = 0; v < n_; ++v)
    total += degree(v);
  return total / 2;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (static_cast<int>(labels.size()) != n_)
    throw std::invalid_argument("set_labels: size mismatch");
  labels_ = std::move(labels);
}

std::string Graph::to_edge_list() const {
  std::ostringstream os;
  auto e = edges();
  os << "n " << n_ << " m " << e.size() << "\n";
  for (auto [u, v] : e)
    os << u << " " << v << "\n";
  return os.str();
}

Graph Graph::from_edge_list(const std::string &text) {
  std::istringstream is(text);
  std::string kn, km;
  int n = -1;
  std::uint64_t m = 0;
  if (!(is >> kn >> n >> km >> m) || kn != "n" || km != "m" || n < 0)
    throw std::invalid_argument("edge list: bad header (want `n <v> m <e>`)");
  Graph g(n);
  for (std::uint64_t i = 0; i < m; ++i) {
    int u, v;
    if (!(is >> u >> v))
      throw std::invalid_argument("edge list: truncated at edge " +
                                  std::to_string(i));
    g.add_edge(u, v);
  }
  return g;
}

std::string Graph::to_dot() const {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < n_; ++v) {
    os << "  " << v;
    if (has_labels())
      os << " [label=\"" << labels_[v] << "\"]";
    os << ";\n";
  }
  for (auto [u, v] : edges())
    os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string Graph::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [u, v] : edges())
    j["edges"].push_back({u, v});
  if (has_labels())
    j["labels"] = labels_;
  return j.dump(2) + "\n";
}

// ---- constructors ---------------------------------------------------------

Graph circulant(int n, const std::vector<int> &s) {
  std::set<int> set;
  for (int x : s) {
    int r = ((x % n) + n) % n;
    if (r == 0)
      throw std::invalid_argument("circulant: 0 in connection set");
    set.insert(r);
  }
  for (int x : set)
    if (!set.count((n - x) % n))
      throw std::invalid_argument("circulant: connection set not inverse-closed");
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int x : set)
      g.add_edge(v, (v + x) % n);
  return g;
}

Graph cayley_graph(const FiniteGroup &grp, const std::vector<int> &s) {
  std::unordered_set<int> set(s.begin(), s.end());
  if (set.count(0))
    throw std::invalid_argument("cayley_graph: identity in connection set");
  for (int x : set)
    if (!set.count(grp.inverse(x)))
      throw std::invalid_argument("cayley_graph: connection set not inverse-closed");
  Graph g(grp.size());
  for (int v = 0; v < grp.size(); ++v)
    for (int x : set)
      g.add_edge(v, grp.mul(x, v)); // edge {g, sg}
  std::vector<std::string> labels;
  labels.reserve(grp.size());
  for (int v = 0; v < grp.size(); ++v)
    labels.push_back(grp.label(v));
  g.set_labels(std::move(labels));
  return g;
}

Graph coset_graph(const FiniteGroup &g, const std::vector<int> &h,
                  const std::vector<int> &d) {
  if (!g.is_subgroup(h))
    throw std::invalid_argument("coset_graph: H is not a subgroup");
  std::unordered_set<int> hset(h.begin(), h.end());
  std::unordered_set<int> dset(d.begin(), d.end());
  for (int x : dset) {
    if (hset.count(x))
      throw std::invalid_argument("coset_graph: D intersects H");
    if (!dset.count(g.inverse(x)))
      throw std::invalid_argument("coset_graph: D not inverse-closed");
    for (int h1 : h)
      for (int h2 : h)
        if (!dset.count(g.mul(g.mul(h1, x), h2)))
          throw std::invalid_argument("coset_graph: D not a union of double cosets");
  }
  int n = g.size();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0)
      continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int hh : h)
      coset_of[g.mul(hh, x)] = id;
  }
  Graph out(static_cast<int>(reps.size()));
  for (int x = 0; x < n; ++x)
    for (int dd : dset)
      out.add_edge(coset_of[x], coset_of[g.mul(dd, x)]);
  std::vector<std::string> labels;
  for (int r : reps)
    labels.push_back("H " + g.label(r));
  out.set_labels(std::move(labels));
  return out;
}

Graph coset_graph_from_arc(const FiniteGroup &grp, const std::vector<int> &h,
                           int g) {
  std::unordered_set<int> hset(h.begin(), h.end());
  if (hset.count(g))
    throw std::invalid_argument("coset_graph_from_arc: g lies in H");
  std::set<int> d;
  for (int x : {g, grp.inverse(g)})
    for (int h1 : h)
      for (int h2 : h)
        d.insert(grp.mul(grp.mul(h1, x), h2));
  return coset_graph(grp, h, std::vector<int>(d.begin(), d.end()));
}

std::vector<int> subgroup_core(const FiniteGroup &g, const std::vector<int> &h) {
  std::unordered_set<int> hset(h.begin(), h.end());
  std::vector<int> conjugators = g.generators();
  if (conjugators.empty()) {
    conjugators.resize(g.size());
    std::iota(conjugators.begin(), conjugators.end(), 0);
  }
  // keep the elements of H whose whole conjugation orbit stays in H
  std::vector<int> core;
  for (int x : h) {
    std::vector<int> orbit{x};
    std::unordered_set<int> seen{x};
    bool inside = true;
    for (std::size_t i = 0; i < orbit.size() && inside; ++i)
      for (int c : conjugators) {
        int y = g.conj(orbit[i], c);
        if (!hset.count(y)) {
          inside = false;
          break;
        }
        if (seen.insert(y).second)
          orbit.push_back(y);
      }
    if (inside)
      core.push_back(x);
  }
  return core;
}

Graph lexicographic_product(const Graph &g1, const Graph &g2) {
  int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  Graph out(n1 * n2);
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n2; ++x2) {
      int v = x1 * n2 + x2;
      for (int y1 : g1.neighbors(x1))
        for (int y2 = 0; y2 < n2; ++y2)
          out.add_edge(v, y1 * n2 + y2);
      for (int y2 : g2.neighbors(x2))
        out.add_edge(v, x1 * n2 + y2);
    }
  return out;
}

Graph generalized_petersen(int n, int t) {
  if (n < 3 || t < 1 || 2 * t >= n)
    throw std::invalid_argument("generalized_petersen: need n >= 3, 1 <= t < n/2");
  Graph g(2 * n);
  for (int i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);         // outer cycle
    g.add_edge(n + i, n + (i + t) % n); // inner edges
    g.add_edge(i, n + i);               // spokes
  }
  return g;
}

void MPParams::validate() const {
  if (m < 3 || n < 2)
    throw std::invalid_argument("mp: need m >= 3, n >= 2");
  if (s < 1 || m % s != 0)
    throw std::invalid_argument("mp: s must divide m");
  if (t < 1 || t >= m || std::gcd(t, m) != 1)
    throw std::invalid_argument("mp: need 1 <= t < m with gcd(t, m) = 1");
}

int MPParams::canonical_t() const { return std::min(t % m, m - t % m); }

Graph multilayer_generalized_petersen(const MPParams &params) {
  params.validate();
  const auto [m, n, s, t] = params;
  Graph g(m * n);
  std::int64_t tpow = 1 % m;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m / s; ++k) {
        int step = static_cast<int>((static_cast<std::int64_t>(k) * s + tpow) % m);
        g.add_edge(i * m + j, i * m + (j + step) % m);
      }
      g.add_edge(i * m + j, ((i + 1) % n) * m + j); // spoke
    }
    tpow = tpow * t % m;
  }
  std::vector<std::string> labels(m * n); // (j,i) -> i*m + j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      labels[i * m + j] =
          "(" + std::to_string(j) + "," + std::to_string(i) + ")";
  g.set_labels(std::move(labels));
  return g;
}

Graph quotient_graph(const Graph &g, const std::vector<std::vector<int>> &parts) {
  std::vector<int> cell_of(g.vertex_count(), -1);
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (int v : parts[c]) {
      if (v < 0 || v >= g.vertex_count() || cell_of[v] >= 0)
        throw std::invalid_argument("quotient_graph: not a partition");
      cell_of[v] = static_cast<int>(c);
    }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (cell_of[v] < 0)
      throw std::invalid_argument("quotient_graph: not a partition");
  Graph out(static_cast<int>(parts.size()));
  for (auto [u, v] : g.edges())
    if (cell_of[u] != cell_of[v])
      out.add_edge(cell_of[u], cell_of[v]);
  return out;
}

Graph induced_subgraph(const Graph &g, const std::vector<int> &verts) {
  std::vector<int> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    int v = verts[i];
    if (v < 0 || v >= g.vertex_count() || index[v] >= 0)
      throw std::invalid_argument("induced_subgraph: bad vertex set");
    index[v] = static_cast<int>(i);
  }
  Graph out(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (int u : g.neighbors(verts[i]))
      if (index[u] > static_cast<int>(i))
        out.add_edge(static_cast<int>(i), index[u]);
  return out;
}

std::optional<int> bfs_distance(const Graph &g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
    throw std::out_of_range("bfs_distance: vertex out of range");
  if (u == v)
    return 0;
  std::vector<int> dist(g.vertex_count(), -1);
  dist[u] = 0;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x))
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        if (y == v)
          return dist[y];
        queue.push_back(y);
      }
  }
  return std::nullopt;
}

} // namespace cgt
