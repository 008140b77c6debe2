#include "cgt/graph_aut.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

using NbrLists = std::vector<std::vector<int>>;

NbrLists neighbor_lists(const Graph &g) {
  NbrLists out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    out[v] = g.neighbors(v);
  return out;
}

/// Lockstep color refinement of two graphs. Keys (old color, neighbor
/// color multiset) are ranked across both vertex sets so that color ids
/// stay comparable between the two sides. Returns false as soon as the
/// per-color counts diverge (no isomorphism can match the colorings).
/// On success colors are stable and the shared color count is returned
/// through ncolors.
bool refine_pair(const NbrLists &nbr1, std::vector<int> &c1, const NbrLists &nbr2,
                 std::vector<int> &c2, int &ncolors) {
  const int n1 = static_cast<int>(nbr1.size());
  const int n2 = static_cast<int>(nbr2.size());
  int prev = -1;
  for (;;) {
    using Key = std::pair<int, std::vector<int>>;
    std::vector<Key> k1(n1), k2(n2);
    for (int v = 0; v < n1; ++v) {
      std::vector<int> nc;
      nc.reserve(nbr1[v].size());
      for (int u : nbr1[v])
        nc.push_back(c1[u]);
      std::sort(nc.begin(), nc.end());
      k1[v] = {c1[v], std::move(nc)};
    }
    for (int v = 0; v < n2; ++v) {
      std::vector<int> nc;
      nc.reserve(nbr2[v].size());
      for (int u : nbr2[v])
        nc.push_back(c2[u]);
      std::sort(nc.begin(), nc.end());
      k2[v] = {c2[v], std::move(nc)};
    }
    std::map<Key, int> rank;
    for (const auto &k : k1)
      rank.emplace(k, 0);
    for (const auto &k : k2)
      rank.emplace(k, 0);
    int next = 0;
    for (auto &[key, r] : rank)
      r = next++;
    std::vector<int> count1(next, 0), count2(next, 0);
    for (int v = 0; v < n1; ++v) {
      c1[v] = rank[k1[v]];
      ++count1[c1[v]];
    }
    for (int v = 0; v < n2; ++v) {
      c2[v] = rank[k2[v]];
      ++count2[c2[v]];
    }
    if (count1 != count2)
      return false;
    if (next == prev) {
      ncolors = next;
      return true;
    }
    prev = next;
  }
}

struct SearchCtx {
  const NbrLists &nbr1;
  const NbrLists &nbr2;
  const Graph &g1;
  const Graph &g2;
  std::uint64_t max_nodes;
  std::uint64_t nodes = 0;
};

std::optional<std::vector<int>> search(SearchCtx &ctx, std::vector<int> c1,
                                       std::vector<int> c2) {
  if (++ctx.nodes > ctx.max_nodes)
    throw SearchBudgetExceeded("isomorphism search: node budget of " +
                               std::to_string(ctx.max_nodes) + " exhausted");
  int ncolors = 0;
  if (!refine_pair(ctx.nbr1, c1, ctx.nbr2, c2, ncolors))
    return std::nullopt;
  const int n = static_cast<int>(c1.size());
  if (ncolors == n) { // discrete: colors define the bijection
    std::vector<int> pos2(n);
    for (int v = 0; v < n; ++v)
      pos2[c2[v]] = v;
    std::vector<int> map(n);
    for (int v = 0; v < n; ++v)
      map[v] = pos2[c1[v]];
    for (int v = 0; v < n; ++v)
      for (int u : ctx.nbr1[v])
        if (!ctx.g2.adjacent(map[v], map[u]))
          return std::nullopt;
    return map;
  }
  // target cell: largest, then lowest color id
  std::vector<int> size(ncolors, 0);
  for (int v = 0; v < n; ++v)
    ++size[c1[v]];
  int cell = -1;
  for (int c = 0; c < ncolors; ++c)
    if (size[c] > 1 && (cell < 0 || size[c] > size[cell]))
      cell = c;
  int u = 0;
  while (c1[u] != cell)
    ++u;
  for (int v = 0; v < n; ++v) {
    if (c2[v] != cell)
      continue;
    auto d1 = c1, d2 = c2;
    d1[u] = ncolors;
    d2[v] = ncolors;
    if (auto r = search(ctx, std::move(d1), std::move(d2)))
      return r;
  }
  return std::nullopt;
}

std::optional<std::vector<int>>
run_search(const Graph &g1, std::vector<int> c1, const Graph &g2,
           std::vector<int> c2, std::uint64_t max_nodes) {
  if (g1.vertex_count() != g2.vertex_count() ||
      g1.edge_count() != g2.edge_count())
    return std::nullopt;
  auto nbr1 = neighbor_lists(g1);
  auto nbr2 = neighbor_lists(g2);
  SearchCtx ctx{nbr1, nbr2, g1, g2, max_nodes};
  return search(ctx, std::move(c1), std::move(c2));
}

} // namespace

std::optional<Permutation> are_isomorphic(const Graph &g1, const Graph &g2,
                                          int degree_bound,
                                          std::uint64_t max_nodes) {
  if (g1.vertex_count() > degree_bound || g2.vertex_count() > degree_bound)
    throw CapExceeded(std::max(g1.vertex_count(), g2.vertex_count()),
                      degree_bound);
  auto r = run_search(g1, std::vector<int>(g1.vertex_count(), 0), g2,
                      std::vector<int>(g2.vertex_count(), 0), max_nodes);
  if (!r)
    return std::nullopt;
  return Permutation(*r);
}

std::optional<Permutation>
colored_isomorphism(const Graph &g1, const std::vector<int> &colors1,
                    const Graph &g2, const std::vector<int> &colors2,
                    std::uint64_t max_nodes) {
  auto r = run_search(g1, colors1, g2, colors2, max_nodes);
  if (!r)
    return std::nullopt;
  return Permutation(*r);
}

PermutationGroup automorphism_group(const Graph &g, int degree_bound,
                                    std::uint64_t max_nodes) {
  const int n = g.vertex_count();
  if (n > degree_bound)
    throw CapExceeded(n, degree_bound);
  if (n <= 1)
    return PermutationGroup(std::max(n, 1));
  auto nbr = neighbor_lists(g);
  std::vector<Permutation> gens;

  // stabilizer chain sweep: level k collects generators fixing 0..k-1
  for (int k = 0; k < n; ++k) {
    // prefix coloring: vertices before k are pinned
    std::vector<int> base(n, 0);
    for (int i = 0; i < k; ++i)
      base[i] = i + 1;
    auto stable = base;
    int ncolors = 0;
    refine_pair(nbr, stable, nbr, stable, ncolors); // self-refinement
    if (ncolors == n)
      break; // the pointwise stabilizer of 0..k-1 is trivial
    std::vector<Permutation> level_gens;
    std::vector<char> in_orbit(n, 0);
    in_orbit[k] = 1;
    auto grow_orbit = [&]() {
      std::vector<int> queue{k};
      std::fill(in_orbit.begin(), in_orbit.end(), 0);
      in_orbit[k] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const auto &p : level_gens) {
          for (int x : {p[queue[i]], p.inverse()[queue[i]]})
            if (!in_orbit[x]) {
              in_orbit[x] = 1;
              queue.push_back(x);
            }
        }
    };
    for (int v = 0; v < n; ++v) {
      if (v == k || in_orbit[v] || stable[v] != stable[k])
        continue;
      auto c1 = base, c2 = base;
      c1[k] = n + 1;
      c2[v] = n + 1;
      auto r = run_search(g, c1, g, c2, max_nodes);
      if (r) {
        level_gens.emplace_back(*r);
        gens.push_back(level_gens.back());
        grow_orbit();
      }
    }
  }

  // certify: every generator must preserve the edge set
  for (const auto &p : gens)
    for (auto [u, v] : g.edges())
      if (!g.adjacent(p[u], p[v]))
        throw std::logic_error("automorphism_group: uncertified generator");
  if (gens.empty())
    return PermutationGroup(n);
  return PermutationGroup(gens);
}

bool is_block(const PermutationGroup &g, const std::vector<int> &cell) {
  const int n = g.degree();
  if (static_cast<int>(cell.size()) <= 1 || static_cast<int>(cell.size()) >= n)
    return false;
  std::vector<int> delta = cell;
  std::sort(delta.begin(), delta.end());
  std::set<int> dset(delta.begin(), delta.end());
  std::set<std::vector<int>> seen{delta};
  std::vector<std::vector<int>> queue{delta};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &p : g.generators()) {
      std::vector<int> img;
      img.reserve(queue[i].size());
      for (int x : queue[i])
        img.push_back(p[x]);
      std::sort(img.begin(), img.end());
      if (!seen.insert(img).second)
        continue;
      if (img != delta)
        for (int x : img)
          if (dset.count(x))
            return false; // proper overlap
      queue.push_back(img);
    }
  return true;
}

BlockSystem block_system_from_pair(const PermutationGroup &g, int alpha,
                                   int beta) {
  if (!g.transitivity_profile().transitive)
    throw std::invalid_argument("block_system_from_pair: group not transitive");
  const int n = g.degree();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  };
  unite(alpha, beta);
  bool changed = true;
  while (changed) {
    changed = false;
    // group vertices by class, then push each class through every generator
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v)
      classes[find(v)].push_back(v);
    for (const auto &[root, members] : classes)
      for (const auto &p : g.generators())
        for (int x : members)
          changed |= unite(p[root], p[x]);
  }
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < n; ++v)
    classes[find(v)].push_back(v);
  BlockSystem bs;
  for (auto &[root, members] : classes)
    bs.cells.push_back(std::move(members));
  bs.cell_size = static_cast<int>(bs.cells.front().size());
  for (const auto &c : bs.cells)
    if (static_cast<int>(c.size()) != bs.cell_size)
      throw std::logic_error("block_system_from_pair: non-uniform cells");
  return bs;
}

} // namespace cgt
