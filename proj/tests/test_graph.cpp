#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cgt/graph.hpp"
#include "cgt/perm.hpp"

using namespace cgt;

namespace {

bool is_connected(const Graph &g) {
  for (int v = 1; v < g.vertex_count(); ++v)
    if (!bfs_distance(g, 0, v))
      return false;
  return true;
}

int component_count(const Graph &g) {
  std::vector<int> comp(g.vertex_count(), -1);
  int count = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (comp[v] >= 0)
      continue;
    comp[v] = count;
    std::vector<int> stack{v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x))
        if (comp[y] < 0) {
          comp[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  return count;
}

// shortest cycle length by BFS from every vertex
int girth(const Graph &g) {
  int best = -1;
  for (int root = 0; root < g.vertex_count(); ++root) {
    std::vector<int> dist(g.vertex_count(), -1), parent(g.vertex_count(), -1);
    dist[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (int y : g.neighbors(x)) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x]) {
          int cyc = dist[x] + dist[y] + 1;
          if (best < 0 || cyc < best)
            best = cyc;
        }
      }
    }
  }
  return best;
}

bool permutation_preserves_edges(const Graph &g, const Permutation &p) {
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v]))
      return false;
  return true;
}

// R(h) on MP vertices: (j, i) -> (j+1, i)
Permutation mp_shift(int m, int n) {
  std::vector<int> img(m * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      img[i * m + j] = i * m + (j + 1) % m;
  return Permutation(img);
}

// sigma_alpha: (j, i) -> (j*lambda, i+1)
Permutation mp_twist(int m, int n, int lambda) {
  std::vector<int> img(m * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      img[i * m + j] = ((i + 1) % n) * m +
                       static_cast<int>(static_cast<std::int64_t>(j) * lambda % m);
  return Permutation(img);
}

} // namespace

TEST_CASE("circulant graphs") {
  auto c5 = circulant(5, {1, -1});
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v)
    CHECK(c5.degree(v) == 2);
  CHECK(girth(c5) == 5);

  std::vector<int> all;
  for (int x = 1; x < 7; ++x)
    all.push_back(x);
  auto k7 = circulant(7, all);
  CHECK(k7.edge_count() == 21);
  for (int v = 0; v < 7; ++v)
    CHECK(k7.degree(v) == 6);

  auto g = circulant(9, {1, -1, 3, -3});
  for (int v = 0; v < 9; ++v)
    CHECK(g.degree(v) == 4);
  // rotation is an automorphism
  std::vector<int> rot(9);
  for (int v = 0; v < 9; ++v)
    rot[v] = (v + 1) % 9;
  CHECK(permutation_preserves_edges(g, Permutation(rot)));

  CHECK_THROWS_AS(circulant(6, {0, 1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(circulant(7, {1, 2, -1}), std::invalid_argument);
}

TEST_CASE("cayley graphs") {
  auto c5 = cayley_graph(cyclic_group(5), {1, 4});
  CHECK(c5.edges() == circulant(5, {1, -1}).edges());

  // disconnected: <2> is proper in Z_4
  auto two_k2 = cayley_graph(cyclic_group(4), {2});
  CHECK(two_k2.edge_count() == 2);
  CHECK(component_count(two_k2) == 2);

  // the flagship connection set S u S^-1 with S = {x, xz, xz^2, y}
  auto grp = mp_cayley_group(3, 3, 1, 4);
  int x = grp.generators()[0], y = grp.generators()[1], z = grp.generators()[2];
  std::vector<int> s;
  int cur = x;
  for (int k = 0; k < 3; ++k) {
    s.push_back(cur);
    cur = grp.mul(cur, z);
  }
  s.push_back(y);
  std::vector<int> conn = s;
  for (int e : s)
    conn.push_back(grp.inverse(e));
  auto gamma = cayley_graph(grp, conn);
  CHECK(gamma.vertex_count() == 81);
  for (int v = 0; v < 81; ++v)
    CHECK(gamma.degree(v) == 8);
  CHECK(gamma.edge_count() == 324);
  CHECK(is_connected(gamma));

  CHECK_THROWS_AS(cayley_graph(cyclic_group(5), {0, 1, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(cayley_graph(cyclic_group(5), {1}), std::invalid_argument);
}

TEST_CASE("right translations are automorphisms of Cayley graphs") {
  std::vector<std::pair<FiniteGroup, std::vector<int>>> cases;
  {
    auto g = split_metacyclic_group(27, 9, 4); // order 243
    cases.emplace_back(g, std::vector<int>{g.generators()[0],
                                           g.inverse(g.generators()[0]),
                                           g.generators()[1],
                                           g.inverse(g.generators()[1])});
  }
  {
    auto g = split_metacyclic_group(9, 3, 4);
    cases.emplace_back(g, std::vector<int>{g.generators()[0],
                                           g.inverse(g.generators()[0]),
                                           g.generators()[1],
                                           g.inverse(g.generators()[1])});
  }
  for (const auto &[g, conn] : cases) {
    auto gamma = cayley_graph(g, conn);
    for (int a = 0; a < g.size(); ++a) {
      std::vector<int> img(g.size());
      for (int v = 0; v < g.size(); ++v)
        img[v] = g.mul(v, a); // right translation
      if (!permutation_preserves_edges(gamma, Permutation(img))) {
        CAPTURE(a);
        FAIL("right translation is not an automorphism");
      }
    }
  }
}

TEST_CASE("coset graph with trivial subgroup is the Cayley graph") {
  auto g = split_metacyclic_group(9, 3, 4);
  std::vector<int> d{g.generators()[0], g.inverse(g.generators()[0])};
  // D must be a union of double cosets; with H = 1 that is automatic
  auto cos = coset_graph(g, {0}, d);
  auto cay = cayley_graph(g, d);
  CHECK(cos.edges() == cay.edges());
}

TEST_CASE("coset graph valency and connectivity") {
  // S4 via permutations
  auto s4perm = PermutationGroup(
      {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})});
  auto s4 = group_from_permutations(s4perm);
  REQUIRE(s4.order() == 24);

  std::mt19937 rng(2);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 12; ++trial) {
    int h1 = static_cast<int>(rng() % 24);
    auto h = s4.cyclic_subgroup(h1);
    if (h.size() == 24)
      continue;
    std::set<int> hset(h.begin(), h.end());
    int g0 = static_cast<int>(rng() % 24);
    if (hset.count(g0))
      continue;
    // D = H g H u H g^-1 H
    std::set<int> d;
    for (int gg : {g0, s4.inverse(g0)})
      for (int a : h)
        for (int b : h)
          d.insert(s4.mul(s4.mul(a, gg), b));
    bool meets_h = false;
    for (int x : d)
      if (hset.count(x))
        meets_h = true;
    if (meets_h)
      continue;
    std::vector<int> dv(d.begin(), d.end());
    auto gamma = coset_graph(s4, h, dv);
    CHECK(gamma.vertex_count() == 24 / static_cast<int>(h.size()));
    for (int v = 0; v < gamma.vertex_count(); ++v)
      CHECK(gamma.degree(v) == static_cast<int>(d.size() / h.size()));
    // connected iff <D> = G
    bool gen = s4.generated_subgroup(dv).size() == 24;
    CHECK(is_connected(gamma) == gen);
    ++checked;
  }
  CHECK(checked >= 5);
}

TEST_CASE("coset graph from an arc: edge-transitivity lemma sweep") {
  std::vector<FiniteGroup> groups;
  groups.push_back(group_from_permutations(PermutationGroup(
      {Permutation::from_cycles(3, {{0, 1}}), Permutation::from_cycles(3, {{0, 1, 2}})})));
  groups.push_back(group_from_permutations(PermutationGroup(
      {Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})})));
  groups.push_back(split_metacyclic_group(9, 3, 4));
  groups.push_back(split_metacyclic_group(13, 4, 5)); // 5^4 = 625 = 1 mod 13

  std::mt19937 rng(4);
  int sweeps = 0;
  for (const auto &g : groups) {
    for (int trial = 0; trial < 40 && sweeps < 30; ++trial) {
      int h1 = static_cast<int>(rng() % g.order());
      auto h = g.cyclic_subgroup(h1);
      if (h.size() == g.order())
        continue;
      std::set<int> hset(h.begin(), h.end());
      int g0 = static_cast<int>(rng() % g.order());
      if (hset.count(g0))
        continue;
      auto gamma = coset_graph_from_arc(g, h, g0);
      ++sweeps;

      // valency: |H : H n H^g| or twice it (Lemma on arc graphs)
      std::set<int> hg;
      for (int a : h)
        hg.insert(g.conj(a, g0));
      std::vector<int> meet;
      for (int a : h)
        if (hg.count(a))
          meet.push_back(a);
      int index = static_cast<int>(h.size() / meet.size());
      std::set<int> hgh, hginvh;
      for (int a : h)
        for (int b : h) {
          hgh.insert(g.mul(g.mul(a, g0), b));
          hginvh.insert(g.mul(g.mul(a, g.inverse(g0)), b));
        }
      bool arc_symmetric = hgh == hginvh;
      int expected_valency = arc_symmetric ? index : 2 * index;
      for (int v = 0; v < gamma.vertex_count(); ++v)
        CHECK(gamma.degree(v) == expected_valency);

      // connected iff <H, g> = G, with |G : <H,g>| components otherwise
      auto span = h;
      span.push_back(g0);
      auto sub = g.generated_subgroup(span);
      int comps = component_count(gamma);
      CHECK(comps == static_cast<int>(g.order() / sub.size()));

      // right multiplication action is edge-transitive: orbit of one
      // edge under the coset action covers every edge
      int n = g.size();
      std::vector<int> coset_of(n, -1);
      std::vector<int> reps;
      for (int x0 = 0; x0 < n; ++x0) {
        if (coset_of[x0] >= 0)
          continue;
        int id = static_cast<int>(reps.size());
        reps.push_back(x0);
        for (int a : h)
          coset_of[g.mul(a, x0)] = id;
      }
      auto act = [&](int coset, int by) { return coset_of[g.mul(reps[coset], by)]; };
      auto e0 = gamma.edges().front();
      std::set<std::pair<int, int>> orbit;
      std::vector<std::pair<int, int>> queue{e0};
      auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      orbit.insert(e0);
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (int gen : g.generators()) {
          auto img = norm(act(queue[i].first, gen), act(queue[i].second, gen));
          if (orbit.insert(img).second)
            queue.push_back(img);
        }
      CHECK(orbit.size() == gamma.edge_count());

      // arc-transitive iff HgH = Hg^-1 H: orbit of the ordered arc
      std::set<std::pair<int, int>> arc_orbit;
      std::vector<std::pair<int, int>> aq{{e0.first, e0.second}};
      arc_orbit.insert(aq[0]);
      for (std::size_t i = 0; i < aq.size(); ++i)
        for (int gen : g.generators()) {
          auto img = std::make_pair(act(aq[i].first, gen), act(aq[i].second, gen));
          if (arc_orbit.insert(img).second)
            aq.push_back(img);
        }
      CHECK((arc_orbit.size() == 2 * gamma.edge_count()) == arc_symmetric);
    }
  }
  CHECK(sweeps >= 20);
}

TEST_CASE("subgroup core detects faithful coset actions") {
  auto g = split_metacyclic_group(9, 3, 4);
  int s = g.generators()[0], t = g.generators()[1];
  // <s^3> is central, hence its own core
  CHECK(subgroup_core(g, g.cyclic_subgroup(g.pow(s, 3))).size() == 3);
  // <t> is core-free: it is not normal and has prime order
  CHECK(subgroup_core(g, g.cyclic_subgroup(t)) == std::vector<int>{0});
}

TEST_CASE("lexicographic product") {
  auto c9 = circulant(9, {1, -1});
  Graph k1(1);
  auto same = lexicographic_product(c9, k1);
  CHECK(same.edges() == c9.edges());

  Graph three_k1(3); // empty graph on 3 vertices
  auto lex = lexicographic_product(c9, three_k1);
  CHECK(lex.vertex_count() == 27);
  for (int v = 0; v < 27; ++v)
    CHECK(lex.degree(v) == 6);

  Graph k2(2);
  k2.add_edge(0, 1);
  auto k4 = lexicographic_product(k2, k2);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
}

TEST_CASE("generalized Petersen graphs") {
  auto pet = generalized_petersen(5, 2);
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  for (int v = 0; v < 10; ++v)
    CHECK(pet.degree(v) == 3);
  CHECK(girth(pet) == 5);

  auto cube = generalized_petersen(4, 1);
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.edge_count() == 12);
  CHECK(girth(cube) == 4);
  // bipartite: 2-color by BFS
  std::vector<int> color(8, -1);
  color[0] = 0;
  std::vector<int> queue{0};
  bool bipartite = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int y : cube.neighbors(queue[i])) {
      if (color[y] < 0) {
        color[y] = 1 - color[queue[i]];
        queue.push_back(y);
      } else if (color[y] == color[queue[i]])
        bipartite = false;
    }
  CHECK(bipartite);

  CHECK_THROWS_AS(generalized_petersen(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(generalized_petersen(2, 1), std::invalid_argument);
}

TEST_CASE("multilayer generalized Petersen graphs") {
  MPParams flagship{27, 3, 9, 4};
  auto gamma = multilayer_generalized_petersen(flagship);
  CHECK(gamma.vertex_count() == 81);
  for (int v = 0; v < 81; ++v)
    CHECK(gamma.degree(v) == 8); // 2(m/s + 1)
  CHECK(gamma.edge_count() == 324);
  CHECK(gamma.label(0) == "(0,0)");
  CHECK(gamma.label(27) == "(0,1)");

  // n = 2 gives the generalized Petersen valency 3
  auto p52 = multilayer_generalized_petersen({5, 2, 5, 2});
  CHECK(p52.vertex_count() == 10);
  for (int v = 0; v < 10; ++v)
    CHECK(p52.degree(v) == 3);

  // R(h) and sigma_alpha (t = lambda) are automorphisms
  CHECK(permutation_preserves_edges(gamma, mp_shift(27, 3)));
  CHECK(permutation_preserves_edges(gamma, mp_twist(27, 3, 4)));
  // sigma_beta: (j,i) -> (-j,i)
  std::vector<int> inv(81);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 27; ++j)
      inv[i * 27 + j] = i * 27 + (27 - j) % 27;
  CHECK(permutation_preserves_edges(gamma, Permutation(inv)));

  // t and m - t give literally the same edge set
  auto mirror = multilayer_generalized_petersen({27, 3, 9, 23});
  CHECK(mirror.edges() == gamma.edges());

  CHECK_THROWS_AS(multilayer_generalized_petersen({27, 3, 9, 3}),
                  std::invalid_argument); // gcd(t, m) != 1
  CHECK_THROWS_AS(multilayer_generalized_petersen({27, 3, 5, 4}),
                  std::invalid_argument); // s does not divide m
  CHECK(MPParams{27, 3, 9, 23}.canonical_t() == 4);
}

TEST_CASE("layer subgraph of the flagship is a lexicographic product") {
  auto gamma = multilayer_generalized_petersen({27, 3, 9, 4});
  std::vector<int> v0(27);
  std::iota(v0.begin(), v0.end(), 0);
  auto layer = induced_subgraph(gamma, v0);
  // explicit isomorphism onto C9 o 3K1: j -> (j mod 9) * 3 + j / 9
  auto c9 = circulant(9, {1, -1});
  Graph three_k1(3);
  auto lex = lexicographic_product(c9, three_k1);
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b) {
      int fa = (a % 9) * 3 + a / 9, fb = (b % 9) * 3 + b / 9;
      CHECK(layer.adjacent(a, b) == lex.adjacent(fa, fb));
    }
}

TEST_CASE("quotient graphs") {
  auto pet = generalized_petersen(5, 2);
  std::vector<std::vector<int>> singletons;
  for (int v = 0; v < 10; ++v)
    singletons.push_back({v});
  CHECK(quotient_graph(pet, singletons).edges() == pet.edges());

  // flagship by layers: triangle
  auto gamma = multilayer_generalized_petersen({27, 3, 9, 4});
  std::vector<std::vector<int>> layers(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 27; ++j)
      layers[i].push_back(i * 27 + j);
  auto q = quotient_graph(gamma, layers);
  CHECK(q.vertex_count() == 3);
  CHECK(q.edge_count() == 3);

  // layer subgraph by its 9 parts (residues mod 9): a 9-cycle
  std::vector<int> v0(27);
  std::iota(v0.begin(), v0.end(), 0);
  auto layer = induced_subgraph(gamma, v0);
  std::vector<std::vector<int>> parts(9);
  for (int j = 0; j < 27; ++j)
    parts[j % 9].push_back(j);
  auto y = quotient_graph(layer, parts);
  CHECK(y.vertex_count() == 9);
  CHECK(y.edge_count() == 9);
  for (int v = 0; v < 9; ++v)
    CHECK(y.degree(v) == 2);
  CHECK(is_connected(y));

  CHECK_THROWS_AS(quotient_graph(pet, {{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("induced subgraphs and distances") {
  auto pet = generalized_petersen(5, 2);
  std::vector<int> all(10);
  std::iota(all.begin(), all.end(), 0);
  CHECK(induced_subgraph(pet, all).edges() == pet.edges());

  CHECK(bfs_distance(pet, 3, 3) == 0);
  CHECK(bfs_distance(pet, 0, 1) == 1);
  CHECK(bfs_distance(pet, 0, 7) == 2);

  auto two_k2 = cayley_graph(cyclic_group(4), {2});
  CHECK(!bfs_distance(two_k2, 0, 1).has_value());
  CHECK_THROWS_AS(bfs_distance(pet, 0, 99), std::out_of_range);
}

TEST_CASE("serialization round trips") {
  auto gamma = multilayer_generalized_petersen({27, 3, 9, 4});
  auto text = gamma.to_edge_list();
  CHECK(text.substr(0, text.find('\n')) == "n 81 m 324");
  auto back = Graph::from_edge_list(text);
  CHECK(back.edges() == gamma.edges());
  CHECK(back.to_edge_list() == text);

  CHECK_THROWS_AS(Graph::from_edge_list("n 5 m 2\n0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list("bogus"), std::invalid_argument);

  auto dot = gamma.to_dot();
  CHECK(dot.find("graph G {") == 0);
  CHECK(dot.find("label=\"(0,1)\"") != std::string::npos);

  auto js = gamma.to_json();
  CHECK(js.find("\"n\": 81") != std::string::npos);
}
