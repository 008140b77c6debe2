#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "cgt/errors.hpp"
#include "cgt/finite_group.hpp"

using namespace cgt;

namespace {

// slow reference order: repeated multiplication
std::uint64_t naive_order(const FiniteGroup &g, int x) {
  std::uint64_t o = 1;
  int acc = x;
  while (acc != 0) {
    acc = g.mul(acc, x);
    ++o;
  }
  return o;
}

void check_group_laws(const FiniteGroup &g, int trials = 200) {
  std::mt19937 rng(7);
  auto r = [&] { return static_cast<int>(rng() % g.order()); };
  for (int i = 0; i < trials; ++i) {
    int a = r(), b = r(), c = r();
    CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
    CHECK(g.mul(a, 0) == a);
    CHECK(g.mul(0, a) == a);
    CHECK(g.mul(a, g.inverse(a)) == 0);
    CHECK(g.mul(g.inverse(a), a) == 0);
  }
}

} // namespace

TEST_CASE("cyclic group basics") {
  auto c12 = cyclic_group(12);
  CHECK(c12.order() == 12);
  CHECK(c12.is_abelian());
  CHECK(c12.is_cyclic());
  CHECK(c12.exponent() == 12);
  CHECK(!c12.p_group_prime().has_value());
  for (int x = 0; x < 12; ++x)
    CHECK(c12.element_order(x) == 12u / std::gcd(12, x == 0 ? 12 : x));
  check_group_laws(c12);

  auto c9 = cyclic_group(9);
  CHECK(c9.p_group_prime() == 3);
  CHECK(omega_s(c9, 3, 1) == std::vector<int>{0, 3, 6});
  CHECK(omega_s(c9, 3, 2).size() == 9);
}

TEST_CASE("two-parameter metacyclic presentation: invariants") {
  // a^9 = b^9 = 1, b^-1 a b = a^4 (p=3, r=s=1, t=u=0), order 81
  auto g = xu_zhang_group({3, 1, 1, 0, 0});
  CHECK(g.order() == 81);
  check_group_laws(g);
  int a = g.generators()[0], b = g.generators()[1];
  CHECK(g.element_order(a) == 9);
  CHECK(g.element_order(b) == 9);
  CHECK(g.conj(a, b) == g.pow(a, 4)); // defining relation
  CHECK(!g.is_abelian());
  CHECK(g.exponent() == 9);
  CHECK(g.derived_subgroup().size() == 3); // <a^3>
  CHECK(g.derived_subgroup() == g.cyclic_subgroup(g.pow(a, 3)));

  // order oracle on every element
  for (int x = 0; x < g.size(); ++x)
    CHECK(g.element_order(x) == naive_order(g, x));

  // center by brute force
  std::vector<int> z_brute;
  for (int x = 0; x < g.size(); ++x) {
    bool central = true;
    for (int y = 0; y < g.size() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    if (central)
      z_brute.push_back(x);
  }
  CHECK(g.center() == z_brute);
  CHECK(z_brute.size() == 9);
}

TEST_CASE("metacyclic presentation: order/exponent/derived across parameters") {
  struct Row {
    XuZhangParams prm;
    std::uint64_t order, exponent, derived;
    bool split;
  };
  // order p^(2(r+s)+t+u), exponent p^(r+s+t+u), |G'| = p^(s+u),
  // split exactly when s*t*u == 0
  std::vector<Row> rows = {
      {{3, 1, 0, 0, 0}, 9, 3, 1, true},
      {{3, 1, 1, 0, 0}, 81, 9, 3, true},
      {{3, 1, 0, 1, 0}, 27, 9, 1, true},
      {{3, 1, 0, 0, 1}, 27, 9, 3, true},
      {{3, 1, 1, 1, 0}, 243, 27, 3, true},
      {{3, 1, 1, 0, 1}, 243, 27, 9, true},
      {{3, 1, 1, 1, 1}, 729, 81, 9, false},
      {{5, 1, 1, 0, 0}, 625, 25, 5, true},
  };
  for (const auto &row : rows) {
    CAPTURE(row.prm.p);
    CAPTURE(row.prm.r);
    CAPTURE(row.prm.s);
    CAPTURE(row.prm.t);
    CAPTURE(row.prm.u);
    auto g = xu_zhang_group(row.prm);
    CHECK(g.order() == row.order);
    CHECK(g.exponent() == row.exponent);
    CHECK(g.derived_subgroup().size() == row.derived);
    auto meta = is_metacyclic(g);
    CHECK(meta.answer);
    auto split = is_split_metacyclic(g);
    CHECK(split.answer == row.split);
    if (split.answer) {
      // verify the witness: cyclic normal N + cyclic complement
      const auto &n = split.normal_subgroup;
      CHECK(g.is_subgroup(n));
      CHECK(g.is_normal(n));
      bool n_cyclic = false;
      for (int x : n)
        if (g.element_order(x) == n.size())
          n_cyclic = true;
      CHECK(n_cyclic);
      REQUIRE(split.complement_generator.has_value());
      int h = *split.complement_generator;
      auto hsub = g.cyclic_subgroup(h);
      CHECK(hsub.size() * n.size() == g.order());
      std::vector<int> meet;
      std::set_intersection(n.begin(), n.end(), hsub.begin(), hsub.end(),
                            std::back_inserter(meet));
      CHECK(meet == std::vector<int>{0});
    }
  }
}

TEST_CASE("split metacyclic constructor: relations and structure") {
  auto g = split_metacyclic_group(9, 3, 4); // C9 : C3, t^-1 s t = s^4
  CHECK(g.order() == 27);
  check_group_laws(g);
  int s = g.generators()[0], t = g.generators()[1];
  CHECK(g.element_order(s) == 9);
  CHECK(g.element_order(t) == 3);
  CHECK(g.conj(s, t) == g.pow(s, 4));
  CHECK(!g.is_abelian());
  CHECK(g.exponent() == 9);
  auto dg = g.derived_subgroup();
  CHECK(dg == g.cyclic_subgroup(g.pow(s, 3)));
  CHECK(g.center() == g.cyclic_subgroup(g.pow(s, 3)));
  CHECK(g.frattini_subgroup() == g.cyclic_subgroup(g.pow(s, 3)));

  auto big = split_metacyclic_group(27, 9, 4);
  CHECK(big.order() == 243);
  check_group_laws(big);
  CHECK(big.exponent() == 27);
  CHECK(big.element_order(big.generators()[0]) == 27);
  CHECK(big.element_order(big.generators()[1]) == 9);

  CHECK_THROWS_AS(split_metacyclic_group(9, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(split_metacyclic_group(9, 3, 3), std::invalid_argument);
}

TEST_CASE("degenerate split parameters give cyclic groups") {
  auto g = split_metacyclic_group(27, 1, 1);
  CHECK(g.order() == 27);
  CHECK(g.is_cyclic());
  auto h = split_metacyclic_group(1, 9, 1);
  CHECK(h.order() == 9);
  CHECK(h.is_cyclic());
}

TEST_CASE("three-generator Cayley group: relations and non-metacyclic") {
  // p=3, m=3, n=1, lambda=4 (order 9 mod 27): order 81
  auto g = mp_cayley_group(3, 3, 1, 4);
  CHECK(g.order() == 81);
  check_group_laws(g);
  int x = g.generators()[0], y = g.generators()[1], z = g.generators()[2];
  CHECK(g.element_order(x) == 9);
  CHECK(g.element_order(y) == 3);
  CHECK(g.element_order(z) == 3);
  CHECK(g.conj(x, y) == g.pow(x, 4)); // y^-1 x y = x^lambda
  // z is central
  for (int w = 0; w < g.size(); ++w)
    CHECK(g.mul(z, w) == g.mul(w, z));
  CHECK(!g.is_abelian());
  CHECK(g.exponent() == 9);

  // not metacyclic: no cyclic normal subgroup with cyclic quotient
  CHECK(!is_metacyclic(g).answer);
  CHECK(!is_split_metacyclic(g).answer);

  // quotient by <z> is metacyclic of order 27
  auto q = quotient_group(g, g.cyclic_subgroup(z));
  CHECK(q.group.order() == 27);
  CHECK(!q.group.is_abelian());
  CHECK(is_metacyclic(q.group).answer);
  // projection is a homomorphism
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    int u = static_cast<int>(rng() % 81), v = static_cast<int>(rng() % 81);
    CHECK(q.projection[g.mul(u, v)] ==
          q.group.mul(q.projection[u], q.projection[v]));
  }

  CHECK_THROWS_AS(mp_cayley_group(3, 3, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(mp_cayley_group(3, 2, 1, 4), std::invalid_argument);
}

TEST_CASE("omega subgroup of the Cayley group") {
  auto g = mp_cayley_group(3, 3, 1, 4);
  // the group satisfies (ab)^3 = a^3 b^3, so the order <= 3 elements
  // already form a subgroup and Omega_1 is exactly that set
  CHECK(is_pk_abelian(g, 3, 1));
  std::vector<int> low;
  for (int w = 0; w < g.size(); ++w)
    if (g.element_order(w) <= 3)
      low.push_back(w);
  auto om = omega_s(g, 3, 1);
  CHECK(om == low);
  CHECK(om.size() == 27);
  CHECK(g.is_subgroup(om));
  CHECK(g.is_normal(om));
  CHECK(omega_s(g, 3, 2).size() == 81);

  CHECK_THROWS_AS(omega_s(cyclic_group(12), 3, 1), std::invalid_argument);
}

TEST_CASE("pk-abelian detection") {
  CHECK(is_pk_abelian(cyclic_group(81), 3, 1));
  CHECK(is_pk_abelian(split_metacyclic_group(9, 3, 4), 3, 1));
  // r=1, s=2: [a,b] = a^3 has order 9, class 3 -- not 3-abelian
  auto g = xu_zhang_group({3, 1, 2, 0, 0});
  CHECK(g.order() == 729);
  // brute-force oracle over every pair
  bool brute = true;
  for (int x = 0; x < g.size() && brute; ++x)
    for (int y = 0; y < g.size() && brute; ++y)
      brute = g.pow(g.mul(x, y), 3) == g.mul(g.pow(x, 3), g.pow(y, 3));
  CHECK(!brute);
  CHECK(is_pk_abelian(g, 3, 1) == brute);
  CHECK(is_pk_abelian(g, 3, 2));
}

TEST_CASE("regular representation and round trip through permutations") {
  auto g = split_metacyclic_group(9, 3, 4);
  auto rr = regular_representation(g);
  CHECK(rr.degree() == 27);
  CHECK(rr.order() == 27);
  auto profile = rr.transitivity_profile();
  CHECK(profile.transitive);
  CHECK(profile.regular);
  // R(g) acts as right multiplication
  for (const auto &perm : rr.generators()) {
    // find the generator it came from: image of identity
    int gen = perm[0];
    for (int w = 0; w < g.size(); ++w)
      CHECK(perm[w] == g.mul(w, gen));
  }

  auto back = group_from_permutations(rr);
  CHECK(back.order() == 27);
  auto iso = group_isomorphism(g, back);
  REQUIRE(iso.has_value());
  std::mt19937 rng(3);
  for (int i = 0; i < 300; ++i) {
    int u = static_cast<int>(rng() % 27), v = static_cast<int>(rng() % 27);
    CHECK((*iso)[g.mul(u, v)] == back.mul((*iso)[u], (*iso)[v]));
  }
}

TEST_CASE("quotient of a cyclic group and rejection of bad subgroups") {
  auto c12 = cyclic_group(12);
  auto q = quotient_group(c12, std::vector<int>{0, 4, 8});
  CHECK(q.group.order() == 4);
  CHECK(q.group.is_cyclic());

  auto s3 = split_metacyclic_group(3, 2, 2); // symmetric group of degree 3
  CHECK(s3.order() == 6);
  CHECK(!s3.is_abelian());
  // <t> has order 2 and is not normal
  std::vector<int> tsub = s3.cyclic_subgroup(s3.generators()[1]);
  CHECK(tsub.size() == 2);
  CHECK(!s3.is_normal(tsub));
  CHECK_THROWS_AS(quotient_group(s3, tsub), std::invalid_argument);
  CHECK_THROWS_AS(quotient_group(c12, std::vector<int>{0, 5}),
                  std::invalid_argument);
}

TEST_CASE("metacyclic witness search matches brute-force on small groups") {
  // brute-force oracle: try every cyclic subgroup as N
  auto brute_metacyclic = [](const FiniteGroup &g) {
    std::set<std::vector<int>> seen;
    for (int x = 0; x < g.size(); ++x) {
      auto n = g.cyclic_subgroup(x);
      if (!seen.insert(n).second || !g.is_normal(n))
        continue;
      auto q = quotient_group(g, n);
      if (q.group.is_cyclic())
        return true;
    }
    return false;
  };
  std::vector<FiniteGroup> groups = {
      cyclic_group(27),
      split_metacyclic_group(9, 3, 4),
      split_metacyclic_group(3, 2, 2),
      mp_cayley_group(3, 3, 1, 4),
      xu_zhang_group({3, 1, 1, 1, 1}),
  };
  for (const auto &g : groups) {
    CAPTURE(g.order());
    CHECK(is_metacyclic(g).answer == brute_metacyclic(g));
  }
}

TEST_CASE("cyclic-overgroup lemma sweep in split metacyclic p-groups") {
  // Every nontrivial g with <g> meeting <sigma> trivially lies in some
  // cyclic subgroup of the full complement order.
  for (auto [m, n, e] : {std::tuple<int, int, int>{9, 3, 4},
                         std::tuple<int, int, int>{27, 9, 4},
                         std::tuple<int, int, int>{27, 3, 10}}) {
    CAPTURE(m);
    CAPTURE(n);
    auto g = split_metacyclic_group(m, n, e);
    int sigma = g.generators()[0];
    auto sig = g.cyclic_subgroup(sigma);
    std::unordered_set<int> sigset(sig.begin(), sig.end());
    int tested = 0;
    for (int x = 1; x < g.size(); ++x) {
      std::uint64_t ox = g.element_order(x);
      int socle = g.pow(x, static_cast<long long>(ox / 3));
      if (sigset.count(socle))
        continue; // <x> meets <sigma>
      auto w = find_order_pn_overgroup(g, sigma, x);
      REQUIRE(w.has_value());
      CHECK(g.element_order(w->tau_prime) == g.order() / sig.size());
      auto cyc = g.cyclic_subgroup(w->tau_prime);
      CHECK(std::binary_search(cyc.begin(), cyc.end(), x));
      ++tested;
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("isomorphism search: positive and negative cases") {
  // a^9 = b^9 = 1, b^-1 a b = a^4 is exactly C9 : C9 with e = 4
  auto g1 = xu_zhang_group({3, 1, 1, 0, 0});
  auto g2 = split_metacyclic_group(9, 9, 4);
  CHECK(isomorphism_invariant_vector(g1) == isomorphism_invariant_vector(g2));
  auto iso = group_isomorphism(g1, g2);
  REQUIRE(iso.has_value());
  // bijective homomorphism
  std::vector<char> hit(81, 0);
  for (int x = 0; x < 81; ++x) {
    CHECK(!hit[(*iso)[x]]);
    hit[(*iso)[x]] = 1;
  }
  std::mt19937 rng(5);
  for (int i = 0; i < 500; ++i) {
    int u = static_cast<int>(rng() % 81), v = static_cast<int>(rng() % 81);
    CHECK((*iso)[g1.mul(u, v)] == g2.mul((*iso)[u], (*iso)[v]));
  }

  CHECK(!group_isomorphism(split_metacyclic_group(9, 3, 4), cyclic_group(27))
             .has_value());
  CHECK(!group_isomorphism(mp_cayley_group(3, 3, 1, 4), g1).has_value());
  CHECK(!group_isomorphism(g1, cyclic_group(81)).has_value());
}

TEST_CASE("construction caps and bad parameters") {
  CHECK_THROWS_AS(xu_zhang_group({3, 2, 2, 2, 2}), CapExceeded);
  CHECK_THROWS_AS(xu_zhang_group({3, 1, 1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(xu_zhang_group({4, 1, 0, 0, 0}), std::invalid_argument);
  CHECK(xu_zhang_group({3, 2, 1, 1, 1}, 100000).order() == 6561);
  CHECK_THROWS_AS(split_metacyclic_group(6561, 3, 1), CapExceeded);
}

TEST_CASE("structure report summary") {
  auto g = xu_zhang_group({3, 1, 1, 0, 0});
  auto r = structure_report(g);
  CHECK(r.order == 81);
  CHECK(r.exponent == 9);
  CHECK(r.derived_subgroup.size() == 3);
  CHECK(r.center.size() == 9);
  CHECK(r.frattini.size() == 9); // index p^2: two generators needed
  CHECK(!r.is_abelian);
  CHECK(!r.is_cyclic);
}
