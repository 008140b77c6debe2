#include "cgt/analysis.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

bool is_p_power(std::uint64_t n, int p) {
  while (n % p == 0)
    n /= p;
  return n == 1;
}

/// {p, k} with n = p^k, k >= 1; {0, 0} when n is not a prime power.
std::pair<int, int> prime_power(std::uint64_t n) {
  if (n < 2)
    return {0, 0};
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      int k = 0;
      while (n % p == 0) {
        n /= p;
        ++k;
      }
      return n == 1 ? std::pair<int, int>{static_cast<int>(p), k}
                    : std::pair<int, int>{0, 0};
    }
  return {static_cast<int>(n), 1};
}

std::uint64_t p_part_of(std::uint64_t n, int p) {
  std::uint64_t out = 1;
  while (n % p == 0) {
    out *= p;
    n /= p;
  }
  return out;
}

/// The p-element g^(m) where m is the p'-part of o(g).
Permutation p_part(const Permutation &g, int p) {
  std::uint64_t m = g.order();
  while (m % p == 0)
    m /= p;
  return g.pow(static_cast<long long>(m));
}

std::uint64_t modinv(std::uint64_t a, std::uint64_t m) {
  long long t = 0, nt = 1, r = static_cast<long long>(m),
            nr = static_cast<long long>(a % m);
  while (nr != 0) {
    long long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1)
    throw std::invalid_argument("modinv: not a unit");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<long long>(m) : t);
}

bool preserves_edges(const Graph &g, const Permutation &p) {
  if (p.degree() != g.vertex_count())
    return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v]))
      return false;
  return true;
}

// ---- flat element table for one enumerable p-group --------------------------

struct Table {
  int deg = 0;
  int p = 0;
  int count = 0;
  int identity = -1;
  std::vector<std::uint16_t> flat;  // count * deg images
  std::vector<std::uint32_t> ord;   // element orders
  std::vector<char> semi;           // uniform cycle lengths
  std::vector<int> inv;             // inverse ids
  std::vector<int> ppow;            // p-th power ids
  std::vector<int> gen_ids;         // ids of the defining generators
  std::vector<int> semis;           // non-identity uniform-cycle ids, ascending
  std::uint32_t max_order = 1;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;

  const std::uint16_t *img(int id) const {
    return flat.data() + static_cast<std::size_t>(id) * deg;
  }

  static std::uint64_t hash_img(const std::uint16_t *a, int deg) {
    std::uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < deg; ++i) {
      h ^= a[i];
      h *= 1099511628211ull;
    }
    return h;
  }

  int find(const std::uint16_t *a) const {
    auto it = buckets.find(hash_img(a, deg));
    if (it == buckets.end())
      return -1;
    for (int id : it->second)
      if (std::memcmp(img(id), a, sizeof(std::uint16_t) * deg) == 0)
        return id;
    return -1;
  }

  void mul_into(int a, int b, std::uint16_t *out) const {
    const std::uint16_t *ia = img(a), *ib = img(b);
    for (int i = 0; i < deg; ++i)
      out[i] = ib[ia[i]];
  }

  int mul(int a, int b) const {
    std::vector<std::uint16_t> buf(deg);
    mul_into(a, b, buf.data());
    return find(buf.data());
  }

  int conj(int x, int y) const { return mul(mul(inv[y], x), y); }

  Permutation perm(int id) const {
    std::vector<int> im(deg);
    for (int i = 0; i < deg; ++i)
      im[i] = img(id)[i];
    return Permutation(im);
  }

  bool orbit_covers_all(const std::vector<int> &gen_set) const {
    std::vector<char> seen(deg, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    int cnt = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int gid : gen_set) {
        int t = img(gid)[queue[i]];
        if (!seen[t]) {
          seen[t] = 1;
          ++cnt;
          queue.push_back(t);
        }
      }
    return cnt == deg;
  }
};

Table build_table(const PermutationGroup &s, int p,
                  std::uint64_t cap = kDefaultElementCap) {
  if (s.order() > cap)
    throw CapExceeded(s.order(), cap);
  Table t;
  t.deg = s.degree();
  t.p = p;
  t.count = static_cast<int>(s.order());
  t.flat.reserve(static_cast<std::size_t>(t.count) * t.deg);
  t.ord.reserve(t.count);
  t.semi.reserve(t.count);
  s.for_each_element([&](const Permutation &g) {
    for (int i = 0; i < t.deg; ++i)
      t.flat.push_back(static_cast<std::uint16_t>(g[i]));
    t.ord.push_back(static_cast<std::uint32_t>(g.order()));
    t.semi.push_back(g.has_uniform_cycles() ? 1 : 0);
    return true;
  });
  t.buckets.reserve(t.count * 2);
  for (int id = 0; id < t.count; ++id)
    t.buckets[Table::hash_img(t.img(id), t.deg)].push_back(id);
  {
    std::vector<std::uint16_t> e(t.deg);
    for (int i = 0; i < t.deg; ++i)
      e[i] = static_cast<std::uint16_t>(i);
    t.identity = t.find(e.data());
  }
  t.inv.resize(t.count);
  t.ppow.resize(t.count);
  std::vector<std::uint16_t> buf(t.deg), buf2(t.deg);
  for (int id = 0; id < t.count; ++id) {
    const std::uint16_t *a = t.img(id);
    for (int i = 0; i < t.deg; ++i)
      buf[a[i]] = static_cast<std::uint16_t>(i);
    t.inv[id] = t.find(buf.data());
    // p-th power by repeated composition
    std::copy(a, a + t.deg, buf.begin());
    for (int e = 1; e < p; ++e) {
      for (int i = 0; i < t.deg; ++i)
        buf2[i] = a[buf[i]];
      buf.swap(buf2);
    }
    t.ppow[id] = t.find(buf.data());
    t.max_order = std::max(t.max_order, t.ord[id]);
  }
  for (int id = 0; id < t.count; ++id)
    if (t.semi[id] && id != t.identity)
      t.semis.push_back(id);
  for (const auto &g : s.generators()) {
    std::vector<std::uint16_t> im(t.deg);
    for (int i = 0; i < t.deg; ++i)
      im[i] = static_cast<std::uint16_t>(g[i]);
    t.gen_ids.push_back(t.find(im.data()));
  }
  return t;
}

/// Cyclic semiregular subgroups up to conjugacy in the table's group:
/// (sorted element-id set, smallest discovered generator) per class, in
/// the canonical order of the smallest set in each class.
std::vector<std::pair<std::vector<int>, int>>
cyclic_semiregular_classes(const Table &t) {
  std::map<std::vector<int>, int> cyc;
  for (int x : t.semis) {
    std::vector<int> c{t.identity};
    int cur = x;
    while (cur != t.identity) {
      c.push_back(cur);
      cur = t.mul(cur, x);
    }
    std::sort(c.begin(), c.end());
    cyc.emplace(std::move(c), x);
  }
  std::set<std::vector<int>> unseen;
  for (const auto &[c, x] : cyc)
    unseen.insert(c);
  std::vector<std::pair<std::vector<int>, int>> reps;
  while (!unseen.empty()) {
    auto c0 = *unseen.begin();
    reps.emplace_back(c0, cyc.at(c0));
    std::vector<std::vector<int>> queue{c0};
    std::set<std::vector<int>> cls{c0};
    unseen.erase(c0);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int g : t.gen_ids) {
        std::vector<int> im;
        im.reserve(queue[i].size());
        for (int e : queue[i])
          im.push_back(t.conj(e, g));
        std::sort(im.begin(), im.end());
        if (cls.insert(im).second) {
          unseen.erase(im);
          queue.push_back(im);
        }
      }
  }
  return reps;
}

void charge(std::uint64_t &nodes, std::uint64_t max_nodes, const char *what) {
  if (++nodes > max_nodes)
    throw SearchBudgetExceeded(std::string(what) + ": node budget of " +
                               std::to_string(max_nodes) + " exhausted");
}

// ---- regular subgroup searches inside one Sylow table -----------------------

RegularSearchResult table_regular_cyclic(const Table &t, std::uint64_t max_nodes) {
  RegularSearchResult res;
  for (int x : t.semis) {
    charge(res.stats.nodes, max_nodes, "regular cyclic search");
    if (t.ord[x] == static_cast<std::uint32_t>(t.deg)) {
      res.witness = PermutationGroup({t.perm(x)});
      res.stats.note = "semiregular full-cycle element";
      return res;
    }
  }
  res.stats.exhausted = true;
  res.stats.note = "no semiregular element of full order";
  return res;
}

/// DFS over chains 1 = H_0 < H_1 < ... with each step of index p and
/// H_i normal in H_(i+1); every subgroup of a p-group admits such a
/// chain, so reaching size deg visits some generating chain of every
/// regular subgroup.
RegularSearchResult table_regular_any(const Table &t, std::uint64_t max_nodes) {
  RegularSearchResult res;
  std::unordered_set<std::uint64_t> memo;
  auto hash_set = [](const std::vector<int> &v) {
    std::uint64_t h = 0;
    for (int x : v)
      h = h * 1000003ull + static_cast<std::uint64_t>(x);
    return h;
  };
  std::vector<int> witness_gens;
  std::function<bool(const std::vector<int> &, std::vector<int> &)> dfs =
      [&](const std::vector<int> &helems, std::vector<int> &hgens) -> bool {
    charge(res.stats.nodes, max_nodes, "regular subgroup search");
    if (static_cast<int>(helems.size()) == t.deg)
      return t.orbit_covers_all(hgens);
    std::unordered_set<int> hset(helems.begin(), helems.end());
    for (int y : t.semis) {
      if (hset.count(y) || !hset.count(t.ppow[y]))
        continue;
      bool normok = true;
      for (int g : hgens)
        if (!hset.count(t.conj(g, y))) {
          normok = false;
          break;
        }
      if (!normok)
        continue;
      // H' = H u Hy u ... u Hy^(p-1); every new element must again be
      // semiregular
      std::vector<int> h2 = helems;
      bool ok = true;
      int ypow = y;
      for (int c = 1; c < t.p && ok; ++c) {
        for (int h : helems) {
          int z = t.mul(h, ypow);
          if (!t.semi[z]) {
            ok = false;
            break;
          }
          h2.push_back(z);
        }
        ypow = t.mul(ypow, y);
      }
      if (!ok)
        continue;
      std::sort(h2.begin(), h2.end());
      if (!memo.insert(hash_set(h2)).second)
        continue;
      hgens.push_back(y);
      if (dfs(h2, hgens)) {
        witness_gens = hgens;
        return true;
      }
      hgens.pop_back();
    }
    return false;
  };
  std::vector<int> h0{t.identity}, g0;
  if (dfs(h0, g0)) {
    std::vector<Permutation> gens;
    for (int g : witness_gens)
      gens.push_back(t.perm(g));
    res.witness = PermutationGroup(gens);
    res.stats.note = "semiregular chain of length " +
                     std::to_string(witness_gens.size());
  } else {
    res.stats.exhausted = true;
    res.stats.note = "semiregular chain space exhausted";
  }
  return res;
}

/// Pair sweep (C, y): C a cyclic semiregular subgroup taken up to
/// conjugacy (sound: conjugation by the ambient p-group carries any
/// regular metacyclic subgroup and its cyclic core to one over a class
/// representative, preserving regularity), y a semiregular element
/// normalizing C with |C| * o(yC) equal to the degree.
RegularSearchResult table_regular_metacyclic(const Table &t,
                                             std::uint64_t max_nodes) {
  RegularSearchResult res;
  auto reps = cyclic_semiregular_classes(t);
  const std::uint64_t n = static_cast<std::uint64_t>(t.deg);
  for (const auto &[c, xgen] : reps) {
    const std::uint64_t csz = c.size();
    if (csz == n) {
      // the cyclic core alone is regular
      charge(res.stats.nodes, max_nodes, "regular metacyclic search");
      res.witness = PermutationGroup({t.perm(xgen)});
      res.stats.note = "regular cyclic core";
      return res;
    }
    if (n % csz || n / csz > t.max_order)
      continue;
    std::unordered_set<int> cset(c.begin(), c.end());
    for (int y : t.semis) {
      charge(res.stats.nodes, max_nodes, "regular metacyclic search");
      if (cset.count(y))
        continue;
      std::uint64_t oyc = 1;
      for (int z = y; !cset.count(z); z = t.ppow[z]) {
        oyc *= t.p;
        if (oyc > n)
          break;
      }
      if (csz * oyc != n)
        continue;
      if (!cset.count(t.conj(xgen, y)))
        continue;
      if (!t.orbit_covers_all({xgen, y}))
        continue;
      res.witness = PermutationGroup({t.perm(xgen), t.perm(y)});
      res.stats.note = "core order " + std::to_string(csz);
      return res;
    }
  }
  res.stats.exhausted = true;
  res.stats.note = "all (core, extension) pairs exhausted";
  return res;
}

// ---- transitive metacyclic sweep -------------------------------------------

/// Smallest-order-first sweep for a transitive metacyclic subgroup
/// M = <C, y> of the table's p-group. The cyclic core of any transitive
/// metacyclic subgroup is semiregular (a cyclic normal subgroup of a
/// transitive faithful group has identical, hence trivial, point
/// stabilizers), so sweeping semiregular cores up to conjugacy is
/// complete.
TransitiveMetacyclicOutcome
table_transitive_metacyclic(const Table &t, bool require_split,
                            std::uint64_t max_nodes) {
  TransitiveMetacyclicOutcome out;
  auto reps = cyclic_semiregular_classes(t);
  const std::uint64_t n = static_cast<std::uint64_t>(t.deg);
  auto finish = [&](const std::vector<Permutation> &gens)
      -> std::optional<TransitiveMetacyclicWitness> {
    PermutationGroup w(gens);
    auto fg = group_from_permutations(w);
    auto sw = is_split_metacyclic(fg);
    if (require_split && !sw.answer)
      return std::nullopt;
    TransitiveMetacyclicWitness wit{w, sw.answer, std::nullopt};
    if (sw.answer) {
      auto elems = w.enumerate_elements();
      const std::uint64_t nsz = sw.normal_subgroup.size();
      int sid = -1;
      for (int id : sw.normal_subgroup)
        if (fg.element_order(id) == nsz) {
          sid = id;
          break;
        }
      if (sid < 0)
        throw std::logic_error("split witness without a core generator");
      wit.sigma_tau = {elems[sid], elems[*sw.complement_generator]};
    }
    return wit;
  };
  // scan one order level completely so a split witness of minimal order
  // is preferred over a non-split one of the same order
  std::optional<TransitiveMetacyclicWitness> fallback;
  std::string fallback_note;
  for (std::uint64_t target = n; target <= static_cast<std::uint64_t>(t.count);
       target *= t.p) {
    for (const auto &[c, xgen] : reps) {
      const std::uint64_t csz = c.size();
      if (csz == target) {
        charge(out.stats.nodes, max_nodes, "transitive metacyclic search");
        if (csz == n && t.orbit_covers_all({xgen})) {
          if (auto wit = finish({t.perm(xgen)})) {
            out.witness = std::move(wit);
            out.stats.note = "order " + std::to_string(target) + ", cyclic";
            return out;
          }
        }
        continue;
      }
      if (target % csz || target / csz > t.max_order)
        continue;
      const std::uint64_t needed = target / csz;
      std::unordered_set<int> cset(c.begin(), c.end());
      for (int y = 0; y < t.count; ++y) {
        charge(out.stats.nodes, max_nodes, "transitive metacyclic search");
        if (cset.count(y))
          continue;
        if (!cset.count(t.conj(xgen, y)))
          continue;
        std::uint64_t oyc = 1;
        for (int z = y; !cset.count(z); z = t.ppow[z]) {
          oyc *= t.p;
          if (oyc > target)
            break;
        }
        if (oyc != needed)
          continue;
        if (!t.orbit_covers_all({xgen, y}))
          continue;
        if (auto wit = finish({t.perm(xgen), t.perm(y)})) {
          std::string note = "order " + std::to_string(target) +
                             ", core order " + std::to_string(csz);
          if (wit->split) {
            out.witness = std::move(wit);
            out.stats.note = note;
            return out;
          }
          if (!fallback) {
            fallback = std::move(wit);
            fallback_note = note;
          }
        }
      }
    }
    if (fallback) {
      out.witness = std::move(fallback);
      out.stats.note = fallback_note;
      return out;
    }
  }
  out.stats.exhausted = true;
  out.stats.note = "all (core, extension) pairs exhausted";
  return out;
}

// ---- definitional metacirculant pair sweep ---------------------------------

/// Cells (orbits of <sigma>) from the image array of sigma.
std::vector<int> cells_of(const std::uint16_t *img, int deg, int &ncells) {
  std::vector<int> cell(deg, -1);
  ncells = 0;
  for (int v = 0; v < deg; ++v) {
    if (cell[v] >= 0)
      continue;
    for (int w = v; cell[w] < 0; w = img[w])
      cell[w] = ncells;
    ++ncells;
  }
  return cell;
}

bool single_cycle_on_cells(const std::vector<int> &cell, int ncells,
                           const std::uint16_t *img_tau, int deg) {
  std::vector<int> rep(ncells, -1);
  for (int v = deg - 1; v >= 0; --v)
    rep[cell[v]] = v;
  std::vector<char> vis(ncells, 0);
  int cur = 0, steps = 0;
  do {
    if (vis[cur])
      return false;
    vis[cur] = 1;
    cur = cell[img_tau[rep[cur]]];
    ++steps;
  } while (cur != 0);
  return steps == ncells;
}

bool has_cycle_of_length(const std::uint16_t *img, int deg, int len) {
  std::vector<char> vis(deg, 0);
  for (int v = 0; v < deg; ++v) {
    if (vis[v])
      continue;
    int l = 0;
    for (int w = v; !vis[w]; w = img[w]) {
      vis[w] = 1;
      ++l;
    }
    if (l == len)
      return true;
  }
  return false;
}

DefinitionalSearchOutcome table_pair_search(const Table &t,
                                            std::uint64_t max_nodes) {
  DefinitionalSearchOutcome out;
  auto reps = cyclic_semiregular_classes(t);
  for (const auto &[c, xgen] : reps) {
    int ncells = 0;
    auto cell = cells_of(t.img(xgen), t.deg, ncells);
    if (ncells == 1) {
      // sigma alone is transitive; the identity closes the pair
      out.pair = {t.perm(xgen), Permutation(t.deg)};
      out.stats.note = "circulant core";
      return out;
    }
    std::unordered_set<int> cset(c.begin(), c.end());
    for (int y = 0; y < t.count; ++y) {
      charge(out.stats.nodes, max_nodes, "metacirculant pair search");
      if (!cset.count(t.conj(xgen, y)))
        continue;
      if (!single_cycle_on_cells(cell, ncells, t.img(y), t.deg))
        continue;
      if (!has_cycle_of_length(t.img(y), t.deg, ncells))
        continue;
      out.pair = {t.perm(xgen), t.perm(y)};
      out.stats.note = std::to_string(ncells) + " cells";
      return out;
    }
  }
  out.stats.exhausted = true;
  out.stats.note = "all (core, shunt) pairs exhausted";
  return out;
}

// ---- brute route for enumerable ambient groups -----------------------------

struct BruteCtx {
  int deg = 0;
  std::vector<Permutation> elems; // ascending image arrays, identity first
  std::map<Permutation, int> index;
  std::vector<std::uint64_t> ord;
  std::vector<char> semi;

  int mul(int a, int b) const { return index.at(elems[a] * elems[b]); }
};

BruteCtx build_brute(const PermutationGroup &a, std::uint64_t cap) {
  BruteCtx c;
  c.deg = a.degree();
  c.elems = a.enumerate_elements(cap);
  for (int i = 0; i < static_cast<int>(c.elems.size()); ++i) {
    c.index.emplace(c.elems[i], i);
    c.ord.push_back(c.elems[i].order());
    c.semi.push_back(c.elems[i].has_uniform_cycles() ? 1 : 0);
  }
  return c;
}

bool brute_transitive(const BruteCtx &c, const std::vector<int> &gens) {
  std::vector<char> seen(c.deg, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  int cnt = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int g : gens) {
      int t = c.elems[g][queue[i]];
      if (!seen[t]) {
        seen[t] = 1;
        ++cnt;
        queue.push_back(t);
      }
    }
  return cnt == c.deg;
}

/// Abstract group on the (sorted, identity-first) element ids of a
/// subgroup of the brute context.
FiniteGroup brute_subgroup_group(const BruteCtx &c, const std::vector<int> &ids) {
  std::unordered_map<int, int> pos;
  for (int i = 0; i < static_cast<int>(ids.size()); ++i)
    pos.emplace(ids[i], i);
  std::vector<int> gens;
  for (int i = 1; i < static_cast<int>(ids.size()); ++i)
    gens.push_back(i);
  auto idsc = ids;
  return FiniteGroup(
      ids.size(),
      [c = &c, idsc, pos](int x, int y) {
        return pos.at(c->mul(idsc[x], idsc[y]));
      },
      gens);
}

RegularSearchResult brute_regular(const BruteCtx &c, RegularPredicate pred,
                                  std::uint64_t max_nodes) {
  RegularSearchResult res;
  const int n = c.deg;
  if (pred == RegularPredicate::Cyclic) {
    for (int x = 1; x < static_cast<int>(c.elems.size()); ++x) {
      charge(res.stats.nodes, max_nodes, "regular cyclic search");
      if (c.semi[x] && c.ord[x] == static_cast<std::uint64_t>(n)) {
        res.witness = PermutationGroup({c.elems[x]});
        res.stats.note = "semiregular full-cycle element";
        return res;
      }
    }
    res.stats.exhausted = true;
    res.stats.note = "no semiregular element of full order";
    return res;
  }
  std::vector<int> pool;
  for (int x = 1; x < static_cast<int>(c.elems.size()); ++x)
    if (c.semi[x] && n % c.ord[x] == 0)
      pool.push_back(x);
  std::unordered_set<std::uint64_t> memo;
  auto hash_set = [](const std::vector<int> &v) {
    std::uint64_t h = 0;
    for (int x : v)
      h = h * 1000003ull + static_cast<std::uint64_t>(x);
    return h;
  };
  std::function<bool(const std::vector<int> &, std::vector<int> &)> dfs =
      [&](const std::vector<int> &helems, std::vector<int> &hgens) -> bool {
    charge(res.stats.nodes, max_nodes, "regular subgroup search");
    if (static_cast<int>(helems.size()) == n) {
      if (!brute_transitive(c, hgens))
        return false;
      if (pred == RegularPredicate::Metacyclic &&
          !is_metacyclic(brute_subgroup_group(c, helems)).answer)
        return false;
      return true;
    }
    std::unordered_set<int> hset(helems.begin(), helems.end());
    for (int y : pool) {
      if (hset.count(y))
        continue;
      // closure of <H, y>, pruned on size and semiregularity
      std::vector<int> cl = helems;
      std::unordered_set<int> clset(hset);
      cl.push_back(y);
      clset.insert(y);
      // plain BFS closure under multiplication
      bool ok = true;
      for (std::size_t i = 0; ok && i < cl.size(); ++i)
        for (std::size_t j = 0; ok && j < cl.size(); ++j) {
          int z = c.mul(cl[i], cl[j]);
          if (clset.insert(z).second) {
            if (!c.semi[z] || static_cast<int>(cl.size()) >= n) {
              ok = false;
              break;
            }
            cl.push_back(z);
          }
        }
      if (!ok || n % cl.size())
        continue;
      std::sort(cl.begin(), cl.end());
      if (!memo.insert(hash_set(cl)).second)
        continue;
      hgens.push_back(y);
      if (dfs(cl, hgens))
        return true;
      hgens.pop_back();
    }
    return false;
  };
  std::vector<int> h0{0}, g0;
  if (dfs(h0, g0)) {
    std::vector<Permutation> gens;
    for (int g : g0)
      gens.push_back(c.elems[g]);
    res.witness = PermutationGroup(gens);
    res.stats.note = "generator chain of length " + std::to_string(g0.size());
  } else {
    res.stats.exhausted = true;
    res.stats.note = "semiregular closure space exhausted";
  }
  return res;
}

/// Brute (C, y) sweep over all elements for a transitive metacyclic
/// subgroup; complete because every such subgroup arises as
/// <cyclic core, coset representative>.
TransitiveMetacyclicOutcome
brute_transitive_metacyclic(const BruteCtx &c, bool require_split,
                            std::uint64_t max_nodes) {
  TransitiveMetacyclicOutcome out;
  const int total = static_cast<int>(c.elems.size());
  std::optional<TransitiveMetacyclicWitness> best;
  std::uint64_t best_order = 0;
  for (int x = 1; x < total; ++x) {
    std::vector<int> core{0};
    for (int z = x; z != 0; z = c.mul(z, x))
      core.push_back(z);
    std::sort(core.begin(), core.end());
    std::unordered_set<int> cset(core.begin(), core.end());
    // C alone
    charge(out.stats.nodes, max_nodes, "transitive metacyclic search");
    if (brute_transitive(c, {x})) {
      TransitiveMetacyclicWitness wit{PermutationGroup({c.elems[x]}), true,
                                      std::pair{c.elems[x],
                                                Permutation(c.deg)}};
      if (!best || core.size() < best_order) {
        best = wit;
        best_order = core.size();
      }
      continue;
    }
    for (int y = 1; y < total; ++y) {
      charge(out.stats.nodes, max_nodes, "transitive metacyclic search");
      if (cset.count(y))
        continue;
      if (!cset.count(c.index.at(conjugate(c.elems[x], c.elems[y]))))
        continue;
      std::uint64_t oyc = 1;
      for (int z = y; !cset.count(z); z = c.mul(z, y))
        ++oyc;
      std::uint64_t order = core.size() * oyc;
      if (best && order >= best_order)
        continue;
      if (!brute_transitive(c, {x, y}))
        continue;
      // collect M = C<y> and decide the split question abstractly
      std::vector<int> melems;
      int ypow = 0;
      for (std::uint64_t j = 0; j < oyc; ++j) {
        for (int e : core)
          melems.push_back(c.mul(e, ypow));
        ypow = c.mul(ypow, y);
      }
      std::sort(melems.begin(), melems.end());
      auto fg = brute_subgroup_group(c, melems);
      auto sw = is_split_metacyclic(fg);
      if (require_split && !sw.answer)
        continue;
      TransitiveMetacyclicWitness wit{
          PermutationGroup({c.elems[x], c.elems[y]}), sw.answer, std::nullopt};
      if (sw.answer) {
        const std::uint64_t nsz = sw.normal_subgroup.size();
        int sid = -1;
        for (int id : sw.normal_subgroup)
          if (fg.element_order(id) == nsz) {
            sid = id;
            break;
          }
        wit.sigma_tau = {c.elems[melems[sid]],
                         c.elems[melems[*sw.complement_generator]]};
      }
      best = wit;
      best_order = order;
    }
  }
  if (best) {
    out.witness = std::move(best);
    out.stats.note = "order " + std::to_string(best_order);
  } else {
    out.stats.exhausted = true;
    out.stats.note = "all (core, extension) pairs exhausted";
  }
  return out;
}

DefinitionalSearchOutcome brute_pair_search(const Graph &g, const BruteCtx &c,
                                            std::uint64_t max_nodes) {
  DefinitionalSearchOutcome out;
  const int total = static_cast<int>(c.elems.size());
  for (int x = 0; x < total; ++x) {
    if (!c.semi[x])
      continue;
    for (int y = 0; y < total; ++y) {
      charge(out.stats.nodes, max_nodes, "metacirculant pair search");
      if (is_metacirculant_definitional(g, c.elems[x], c.elems[y])) {
        out.pair = {c.elems[x], c.elems[y]};
        return out;
      }
    }
  }
  out.stats.exhausted = true;
  out.stats.note = "all automorphism pairs exhausted";
  return out;
}

} // namespace

// ---- public API -------------------------------------------------------------

PermutationGroup sylow_p_subgroup(const PermutationGroup &a, int p,
                                  const std::vector<Permutation> &seed,
                                  std::uint64_t enum_budget) {
  if (!is_prime(p))
    throw std::invalid_argument("sylow_p_subgroup: p must be prime");
  const std::uint64_t target = p_part_of(a.order(), p);
  if (target == 1)
    return PermutationGroup(a.degree());
  std::vector<Permutation> gens;
  for (const auto &s : seed) {
    auto x = p_part(s, p);
    if (x.is_identity())
      continue;
    if (!a.contains(x))
      throw std::invalid_argument("sylow_p_subgroup: seed outside the group");
    gens.push_back(x);
  }
  auto group_of = [&](const std::vector<Permutation> &gs) {
    return gs.empty() ? PermutationGroup(a.degree()) : PermutationGroup(gs);
  };
  PermutationGroup cur = group_of(gens);
  if (!is_p_power(cur.order(), p))
    throw std::invalid_argument("sylow_p_subgroup: seed is not a p-group");

  // greedy ascent over p-parts of generators and their conjugates
  std::vector<Permutation> pool;
  for (const auto &g : a.generators()) {
    auto x = p_part(g, p);
    if (!x.is_identity())
      pool.push_back(x);
  }
  const std::size_t base = pool.size();
  for (std::size_t i = 0; i < base; ++i)
    for (std::size_t j = 0; j < base; ++j)
      if (i != j)
        pool.push_back(conjugate(pool[i], pool[j]));
  bool progress = true;
  while (progress && cur.order() < target) {
    progress = false;
    for (const auto &x : pool) {
      if (cur.contains(x))
        continue;
      auto g2 = gens;
      g2.push_back(x);
      PermutationGroup h(g2);
      if (h.order() > cur.order() && is_p_power(h.order(), p)) {
        gens = std::move(g2);
        cur = std::move(h);
        progress = true;
        break;
      }
    }
  }
  if (cur.order() == target)
    return cur;

  // exact normalizer ladder: below the Sylow order, the normalizer of
  // the current p-subgroup always contains a p-element outside it
  if (a.order() <= enum_budget) {
    while (cur.order() < target) {
      auto norm = normalizer_in(a, cur, enum_budget);
      bool grew = false;
      norm.for_each_element([&](const Permutation &g) {
        auto y = p_part(g, p);
        if (y.is_identity() || cur.contains(y))
          return true;
        auto g2 = gens;
        g2.push_back(y);
        PermutationGroup h(g2);
        if (h.order() > cur.order() && is_p_power(h.order(), p)) {
          gens = std::move(g2);
          cur = std::move(h);
          grew = true;
          return false;
        }
        return true;
      });
      if (!grew)
        throw std::logic_error("sylow_p_subgroup: normalizer ladder stalled");
    }
    return cur;
  }
  throw SearchBudgetExceeded("sylow_p_subgroup: ascent reached order " +
                             std::to_string(cur.order()) + " of target " +
                             std::to_string(target) +
                             " and the ambient group is not enumerable");
}

RegularSearchResult regular_subgroup_search(const PermutationGroup &a,
                                            RegularPredicate predicate,
                                            std::uint64_t max_nodes) {
  RegularSearchResult res;
  if (!a.transitivity_profile().transitive) {
    res.stats.exhausted = true;
    res.stats.note = "ambient group is intransitive";
    return res;
  }
  const int p = prime_power(a.degree()).first;
  if (p != 0) {
    auto s = sylow_p_subgroup(a, p);
    auto t = build_table(s, p);
    if (predicate == RegularPredicate::Any)
      return table_regular_any(t, max_nodes);
    if (predicate == RegularPredicate::Metacyclic)
      return table_regular_metacyclic(t, max_nodes);
    return table_regular_cyclic(t, max_nodes);
  }
  auto c = build_brute(a, kDefaultElementCap);
  return brute_regular(c, predicate, max_nodes);
}

TransitiveMetacyclicOutcome
transitive_metacyclic_witness(const PermutationGroup &a, int p,
                              bool require_split, std::uint64_t max_nodes) {
  TransitiveMetacyclicOutcome out;
  if (!a.transitivity_profile().transitive) {
    out.stats.exhausted = true;
    out.stats.note = "ambient group is intransitive";
    return out;
  }
  if (is_p_power(a.degree(), p)) {
    auto s = sylow_p_subgroup(a, p);
    if (!s.transitivity_profile().transitive) {
      out.stats.exhausted = true;
      out.stats.note = "Sylow subgroup is intransitive";
      return out;
    }
    auto t = build_table(s, p);
    return table_transitive_metacyclic(t, require_split, max_nodes);
  }
  auto c = build_brute(a, kDefaultElementCap);
  return brute_transitive_metacyclic(c, require_split, max_nodes);
}

bool is_metacirculant_definitional(const Graph &g, const Permutation &sigma,
                                   const Permutation &tau) {
  const int n = g.vertex_count();
  if (sigma.degree() != n || tau.degree() != n)
    return false;
  if (!preserves_edges(g, sigma) || !preserves_edges(g, tau))
    return false;
  if (!sigma.has_uniform_cycles())
    return false; // <sigma> semiregular iff sigma's cycles are uniform
  std::vector<std::uint16_t> simg(n), timg(n);
  for (int i = 0; i < n; ++i) {
    simg[i] = static_cast<std::uint16_t>(sigma[i]);
    timg[i] = static_cast<std::uint16_t>(tau[i]);
  }
  int m = 0;
  auto cell = cells_of(simg.data(), n, m);
  // tau normalizes <sigma>
  auto conj = conjugate(sigma, tau);
  bool power = false;
  Permutation pw(n);
  for (std::uint64_t e = 0; e < sigma.order(); ++e) {
    if (pw == conj) {
      power = true;
      break;
    }
    pw = pw * sigma;
  }
  if (!power)
    return false;
  if (!single_cycle_on_cells(cell, m, timg.data(), n))
    return false;
  return has_cycle_of_length(timg.data(), n, m);
}

DefinitionalSearchOutcome
metacirculant_pair_search(const Graph &g, const PermutationGroup &sylow,
                          std::uint64_t max_nodes) {
  DefinitionalSearchOutcome out;
  if (sylow.degree() != g.vertex_count())
    throw std::invalid_argument("metacirculant_pair_search: degree mismatch");
  if (!sylow.transitivity_profile().transitive) {
    out.stats.exhausted = true;
    out.stats.note = "given subgroup is intransitive";
    return out;
  }
  const int p = prime_power(sylow.order()).first;
  if (p == 0)
    throw std::invalid_argument(
        "metacirculant_pair_search: subgroup must be a p-group");
  auto t = build_table(sylow, p);
  auto res = table_pair_search(t, max_nodes);
  if (res.pair &&
      !is_metacirculant_definitional(g, res.pair->first, res.pair->second))
    throw std::logic_error("metacirculant_pair_search: uncertified pair");
  return res;
}

std::optional<std::pair<Permutation, Permutation>>
definitional_pair_from_split(const Graph &g, const PermutationGroup &m) {
  auto fg = group_from_permutations(m);
  auto elems = m.enumerate_elements();
  auto sw = is_split_metacyclic(fg);
  if (!sw.answer)
    return std::nullopt;
  const std::uint64_t nsz = sw.normal_subgroup.size();
  std::vector<int> stab;
  for (int id = 0; id < static_cast<int>(elems.size()); ++id)
    if (elems[id][0] == 0)
      stab.push_back(id);
  for (int sid : sw.normal_subgroup) {
    if (fg.element_order(sid) != nsz)
      continue;
    const auto &sigma = elems[sid];
    if (!sigma.has_uniform_cycles())
      continue;
    if (stab.size() == 1) {
      // regular: the complement generator itself closes the pair
      const auto &tau = elems[*sw.complement_generator];
      if (is_metacirculant_definitional(g, sigma, tau))
        return std::pair{sigma, tau};
      continue;
    }
    // lift a point stabilizer generator to a cyclic overgroup of full
    // complement order; its m-th power then fixes the base point, which
    // forces a cycle of exact length m
    for (int gid : stab) {
      if (gid == 0 || fg.element_order(gid) != stab.size())
        continue;
      auto ow = find_order_pn_overgroup(fg, sid, gid);
      if (!ow)
        continue;
      const auto &tau = elems[ow->tau_prime];
      if (is_metacirculant_definitional(g, sigma, tau))
        return std::pair{sigma, tau};
    }
  }
  return std::nullopt;
}

std::string ClassificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["order"] = order;
  j["prime"] = prime;
  auto put = [&](const char *key, const Flag &f) {
    nlohmann::ordered_json o;
    o["state"] = f.state == Flag::Yes  ? "yes"
                 : f.state == Flag::No ? "no"
                                       : "inconclusive";
    o["detail"] = f.detail;
    j["flags"][key] = o;
  };
  put("vertex_transitive", vertex_transitive);
  put("cayley", cayley);
  put("weak_metacirculant", weak_metacirculant);
  put("split_weak_metacirculant", split_weak_metacirculant);
  put("metacirculant", metacirculant);
  put("weak_metacirculant_cayley", weak_metacirculant_cayley);
  auto perms = [&](const std::vector<Permutation> &v) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &p : v)
      arr.push_back(p.to_string());
    return arr;
  };
  j["witnesses"]["cayley"] = perms(cayley_witness);
  j["witnesses"]["metacyclic"] = perms(metacyclic_witness);
  if (sigma_tau) {
    j["witnesses"]["sigma"] = sigma_tau->first.to_string();
    j["witnesses"]["tau"] = sigma_tau->second.to_string();
  } else {
    j["witnesses"]["sigma"] = nullptr;
    j["witnesses"]["tau"] = nullptr;
  }
  return j.dump(2);
}

ClassificationReport classify(const Graph &g, int p, int aut_bound,
                              std::uint64_t max_nodes) {
  if (!is_prime(p))
    throw std::invalid_argument("classify: p must be prime");
  ClassificationReport rep;
  rep.order = g.vertex_count();
  rep.prime = p;
  auto a = automorphism_group(g, aut_bound, max_nodes);
  const bool vt = a.transitivity_profile().transitive;
  rep.vertex_transitive.state = vt ? Flag::Yes : Flag::No;
  rep.vertex_transitive.detail =
      "automorphism group of order " + std::to_string(a.order());
  if (!vt) {
    const char *why = "not vertex-transitive";
    for (Flag *f : {&rep.cayley, &rep.weak_metacirculant,
                    &rep.split_weak_metacirculant, &rep.metacirculant,
                    &rep.weak_metacirculant_cayley})
      f->detail = why;
    return rep;
  }
  auto guard = [&](Flag &flag, const std::function<void()> &body) {
    try {
      body();
    } catch (const SearchBudgetExceeded &e) {
      flag.state = Flag::Inconclusive;
      flag.detail = e.what();
    }
  };
  const bool ppower = is_p_power(rep.order, p);
  if (ppower && p % 2 == 0)
    throw std::invalid_argument("classify: p must be odd for p-power orders");

  std::optional<Table> table;
  std::optional<BruteCtx> brute;
  if (ppower) {
    auto s = sylow_p_subgroup(a, p);
    table = build_table(s, p);
  } else {
    brute = build_brute(a, kDefaultElementCap);
  }

  guard(rep.cayley, [&] {
    auto res = ppower ? table_regular_any(*table, max_nodes)
                      : brute_regular(*brute, RegularPredicate::Any, max_nodes);
    rep.cayley.state = res.witness ? Flag::Yes : Flag::No;
    rep.cayley.detail = res.stats.note + " (" +
                        std::to_string(res.stats.nodes) + " nodes)";
    if (res.witness)
      rep.cayley_witness = res.witness->generators();
  });
  guard(rep.weak_metacirculant_cayley, [&] {
    auto res = ppower
                   ? table_regular_metacyclic(*table, max_nodes)
                   : brute_regular(*brute, RegularPredicate::Metacyclic,
                                   max_nodes);
    rep.weak_metacirculant_cayley.state = res.witness ? Flag::Yes : Flag::No;
    rep.weak_metacirculant_cayley.detail =
        res.stats.note + " (" + std::to_string(res.stats.nodes) + " nodes)";
  });
  std::optional<TransitiveMetacyclicOutcome> tm;
  guard(rep.weak_metacirculant, [&] {
    tm = ppower ? table_transitive_metacyclic(*table, false, max_nodes)
                : brute_transitive_metacyclic(*brute, false, max_nodes);
    rep.weak_metacirculant.state = tm->witness ? Flag::Yes : Flag::No;
    rep.weak_metacirculant.detail = tm->stats.note;
    if (tm->witness)
      rep.metacyclic_witness = tm->witness->subgroup.generators();
  });
  std::optional<TransitiveMetacyclicWitness> split_witness;
  bool split_certified_empty = false;
  guard(rep.split_weak_metacirculant, [&] {
    if (tm && tm->witness && tm->witness->split) {
      split_witness = tm->witness;
      rep.split_weak_metacirculant.state = Flag::Yes;
      rep.split_weak_metacirculant.detail = tm->stats.note + ", split";
      return;
    }
    if (tm && !tm->witness) {
      split_certified_empty = tm->stats.exhausted;
      rep.split_weak_metacirculant.state = Flag::No;
      rep.split_weak_metacirculant.detail = "no transitive metacyclic subgroup";
      return;
    }
    auto res = ppower ? table_transitive_metacyclic(*table, true, max_nodes)
                      : brute_transitive_metacyclic(*brute, true, max_nodes);
    rep.split_weak_metacirculant.state = res.witness ? Flag::Yes : Flag::No;
    rep.split_weak_metacirculant.detail = res.stats.note;
    split_witness = res.witness;
    split_certified_empty = !res.witness && res.stats.exhausted;
  });
  guard(rep.metacirculant, [&] {
    if (ppower) {
      // primary route: a split transitive metacyclic witness yields a
      // definitional pair constructively (equivalence for odd prime
      // power order); direct pair sweep is the fallback
      if (split_witness) {
        if (auto pair = definitional_pair_from_split(g, split_witness->subgroup)) {
          rep.metacirculant.state = Flag::Yes;
          rep.metacirculant.detail = "pair derived from the split witness";
          rep.sigma_tau = pair;
          return;
        }
      } else if (split_certified_empty) {
        rep.metacirculant.state = Flag::No;
        rep.metacirculant.detail =
            "no split transitive metacyclic subgroup (equivalent condition)";
        return;
      }
      auto res = table_pair_search(*table, max_nodes);
      rep.metacirculant.state = res.pair ? Flag::Yes : Flag::No;
      rep.metacirculant.detail = res.stats.note;
      if (res.pair) {
        if (!is_metacirculant_definitional(g, res.pair->first,
                                           res.pair->second))
          throw std::logic_error("classify: uncertified metacirculant pair");
        rep.sigma_tau = res.pair;
      }
    } else {
      auto res = brute_pair_search(g, *brute, max_nodes);
      rep.metacirculant.state = res.pair ? Flag::Yes : Flag::No;
      rep.metacirculant.detail = res.stats.note;
      if (res.pair)
        rep.sigma_tau = res.pair;
    }
  });
  return rep;
}

DistanceClaimReport verify_mp_distance_claim(int p, int m, int n,
                                             std::uint64_t lambda) {
  DistanceClaimReport rep;
  std::uint64_t big = 1;
  for (int i = 0; i < m; ++i)
    big *= p;
  const std::uint64_t s = big / p; // p^(m-1)
  std::uint64_t layers = 1;
  for (int i = 0; i < n; ++i)
    layers *= p;
  auto gamma = multilayer_generalized_petersen(
      {static_cast<int>(big), static_cast<int>(layers), static_cast<int>(s),
       static_cast<int>(lambda)});
  rep.holds = true;
  std::uint64_t lam_i = 1 % s;
  for (std::uint64_t i = 0; i < layers; ++i) {
    std::vector<int> verts;
    for (std::uint64_t j = 0; j < big; ++j)
      verts.push_back(static_cast<int>(i * big + j));
    auto layer = induced_subgraph(gamma, verts);
    const std::uint64_t inv = modinv(lam_i, s);
    for (std::uint64_t j = 1; j < big; ++j) {
      if (j % s == 0)
        continue;
      const std::uint64_t t = (j % s) * inv % s;
      const int expected = static_cast<int>(std::min(t, s - t));
      auto d = bfs_distance(layer, 0, static_cast<int>(j));
      ++rep.pairs_checked;
      if (!d || *d != expected) {
        rep.holds = false;
        if (rep.violation.empty())
          rep.violation = "layer " + std::to_string(i) + ", vertex " +
                          std::to_string(j) + ": expected " +
                          std::to_string(expected) + ", got " +
                          (d ? std::to_string(*d) : std::string("infinity"));
      }
    }
    lam_i = lam_i * (lambda % s) % s;
  }
  return rep;
}

std::vector<int> mp_cayley_connection_set(const FiniteGroup &g, int p) {
  const auto &gens = g.generators();
  const int x = gens[0], y = gens[1], z = gens[2];
  std::vector<int> s;
  int cur = x;
  for (int k = 0; k < p; ++k) {
    s.push_back(cur);
    cur = g.mul(cur, z);
  }
  s.push_back(y);
  const std::size_t half = s.size();
  for (std::size_t i = 0; i < half; ++i)
    s.push_back(g.inverse(s[i]));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

CayleyIsoReport verify_mp_cayley_isomorphism(int p, int m, int n,
                                             std::uint64_t lambda) {
  CayleyIsoReport rep;
  auto g = mp_cayley_group(p, m, n, lambda);
  auto conn = mp_cayley_connection_set(g, p);
  auto sigma = cayley_graph(g, conn);
  std::uint64_t big = 1;
  for (int i = 0; i < m; ++i)
    big *= p;
  const std::uint64_t s = big / p;
  std::uint64_t layers = 1;
  for (int i = 0; i < n; ++i)
    layers *= p;
  auto gamma = multilayer_generalized_petersen(
      {static_cast<int>(big), static_cast<int>(layers), static_cast<int>(s),
       static_cast<int>(lambda)});
  const int total = g.size();
  rep.bijection.resize(total);
  std::vector<char> hit(total, 0);
  for (int id = 0; id < total; ++id) {
    // id = (i * p^(m-1) + j) * p + k
    const int k = id % p;
    const int rest = id / p;
    const std::uint64_t j = rest % s;
    const std::uint64_t i = rest / s;
    const std::uint64_t v = i * big + (j + k * s) % big;
    rep.bijection[id] = static_cast<int>(v);
    if (hit[v]) {
      rep.violation = "map is not injective";
      return rep;
    }
    hit[v] = 1;
  }
  if (sigma.edge_count() != gamma.edge_count()) {
    rep.violation = "edge counts differ: " + std::to_string(sigma.edge_count()) +
                    " vs " + std::to_string(gamma.edge_count());
    return rep;
  }
  for (auto [u, v] : sigma.edges()) {
    ++rep.edges_checked;
    if (!gamma.adjacent(rep.bijection[u], rep.bijection[v])) {
      rep.violation = "edge {" + std::to_string(u) + "," + std::to_string(v) +
                      "} is not preserved";
      return rep;
    }
  }
  rep.holds = true;
  return rep;
}

ArcTransitivityReport
inner_arc_transitivity_check(int p, int m, int n, std::uint64_t lambda,
                             int aut_bound) {
  ArcTransitivityReport rep;
  std::uint64_t big = 1;
  for (int i = 0; i < m; ++i)
    big *= p;
  std::uint64_t layers = 1;
  for (int i = 0; i < n; ++i)
    layers *= p;
  auto gamma = multilayer_generalized_petersen(
      {static_cast<int>(big), static_cast<int>(layers),
       static_cast<int>(big / p), static_cast<int>(lambda)});
  auto aut = automorphism_group(gamma, aut_bound);
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : gamma.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  std::map<std::pair<int, int>, int> arc_id;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i)
    arc_id.emplace(arcs[i], i);
  std::vector<Permutation> gens = aut.generators();
  {
    const std::size_t count = gens.size();
    for (std::size_t i = 0; i < count; ++i)
      gens.push_back(gens[i].inverse());
  }
  auto inner = [&](const std::pair<int, int> &a) {
    return a.first / static_cast<int>(big) == a.second / static_cast<int>(big);
  };
  std::vector<char> seen(arcs.size(), 0);
  for (int start = 0; start < static_cast<int>(arcs.size()); ++start) {
    if (seen[start])
      continue;
    bool touches_inner = false;
    std::vector<int> queue{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto &a = arcs[queue[i]];
      if (inner(a))
        touches_inner = true;
      for (const auto &g : gens) {
        int id = arc_id.at({g[a.first], g[a.second]});
        if (!seen[id]) {
          seen[id] = 1;
          queue.push_back(id);
        }
      }
    }
    ++rep.all_arc_orbits;
    if (touches_inner)
      ++rep.inner_arc_orbits;
  }
  rep.inner_arcs_one_orbit = rep.inner_arc_orbits == 1;
  return rep;
}

} // namespace cgt
