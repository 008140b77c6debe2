#include "cgt/finite_group.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

std::uint64_t upow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

std::uint64_t modpow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1)
      r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t modinv(std::uint64_t a, std::uint64_t m) {
  long long t = 0, newt = 1, r = static_cast<long long>(m),
            newr = static_cast<long long>(a % m);
  while (newr != 0) {
    long long q = r / newr;
    std::tie(t, newt) = std::make_pair(newt, t - q * newt);
    std::tie(r, newr) = std::make_pair(newr, r - q * newr);
  }
  if (r != 1)
    throw std::invalid_argument("not a unit: " + std::to_string(a) + " mod " +
                                std::to_string(m));
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<long long>(m) : t);
}

} // namespace

FiniteGroup::FiniteGroup(std::uint64_t order, Mul mul, std::vector<int> generators,
                         Label label)
    : n_(order), mul_(std::move(mul)), gens_(std::move(generators)),
      label_(std::move(label)) {
  if (n_ == 0)
    throw std::invalid_argument("group order must be positive");
}

int FiniteGroup::inverse(int a) const {
  if (inv_.empty())
    inv_.assign(n_, -1);
  if (inv_[a] < 0)
    inv_[a] = pow(a, static_cast<long long>(element_order(a)) - 1);
  return inv_[a];
}

int FiniteGroup::pow(int g, long long e) const {
  if (e < 0)
    return pow(inverse(g), -e);
  int acc = 0, base = g;
  while (e) {
    if (e & 1)
      acc = mul_(acc, base);
    base = mul_(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::conj(int g, int by) const {
  return mul_(mul_(inverse(by), g), by);
}

int FiniteGroup::comm(int a, int b) const {
  return mul_(mul_(mul_(inverse(a), inverse(b)), a), b);
}

std::uint64_t FiniteGroup::element_order(int g) const {
  if (g == 0)
    return 1;
  if (auto p = p_group_prime()) {
    std::uint64_t ord = 1;
    int h = g;
    while (h != 0) {
      h = pow(h, *p);
      ord *= static_cast<std::uint64_t>(*p);
    }
    return ord;
  }
  std::uint64_t ord = 1;
  int acc = g;
  while (acc != 0) {
    acc = mul_(acc, g);
    ++ord;
  }
  return ord;
}

std::string FiniteGroup::label(int g) const {
  if (label_)
    return label_(g);
  return std::to_string(g);
}

std::optional<int> FiniteGroup::p_group_prime() const {
  if (n_ == 1)
    return std::nullopt;
  std::uint64_t n = n_;
  std::uint64_t p = 2;
  while (p * p <= n && n % p != 0)
    ++p;
  if (n % p != 0)
    p = n; // n prime
  while (n % p == 0)
    n /= p;
  if (n != 1)
    return std::nullopt;
  return static_cast<int>(p);
}

bool FiniteGroup::is_abelian() const {
  if (!gens_.empty()) {
    for (int a : gens_)
      for (int b : gens_)
        if (mul_(a, b) != mul_(b, a))
          return false;
    return true;
  }
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (mul_(a, b) != mul_(b, a))
        return false;
  return true;
}

bool FiniteGroup::is_cyclic() const {
  for (int g = 0; g < size(); ++g)
    if (element_order(g) == n_)
      return true;
  return false;
}

std::uint64_t FiniteGroup::exponent() const {
  std::uint64_t e = 1;
  for (int g = 0; g < size(); ++g)
    e = std::lcm(e, element_order(g));
  return e;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int> &seed) const {
  std::vector<int> elems{0};
  std::unordered_set<int> seen{0};
  for (int s : seed)
    if (seen.insert(s).second)
      elems.push_back(s);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : seed) {
      int next = mul_(elems[i], s);
      if (seen.insert(next).second)
        elems.push_back(next);
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> FiniteGroup::normal_closure(const std::vector<int> &seed) const {
  std::vector<int> conjugators = gens_;
  if (conjugators.empty()) {
    conjugators.resize(n_);
    std::iota(conjugators.begin(), conjugators.end(), 0);
  }
  std::vector<int> gen_set = seed;
  for (;;) {
    auto sub = generated_subgroup(gen_set);
    std::unordered_set<int> in_sub(sub.begin(), sub.end());
    bool grew = false;
    for (int x : sub) {
      for (int c : conjugators) {
        int y = conj(x, c);
        if (!in_sub.count(y)) {
          gen_set.push_back(y);
          grew = true;
        }
      }
      if (grew)
        break;
    }
    if (!grew)
      return sub;
  }
}

bool FiniteGroup::is_subgroup(const std::vector<int> &elems) const {
  std::unordered_set<int> set(elems.begin(), elems.end());
  if (!set.count(0))
    return false;
  for (int a : elems)
    for (int b : elems)
      if (!set.count(mul_(a, b)))
        return false;
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int> &sub) const {
  std::unordered_set<int> set(sub.begin(), sub.end());
  std::vector<int> conjugators = gens_;
  if (conjugators.empty()) {
    conjugators.resize(n_);
    std::iota(conjugators.begin(), conjugators.end(), 0);
  }
  for (int x : sub)
    for (int c : conjugators)
      if (!set.count(conj(x, c)))
        return false;
  return true;
}

std::vector<int> FiniteGroup::cyclic_subgroup(int g) const {
  std::vector<int> elems{0};
  int acc = g;
  while (acc != 0) {
    elems.push_back(acc);
    acc = mul_(acc, g);
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<int> FiniteGroup::derived_subgroup() const {
  if (!gens_.empty()) {
    std::vector<int> seed;
    for (int a : gens_)
      for (int b : gens_) {
        int c = comm(a, b);
        if (c != 0)
          seed.push_back(c);
      }
    return normal_closure(seed);
  }
  std::vector<int> seed;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      int c = comm(a, b);
      if (c != 0)
        seed.push_back(c);
    }
  return normal_closure(seed);
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> testers = gens_;
  if (testers.empty()) {
    testers.resize(n_);
    std::iota(testers.begin(), testers.end(), 0);
  }
  std::vector<int> z;
  for (int g = 0; g < size(); ++g) {
    bool central = true;
    for (int x : testers)
      if (mul_(g, x) != mul_(x, g)) {
        central = false;
        break;
      }
    if (central)
      z.push_back(g);
  }
  return z;
}

std::vector<int> FiniteGroup::frattini_subgroup() const {
  auto p = p_group_prime();
  if (!p && n_ > 1)
    throw std::invalid_argument("frattini_subgroup implemented for p-groups only");
  if (n_ == 1)
    return {0};
  std::vector<int> seed = derived_subgroup();
  if (!gens_.empty()) {
    for (int g : gens_)
      seed.push_back(pow(g, *p));
  } else {
    for (int g = 0; g < size(); ++g)
      seed.push_back(pow(g, *p));
  }
  return generated_subgroup(seed);
}

// ---- presentations --------------------------------------------------------

std::uint64_t XuZhangParams::group_order() const {
  return upow(p, 2 * (r + s) + u + t);
}

FiniteGroup xu_zhang_group(const XuZhangParams &params, std::uint64_t cap) {
  const auto [p, r, s, t, u] = params;
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("xu_zhang_group: p must be an odd prime");
  if (r < 1 || u > r || s < 0 || t < 0 || u < 0)
    throw std::invalid_argument("xu_zhang_group: need r >= 1, r >= u, s,t >= 0");
  std::uint64_t order = params.group_order();
  if (order > cap)
    throw CapExceeded(order, cap);

  const std::int64_t ma = static_cast<std::int64_t>(upow(p, r + s + u)); // o(a)
  const std::int64_t mb = static_cast<std::int64_t>(upow(p, r + s + t)); // normal-form range of b
  const std::int64_t shift = static_cast<std::int64_t>(upow(p, r + s)); // b^mb = a^shift
  const std::uint64_t e = (1 + upow(p, r)) % static_cast<std::uint64_t>(ma);
  const std::uint64_t einv = modinv(e, static_cast<std::uint64_t>(ma));

  auto einv_pow = std::make_shared<std::vector<std::int64_t>>(mb);
  (*einv_pow)[0] = 1;
  for (std::int64_t j = 1; j < mb; ++j)
    (*einv_pow)[j] = static_cast<std::int64_t>(
        static_cast<std::uint64_t>((*einv_pow)[j - 1]) * einv %
        static_cast<std::uint64_t>(ma));

  auto mul = [ma, mb, shift, einv_pow](int x, int y) {
    std::int64_t i1 = x / mb, j1 = x % mb;
    std::int64_t i2 = y / mb, j2 = y % mb;
    std::int64_t j = j1 + j2;
    std::int64_t carry = j >= mb ? 1 : 0;
    j -= carry * mb;
    std::int64_t i = (i1 + i2 * (*einv_pow)[j1] + carry * shift) % ma;
    return static_cast<int>(i * mb + j);
  };
  auto label = [mb](int x) {
    std::ostringstream os;
    os << "a^" << x / mb << " b^" << x % mb;
    return os.str();
  };
  int a = static_cast<int>(mb); // (i,j) = (1,0)
  int b = 1;                    // (0,1)
  std::vector<int> gens;
  if (a != 0)
    gens.push_back(a);
  if (b != 0 && b != a)
    gens.push_back(b);
  return FiniteGroup(order, mul, gens, label);
}

FiniteGroup split_metacyclic_group(std::uint64_t m_order, std::uint64_t n_order,
                                   std::uint64_t e, std::uint64_t cap) {
  if (m_order == 0 || n_order == 0)
    throw std::invalid_argument("split_metacyclic_group: orders must be positive");
  if (modpow(e, n_order, m_order) != 1 % m_order)
    throw std::invalid_argument("split_metacyclic_group: e^N != 1 (mod M)");
  std::uint64_t order = m_order * n_order;
  if (order > cap)
    throw CapExceeded(order, cap);
  const std::int64_t m = static_cast<std::int64_t>(m_order);
  const std::int64_t n = static_cast<std::int64_t>(n_order);
  const std::uint64_t einv = modinv(e, m_order); // validates e is a unit

  auto einv_pow = std::make_shared<std::vector<std::int64_t>>(n);
  (*einv_pow)[0] = 1 % m;
  for (std::int64_t j = 1; j < n; ++j)
    (*einv_pow)[j] = static_cast<std::int64_t>(
        static_cast<std::uint64_t>((*einv_pow)[j - 1]) * einv % m_order);

  auto mul = [m, n, einv_pow](int x, int y) {
    std::int64_t i1 = x / n, j1 = x % n;
    std::int64_t i2 = y / n, j2 = y % n;
    std::int64_t i = (i1 + i2 * (*einv_pow)[j1]) % m;
    std::int64_t j = (j1 + j2) % n;
    return static_cast<int>(i * n + j);
  };
  auto label = [n](int x) {
    std::ostringstream os;
    os << "s^" << x / n << " t^" << x % n;
    return os.str();
  };
  std::vector<int> gens;
  if (m > 1)
    gens.push_back(static_cast<int>(n)); // sigma
  if (n > 1)
    gens.push_back(1); // tau
  return FiniteGroup(order, mul, gens, label);
}

FiniteGroup mp_cayley_group(int p, int m, int n, std::uint64_t lambda,
                            std::uint64_t cap) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("mp_cayley_group: p must be an odd prime");
  if (!(m >= n + 2 && n + 2 >= 3))
    throw std::invalid_argument("mp_cayley_group: need m >= n+2 >= 3");
  std::uint64_t pm = upow(p, m);
  // lambda must have multiplicative order p^(n+1) mod p^m
  if (modpow(lambda, upow(p, n + 1), pm) != 1 ||
      modpow(lambda, upow(p, n), pm) == 1)
    throw std::invalid_argument("mp_cayley_group: lambda must have order p^(n+1) mod p^m");
  std::uint64_t order = upow(p, m + n);
  if (order > cap)
    throw CapExceeded(order, cap);

  const std::int64_t yn = static_cast<std::int64_t>(upow(p, n));     // o(y)
  const std::int64_t xm = static_cast<std::int64_t>(upow(p, m - 1)); // o(x)
  const std::int64_t zp = p;

  auto lam_pow = std::make_shared<std::vector<std::int64_t>>(yn);
  (*lam_pow)[0] = 1;
  for (std::int64_t i = 1; i < yn; ++i)
    (*lam_pow)[i] = static_cast<std::int64_t>(
        static_cast<std::uint64_t>((*lam_pow)[i - 1]) * (lambda % static_cast<std::uint64_t>(xm)) %
        static_cast<std::uint64_t>(xm));

  // id = (i * xm + j) * p + k for y^i x^j z^k
  auto mul = [yn, xm, zp, lam_pow](int a, int b) {
    std::int64_t k1 = a % zp, j1 = (a / zp) % xm, i1 = a / (zp * xm);
    std::int64_t k2 = b % zp, j2 = (b / zp) % xm, i2 = b / (zp * xm);
    std::int64_t i = (i1 + i2) % yn;
    std::int64_t j = (j1 * (*lam_pow)[i2] + j2) % xm;
    std::int64_t k = (k1 + k2) % zp;
    return static_cast<int>((i * xm + j) * zp + k);
  };
  auto label = [xm, zp](int a) {
    std::ostringstream os;
    os << "y^" << a / (zp * xm) << " x^" << (a / zp) % xm << " z^" << a % zp;
    return os.str();
  };
  int x = static_cast<int>(zp);      // (0,1,0)
  int y = static_cast<int>(xm * zp); // (1,0,0)
  int z = 1;                         // (0,0,1)
  return FiniteGroup(order, mul, {x, y, z}, label);
}

FiniteGroup cyclic_group(std::uint64_t n) {
  const std::int64_t m = static_cast<std::int64_t>(n);
  auto mul = [m](int a, int b) { return static_cast<int>((a + b) % m); };
  std::vector<int> gens;
  if (n > 1)
    gens.push_back(1);
  return FiniteGroup(n, mul, gens);
}

FiniteGroup group_from_permutations(const PermutationGroup &g, std::uint64_t cap) {
  struct Table {
    std::vector<Permutation> elems;
    std::unordered_map<std::string, int> index;
  };
  auto table = std::make_shared<Table>();
  table->elems = g.enumerate_elements(cap);
  for (std::size_t i = 0; i < table->elems.size(); ++i)
    table->index.emplace(table->elems[i].to_string(), static_cast<int>(i));

  auto mul = [table](int a, int b) {
    return table->index.at(compose(table->elems[a], table->elems[b]).to_string());
  };
  std::vector<int> gens;
  for (const auto &p : g.generators()) {
    int id = table->index.at(p.to_string());
    if (id != 0 && std::find(gens.begin(), gens.end(), id) == gens.end())
      gens.push_back(id);
  }
  auto label = [table](int a) { return table->elems[a].to_string(); };
  return FiniteGroup(table->elems.size(), mul, gens, label);
}

// ---- structure operations -------------------------------------------------

PermutationGroup regular_representation(const FiniteGroup &g, std::uint64_t cap) {
  if (g.order() > cap)
    throw CapExceeded(g.order(), cap);
  int n = g.size();
  if (g.generators().empty())
    return PermutationGroup(std::max(n, 1));
  std::vector<Permutation> perms;
  for (int gen : g.generators()) {
    std::vector<int> imgs(n);
    for (int x = 0; x < n; ++x)
      imgs[x] = g.mul(x, gen);
    perms.emplace_back(std::move(imgs));
  }
  return PermutationGroup(std::move(perms));
}

QuotientGroup quotient_group(const FiniteGroup &g, const std::vector<int> &nsub) {
  if (!g.is_subgroup(nsub))
    throw std::invalid_argument("quotient_group: N is not a subgroup");
  if (!g.is_normal(nsub))
    throw std::invalid_argument("quotient_group: N is not normal");
  int n = g.size();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0)
      continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int h : nsub)
      coset_of[g.mul(h, x)] = id;
  }
  auto data = std::make_shared<std::pair<std::vector<int>, std::vector<int>>>(
      coset_of, reps);
  // keep the parent alive inside the quotient's closures
  auto parent = std::make_shared<FiniteGroup>(g);
  auto mul = [data, parent](int c1, int c2) {
    return data->first[parent->mul(data->second[c1], data->second[c2])];
  };
  std::vector<int> qgens;
  for (int gen : g.generators()) {
    int img = coset_of[gen];
    if (img != 0 && std::find(qgens.begin(), qgens.end(), img) == qgens.end())
      qgens.push_back(img);
  }
  auto label = [data, parent](int c) { return parent->label(data->second[c]) + " N"; };
  FiniteGroup q(reps.size(), mul, qgens, label);
  return {std::move(q), std::move(coset_of)};
}

std::vector<int> omega_s(const FiniteGroup &g, int p, int s) {
  auto prime = g.p_group_prime();
  if (g.order() > 1 && (!prime || *prime != p))
    throw std::invalid_argument("omega_s: group is not a p-group for the given p");
  std::uint64_t bound = upow(p, s);
  std::vector<int> seed;
  for (int x = 0; x < g.size(); ++x)
    if (bound % g.element_order(x) == 0)
      seed.push_back(x);
  return g.generated_subgroup(seed);
}

StructureReport structure_report(const FiniteGroup &g) {
  StructureReport r;
  r.order = g.order();
  r.exponent = g.exponent();
  r.derived_subgroup = g.derived_subgroup();
  r.center = g.center();
  if (g.p_group_prime() || g.order() == 1)
    r.frattini = g.frattini_subgroup();
  r.is_abelian = g.is_abelian();
  r.is_cyclic = g.is_cyclic();
  return r;
}

bool is_pk_abelian(const FiniteGroup &g, int p, int k) {
  long long pk = static_cast<long long>(upow(p, k));
  auto check = [&](int x, int y) {
    return g.pow(g.mul(x, y), pk) == g.mul(g.pow(x, pk), g.pow(y, pk));
  };
  if (g.order() <= 729) {
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y)
        if (!check(x, y))
          return false;
    return true;
  }
  std::mt19937 rng(0);
  for (int trial = 0; trial < 100000; ++trial) {
    int x = static_cast<int>(rng() % g.order());
    int y = static_cast<int>(rng() % g.order());
    if (!check(x, y))
      return false;
  }
  return true;
}

namespace {

// Distinct cyclic subgroups in decreasing order of size; visits each
// subgroup once via a callback, stopping early when it returns true.
void for_each_cyclic_subgroup_desc(
    const FiniteGroup &g,
    const std::function<bool(int gen, const std::vector<int> &elems)> &visit) {
  int n = g.size();
  std::vector<std::uint64_t> ord(n);
  std::vector<int> ids(n);
  for (int x = 0; x < n; ++x) {
    ord[x] = g.element_order(x);
    ids[x] = x;
  }
  std::stable_sort(ids.begin(), ids.end(),
                   [&](int a, int b) { return ord[a] > ord[b]; });
  std::vector<char> visited(n, 0);
  for (int x : ids) {
    if (x == 0 || visited[x])
      continue;
    auto elems = g.cyclic_subgroup(x);
    for (int y : elems)
      if (ord[y] == ord[x])
        visited[y] = 1; // same subgroup generator
    if (visit(x, elems))
      return;
  }
}

// Order of the image of h in G/N (N given as a hash set).
std::uint64_t order_mod(const FiniteGroup &g, int h,
                        const std::unordered_set<int> &nset,
                        std::optional<int> p) {
  if (p) {
    std::uint64_t d = 1;
    int acc = h;
    while (!nset.count(acc)) {
      acc = g.pow(acc, *p);
      d *= static_cast<std::uint64_t>(*p);
    }
    return d;
  }
  std::uint64_t d = 1;
  int acc = h;
  while (!nset.count(acc)) {
    acc = g.mul(acc, h);
    ++d;
  }
  return d;
}

// <h> meets the set trivially (h of prime-power order: socle test,
// otherwise walk the powers).
bool cyclic_meets_trivially(const FiniteGroup &g, int h,
                            const std::unordered_set<int> &set) {
  std::uint64_t oh = g.element_order(h);
  if (auto p = g.p_group_prime()) {
    int socle = g.pow(h, static_cast<long long>(oh / static_cast<std::uint64_t>(*p)));
    return !set.count(socle);
  }
  int acc = h;
  while (acc != 0) {
    if (set.count(acc))
      return false;
    acc = g.mul(acc, h);
  }
  return true;
}

} // namespace

MetacyclicWitness is_metacyclic(const FiniteGroup &g) {
  if (g.order() == 1)
    return {true, {0}, std::nullopt};
  MetacyclicWitness w{false, {}, std::nullopt};
  auto p = g.p_group_prime();
  for_each_cyclic_subgroup_desc(g, [&](int, const std::vector<int> &elems) {
    if (!g.is_normal(elems))
      return false;
    std::unordered_set<int> nset(elems.begin(), elems.end());
    std::uint64_t q = g.order() / elems.size();
    for (int h = 0; h < g.size(); ++h)
      if (order_mod(g, h, nset, p) == q) {
        w = {true, elems, std::nullopt};
        return true;
      }
    return false;
  });
  return w;
}

MetacyclicWitness is_split_metacyclic(const FiniteGroup &g) {
  if (g.order() == 1)
    return {true, {0}, 0};
  MetacyclicWitness w{false, {}, std::nullopt};
  for_each_cyclic_subgroup_desc(g, [&](int, const std::vector<int> &elems) {
    if (!g.is_normal(elems))
      return false;
    std::unordered_set<int> nset(elems.begin(), elems.end());
    std::uint64_t q = g.order() / elems.size();
    for (int h = 0; h < g.size(); ++h) {
      if (q == 1 && h > 0)
        break;
      if (g.element_order(h) != q && q != 1)
        continue;
      if (q == 1 || cyclic_meets_trivially(g, h, nset)) {
        w = {true, elems, h};
        return true;
      }
    }
    return false;
  });
  return w;
}

std::optional<OvergroupWitness> find_order_pn_overgroup(const FiniteGroup &g,
                                                        int sigma, int elem) {
  auto p = g.p_group_prime();
  if (!p || *p == 2)
    throw std::invalid_argument("find_order_pn_overgroup: G must be a p-group, p odd");
  if (elem == 0)
    throw std::invalid_argument("find_order_pn_overgroup: g must be nontrivial");
  auto sig = g.cyclic_subgroup(sigma);
  std::unordered_set<int> sigset(sig.begin(), sig.end());
  if (!cyclic_meets_trivially(g, elem, sigset))
    throw std::invalid_argument("find_order_pn_overgroup: <g> meets <sigma>");
  std::uint64_t pn = g.order() / sig.size();
  for (int t = 1; t < g.size(); ++t) {
    if (g.element_order(t) != pn)
      continue;
    auto cyc = g.cyclic_subgroup(t);
    if (std::binary_search(cyc.begin(), cyc.end(), elem))
      return OvergroupWitness{t, cyclic_meets_trivially(g, t, sigset)};
  }
  return std::nullopt;
}

std::vector<std::uint64_t> isomorphism_invariant_vector(const FiniteGroup &g) {
  std::vector<std::uint64_t> v;
  v.push_back(g.order());
  v.push_back(g.exponent());
  v.push_back(g.derived_subgroup().size());
  v.push_back(g.center().size());
  if (auto p = g.p_group_prime())
    v.push_back(omega_s(g, *p, 1).size());
  else
    v.push_back(0);
  std::map<std::uint64_t, std::uint64_t> order_counts;
  for (int x = 0; x < g.size(); ++x)
    ++order_counts[g.element_order(x)];
  for (auto [o, c] : order_counts) {
    v.push_back(o);
    v.push_back(c);
  }
  return v;
}

std::optional<std::vector<int>> group_isomorphism(const FiniteGroup &g1,
                                                  const FiniteGroup &g2) {
  if (g1.order() != g2.order())
    return std::nullopt;
  if (isomorphism_invariant_vector(g1) != isomorphism_invariant_vector(g2))
    return std::nullopt;
  int n = g1.size();

  // minimal generating sequence of g1, smallest ids first
  std::vector<int> gens1;
  {
    std::vector<int> closure{0};
    while (static_cast<int>(closure.size()) < n) {
      int pick = -1;
      for (int x = 0; x < n; ++x)
        if (!std::binary_search(closure.begin(), closure.end(), x)) {
          pick = x;
          break;
        }
      gens1.push_back(pick);
      closure = g1.generated_subgroup(gens1);
    }
  }

  // BFS expressions: every element of g1 as parent * generator
  std::vector<std::pair<int, int>> expr(n, {-1, -1}); // (parent, gen idx)
  {
    std::vector<int> queue{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::size_t gi = 0; gi < gens1.size(); ++gi) {
        int next = g1.mul(queue[i], gens1[gi]);
        if (!seen[next]) {
          seen[next] = 1;
          expr[next] = {queue[i], static_cast<int>(gi)};
          queue.push_back(next);
        }
      }
  }

  std::vector<std::vector<int>> candidates(gens1.size());
  for (std::size_t gi = 0; gi < gens1.size(); ++gi) {
    std::uint64_t o = g1.element_order(gens1[gi]);
    for (int y = 0; y < n; ++y)
      if (g2.element_order(y) == o)
        candidates[gi].push_back(y);
  }

  std::vector<int> images(gens1.size(), -1);
  std::vector<int> phi(n, -1);

  std::function<bool()> build_phi = [&]() {
    phi.assign(n, -1);
    phi[0] = 0;
    // fill along BFS order (expr parents always come earlier)
    std::vector<int> order{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t gi = 0; gi < gens1.size(); ++gi) {
        int next = g1.mul(order[i], gens1[gi]);
        if (!seen[next]) {
          seen[next] = 1;
          phi[next] = g2.mul(phi[order[i]], images[gi]);
          order.push_back(next);
        }
      }
    // multiplicativity over generator products (implies a homomorphism)
    for (int x = 0; x < n; ++x)
      for (std::size_t gi = 0; gi < gens1.size(); ++gi)
        if (phi[g1.mul(x, gens1[gi])] != g2.mul(phi[x], images[gi]))
          return false;
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n; ++x) {
      if (hit[phi[x]])
        return false;
      hit[phi[x]] = 1;
    }
    return true;
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t gi) {
    if (gi == gens1.size())
      return build_phi();
    for (int cand : candidates[gi]) {
      images[gi] = cand;
      if (assign(gi + 1))
        return true;
    }
    return false;
  };

  if (assign(0))
    return phi;
  return std::nullopt;
}

} // namespace cgt
