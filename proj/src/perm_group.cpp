#include "cgt/perm_group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "cgt/errors.hpp"

namespace cgt {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int> &v) const {
    std::size_t h = v.size();
    for (int x : v)
      h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
    return h;
  }
};

} // namespace

PermutationGroup::PermutationGroup(int degree) : degree_(degree) {
  if (degree <= 0)
    throw std::invalid_argument("group degree must be positive");
}

PermutationGroup::PermutationGroup(std::vector<Permutation> gens,
                                   std::vector<int> base_hint)
    : gens_(std::move(gens)), base_hint_(std::move(base_hint)) {
  if (gens_.empty())
    throw std::invalid_argument("generator list must be nonempty");
  degree_ = gens_.front().degree();
  for (const auto &g : gens_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generators must share one degree");
  for (int b : base_hint_)
    if (b < 0 || b >= degree_)
      throw std::invalid_argument("base hint point out of range");
}

void PermutationGroup::ensure_chain() const {
  if (chain_built_)
    return;
  chain_built_ = true;
  chain_.clear();

  std::vector<Permutation> gens;
  for (const auto &g : gens_)
    if (!g.is_identity())
      gens.push_back(g);

  std::vector<int> base;
  auto known = [&](int p) {
    return std::find(base.begin(), base.end(), p) != base.end();
  };
  for (int b : base_hint_)
    if (!known(b))
      base.push_back(b);
  for (const auto &g : gens) {
    bool fixes_all = true;
    for (int b : base)
      if (g[b] != b) {
        fixes_all = false;
        break;
      }
    if (fixes_all)
      base.push_back(g.smallest_moved_point());
  }

  for (std::size_t l = 0; l < base.size(); ++l) {
    Level level;
    level.base_point = base[l];
    for (const auto &g : gens) {
      bool fixes_prefix = true;
      for (std::size_t i = 0; i < l; ++i)
        if (g[base[i]] != base[i]) {
          fixes_prefix = false;
          break;
        }
      if (fixes_prefix)
        level.gens.push_back(g);
    }
    chain_.push_back(std::move(level));
  }

  for (int k = static_cast<int>(chain_.size()) - 1; k >= 0; --k)
    schreier_sims(k);
}

void PermutationGroup::recompute_orbit(Level &level) const {
  level.orbit.assign(1, level.base_point);
  level.tidx.assign(degree_, -1);
  level.tidx[level.base_point] = 0;
  level.trans.assign(1, Permutation(degree_));
  level.trans_inv.assign(1, Permutation(degree_));
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    for (const auto &g : level.gens) {
      int img = g[level.orbit[i]];
      if (level.tidx[img] < 0) {
        level.tidx[img] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(img);
        level.trans.push_back(compose(level.trans[i], g));
        level.trans_inv.push_back(level.trans.back().inverse());
      }
    }
  }
}

std::pair<Permutation, int> PermutationGroup::strip(Permutation g, int from) const {
  for (int l = from; l < static_cast<int>(chain_.size()); ++l) {
    int img = g[chain_[l].base_point];
    int idx = chain_[l].tidx.empty() ? -1 : chain_[l].tidx[img];
    if (idx < 0)
      return {std::move(g), l};
    g = compose(g, chain_[l].trans_inv[idx]);
  }
  return {std::move(g), static_cast<int>(chain_.size())};
}

void PermutationGroup::schreier_sims(int k) const {
  // chain_ may reallocate through deeper recursion: index, don't hold refs
  recompute_orbit(chain_[k]);
  for (std::size_t i = 0; i < chain_[k].orbit.size(); ++i) {
    for (std::size_t gi = 0; gi < chain_[k].gens.size(); ++gi) {
      const Level &level = chain_[k];
      const Permutation &g = level.gens[gi];
      int img = g[level.orbit[i]];
      Permutation schreier =
          compose(compose(level.trans[i], g), level.trans_inv[level.tidx[img]]);
      if (schreier.is_identity())
        continue;
      auto [residue, j] = strip(std::move(schreier), k + 1);
      if (residue.is_identity())
        continue;
      if (j == static_cast<int>(chain_.size())) {
        Level fresh;
        fresh.base_point = residue.smallest_moved_point();
        chain_.push_back(std::move(fresh));
      }
      for (int l = k + 1; l <= j; ++l)
        chain_[l].gens.push_back(residue);
      for (int l = j; l >= k + 1; --l)
        schreier_sims(l);
    }
  }
}

std::uint64_t PermutationGroup::order() const {
  ensure_chain();
  std::uint64_t n = 1;
  for (const auto &level : chain_)
    n *= static_cast<std::uint64_t>(level.orbit.size());
  return n;
}

bool PermutationGroup::contains(const Permutation &p) const {
  if (p.degree() != degree_)
    return false;
  ensure_chain();
  auto [residue, level] = strip(p, 0);
  (void)level;
  return residue.is_identity();
}

bool PermutationGroup::contains_subgroup(const PermutationGroup &h) const {
  for (const auto &g : h.generators())
    if (!contains(g))
      return false;
  return true;
}

std::vector<int> PermutationGroup::orbit_of(int point) const {
  if (point < 0 || point >= degree_)
    throw std::invalid_argument("point out of range");
  std::vector<int> orbit{point};
  std::vector<char> seen(degree_, 0);
  seen[point] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const auto &g : gens_) {
      int img = g[orbit[i]];
      if (!seen[img]) {
        seen[img] = 1;
        orbit.push_back(img);
      }
    }
  return orbit;
}

std::vector<std::vector<int>> PermutationGroup::orbits() const {
  std::vector<char> seen(degree_, 0);
  std::vector<std::vector<int>> cells;
  for (int p = 0; p < degree_; ++p) {
    if (seen[p])
      continue;
    auto orbit = orbit_of(p);
    for (int q : orbit)
      seen[q] = 1;
    std::sort(orbit.begin(), orbit.end());
    cells.push_back(std::move(orbit));
  }
  return cells;
}

PermutationGroup PermutationGroup::stabilizer(int point) const {
  return pointwise_stabilizer({point});
}

PermutationGroup PermutationGroup::pointwise_stabilizer(const std::vector<int> &points) const {
  for (int p : points)
    if (p < 0 || p >= degree_)
      throw std::invalid_argument("point out of range");
  if (gens_.empty())
    return PermutationGroup(degree_);

  PermutationGroup rebased(gens_, points);
  rebased.ensure_chain();
  if (rebased.chain_.empty())
    return PermutationGroup(degree_);

  // The first levels of the rebased chain walk through `points` (minus
  // duplicates); strong generators below them generate the stabilizer.
  std::vector<int> distinct;
  for (int p : points)
    if (std::find(distinct.begin(), distinct.end(), p) == distinct.end())
      distinct.push_back(p);

  std::size_t l = 0;
  while (l < rebased.chain_.size() && l < distinct.size() &&
         rebased.chain_[l].base_point == distinct[l])
    ++l;
  if (l < distinct.size())
    // some hint point never became a base point: whole group fixes it
    // only if no generator moves it, which ensure_chain rules out, so
    // this cannot happen; guard anyway.
    throw std::logic_error("rebased chain lost a hint point");

  if (l >= rebased.chain_.size())
    return PermutationGroup(degree_);
  std::vector<Permutation> stab_gens = rebased.chain_[l].gens;
  if (stab_gens.empty())
    return PermutationGroup(degree_);
  return PermutationGroup(std::move(stab_gens));
}

TransitivityProfile PermutationGroup::transitivity_profile() const {
  auto cells = orbits();
  std::uint64_t n = order();
  bool transitive = cells.size() == 1;
  bool semiregular = true;
  for (const auto &cell : cells)
    if (static_cast<std::uint64_t>(cell.size()) != n)
      semiregular = false;
  return {transitive, semiregular, transitive && semiregular};
}

void PermutationGroup::for_each_element(
    const std::function<bool(const Permutation &)> &visit) const {
  ensure_chain();
  if (chain_.empty()) {
    visit(Permutation(degree_));
    return;
  }
  // Element = t_{L-1} * ... * t_0 with t_l a transversal element of level l.
  std::function<bool(int, const Permutation &)> rec = [&](int l, const Permutation &acc) {
    if (l < 0)
      return visit(acc);
    for (const auto &u : chain_[l].trans)
      if (!rec(l - 1, compose(acc, u)))
        return false;
    return true;
  };
  rec(static_cast<int>(chain_.size()) - 1, Permutation(degree_));
}

std::vector<Permutation>
PermutationGroup::enumerate_elements(std::uint64_t cap) const {
  std::uint64_t n = order();
  if (n > cap)
    throw CapExceeded(n, cap);
  std::vector<Permutation> all;
  all.reserve(static_cast<std::size_t>(n));
  for_each_element([&](const Permutation &p) {
    all.push_back(p);
    return true;
  });
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<int> PermutationGroup::base() const {
  ensure_chain();
  std::vector<int> pts;
  for (const auto &level : chain_)
    pts.push_back(level.base_point);
  return pts;
}

std::string PermutationGroup::to_string() const {
  std::ostringstream os;
  os << "degree: " << degree_ << '\n';
  for (const auto &g : gens_)
    os << g.to_string() << '\n';
  return os.str();
}

PermutationGroup PermutationGroup::parse(const std::string &text) {
  std::istringstream is(text);
  std::string line;
  int degree = -1;
  std::vector<Permutation> gens;
  while (std::getline(is, line)) {
    if (line.empty())
      continue;
    if (line.rfind("degree:", 0) == 0) {
      degree = std::stoi(line.substr(7));
      continue;
    }
    gens.push_back(Permutation::parse(line));
  }
  if (degree <= 0)
    throw std::invalid_argument("group text lacks a degree header");
  if (gens.empty())
    return PermutationGroup(degree);
  return PermutationGroup(std::move(gens));
}

namespace {

PermutationGroup filtered_subgroup(const PermutationGroup &g,
                                   const std::function<bool(const Permutation &)> &keep,
                                   std::uint64_t budget, const char *what) {
  if (g.order() > budget)
    throw SearchBudgetExceeded(std::string(what) + ": |G| = " + std::to_string(g.order()) +
                               " exceeds budget " + std::to_string(budget));
  std::vector<Permutation> sub_gens;
  std::optional<PermutationGroup> sub;
  g.for_each_element([&](const Permutation &k) {
    if (!keep(k))
      return true;
    if (k.is_identity())
      return true;
    if (sub && sub->contains(k))
      return true;
    sub_gens.push_back(k);
    sub.emplace(sub_gens);
    return true;
  });
  if (!sub)
    return PermutationGroup(g.degree());
  return *sub;
}

} // namespace

PermutationGroup normalizer_in(const PermutationGroup &g, const PermutationGroup &h,
                               std::uint64_t budget) {
  if (!g.contains_subgroup(h))
    throw std::invalid_argument("normalizer_in: H is not a subgroup of G");
  return filtered_subgroup(
      g,
      [&](const Permutation &k) {
        for (const auto &hg : h.generators())
          if (!h.contains(conjugate(hg, k)))
            return false;
        return true;
      },
      budget, "normalizer_in");
}

PermutationGroup centralizer_in(const PermutationGroup &g, const PermutationGroup &h,
                                std::uint64_t budget) {
  if (!g.contains_subgroup(h))
    throw std::invalid_argument("centralizer_in: H is not a subgroup of G");
  return filtered_subgroup(
      g,
      [&](const Permutation &k) {
        for (const auto &hg : h.generators())
          if (compose(k, hg) != compose(hg, k))
            return false;
        return true;
      },
      budget, "centralizer_in");
}

std::vector<Permutation> closure_elements(const std::vector<Permutation> &gens,
                                          std::uint64_t cap) {
  if (gens.empty())
    throw std::invalid_argument("closure of an empty generator list");
  int degree = gens.front().degree();
  std::vector<Permutation> elems{Permutation(degree)};
  std::unordered_set<std::vector<int>, VecHash> seen;
  seen.insert(elems.front().images());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto &g : gens) {
      Permutation next = compose(elems[i], g);
      if (seen.insert(next.images()).second) {
        if (elems.size() + 1 > cap)
          throw CapExceeded(elems.size() + 1, cap);
        elems.push_back(std::move(next));
      }
    }
  }
  return elems;
}

} // namespace cgt
