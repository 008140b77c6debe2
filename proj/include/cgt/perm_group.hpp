#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cgt/perm.hpp"

namespace cgt {

/// Default cap for whole-group element enumeration.
inline constexpr std::uint64_t kDefaultElementCap = 2'000'000;

struct TransitivityProfile {
  bool transitive;
  bool semiregular;
  bool regular;
};

/// Permutation group given by generators, with a lazily built BSGS
/// (base and strong generating set) via Schreier-Sims. Immutable after
/// construction; the chain cache is built at most once.
class PermutationGroup {
public:
  /// Trivial group of the given degree.
  explicit PermutationGroup(int degree);

  /// Group generated by `gens` (all of the same degree, list nonempty).
  /// `base_hint` prescribes the leading base points of the chain;
  /// remaining base points are the smallest moved points at each level.
  explicit PermutationGroup(std::vector<Permutation> gens,
                            std::vector<int> base_hint = {});

  int degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return gens_; }

  std::uint64_t order() const;
  bool is_trivial() const { return order() == 1; }

  bool contains(const Permutation &p) const;
  bool contains_subgroup(const PermutationGroup &h) const;

  /// Orbit of one point under the generators, in BFS discovery order.
  std::vector<int> orbit_of(int point) const;

  /// Orbit partition; cells ordered by their smallest point, points
  /// ascending within each cell.
  std::vector<std::vector<int>> orbits() const;

  /// Pointwise stabilizer of one point.
  PermutationGroup stabilizer(int point) const;

  /// Pointwise stabilizer of a sequence of points.
  PermutationGroup pointwise_stabilizer(const std::vector<int> &points) const;

  TransitivityProfile transitivity_profile() const;

  /// All |G| elements in lexicographic order of image arrays (so the
  /// identity is element 0). Throws CapExceeded when |G| > cap.
  std::vector<Permutation> enumerate_elements(std::uint64_t cap = kDefaultElementCap) const;

  /// Streams every element exactly once in a deterministic (chain
  /// traversal) order. Stops early if the visitor returns false.
  void for_each_element(const std::function<bool(const Permutation &)> &visit) const;

  /// Base of the chain (built on demand).
  std::vector<int> base() const;

  /// Serialization: "degree: d" header plus one generator per line.
  std::string to_string() const;
  static PermutationGroup parse(const std::string &text);

private:
  struct Level {
    int base_point;
    std::vector<Permutation> gens; // strong generators fixing earlier base points
    std::vector<int> orbit;        // discovery order
    std::vector<int> tidx;         // point -> transversal index, -1 outside orbit
    std::vector<Permutation> trans;     // base^trans[k] = orbit[k]
    std::vector<Permutation> trans_inv;
  };

  void ensure_chain() const;
  void recompute_orbit(Level &level) const;
  void schreier_sims(int k) const;
  // Sift through levels from..end; returns residue and the level reached.
  std::pair<Permutation, int> strip(Permutation g, int from) const;

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<int> base_hint_;
  mutable std::vector<Level> chain_;
  mutable bool chain_built_ = false;
};

/// Largest subgroup K of G with H^k = H for all k in K. H must be a
/// subgroup of G (membership-checked). Brute force over the elements of
/// G; throws SearchBudgetExceeded when |G| > budget.
PermutationGroup normalizer_in(const PermutationGroup &g, const PermutationGroup &h,
                               std::uint64_t budget = kDefaultElementCap);

/// Elements of G commuting with every generator of H.
PermutationGroup centralizer_in(const PermutationGroup &g, const PermutationGroup &h,
                                std::uint64_t budget = kDefaultElementCap);

/// Exhaustive closure of a generator set, as an explicit element list in
/// BFS discovery order. Throws CapExceeded past the cap. Test oracle and
/// small-subgroup workhorse.
std::vector<Permutation> closure_elements(const std::vector<Permutation> &gens,
                                          std::uint64_t cap = kDefaultElementCap);

} // namespace cgt
