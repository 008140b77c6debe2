#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgt/finite_group.hpp"
#include "cgt/graph.hpp"
#include "cgt/graph_aut.hpp"
#include "cgt/perm_group.hpp"

namespace cgt {

/// Sylow p-subgroup by deterministic ascent: adjoin p-parts of
/// generators / conjugates while the closure stays a p-group; when the
/// ascent stalls and the ambient group is enumerable, finish by an exact
/// element sweep. Optional seed permutations (must be p-elements of a).
/// Throws SearchBudgetExceeded (reporting the achieved order) when the
/// full p-part cannot be certified.
PermutationGroup sylow_p_subgroup(const PermutationGroup &a, int p,
                                  const std::vector<Permutation> &seed = {},
                                  std::uint64_t enum_budget = kDefaultElementCap);

/// Statistics attached to every search answer: a negative is only
/// meaningful together with exhausted = true.
struct SearchStats {
  std::uint64_t nodes = 0;
  bool exhausted = false;
  std::string note;
};

enum class RegularPredicate { Any, Metacyclic, Cyclic };

struct RegularSearchResult {
  std::optional<PermutationGroup> witness; // first witness, deterministic
  SearchStats stats;
};

/// Regular (= transitive with trivial stabilizers, so order equals the
/// degree) subgroups of A satisfying the predicate. For prime-power
/// degree the search runs inside one Sylow p-subgroup (sound: regular
/// p-subgroups are conjugate into any Sylow subgroup, and conjugation
/// preserves regularity and the predicates); otherwise A itself must be
/// enumerable. Negative answers carry an exhaustion certificate.
RegularSearchResult regular_subgroup_search(const PermutationGroup &a,
                                            RegularPredicate predicate,
                                            std::uint64_t max_nodes = kDefaultSearchNodes);

struct TransitiveMetacyclicWitness {
  PermutationGroup subgroup;
  bool split;
  /// For split witnesses: (sigma, h) with sigma generating the cyclic
  /// normal subgroup and h generating a cyclic complement.
  std::optional<std::pair<Permutation, Permutation>> sigma_tau;
};

struct TransitiveMetacyclicOutcome {
  std::optional<TransitiveMetacyclicWitness> witness;
  SearchStats stats;
};

/// Transitive metacyclic subgroup of a Sylow p-subgroup of A, smallest
/// order first (pair sweep over cyclic cores up to Sylow conjugacy).
/// With require_split, only split witnesses are accepted.
TransitiveMetacyclicOutcome
transitive_metacyclic_witness(const PermutationGroup &a, int p,
                              bool require_split = false,
                              std::uint64_t max_nodes = kDefaultSearchNodes);

/// Definitional metacirculant test: sigma, tau are automorphisms of g,
/// <sigma> is semiregular, tau normalizes <sigma>, tau cyclically
/// permutes the m orbits of <sigma>, and tau's cycle decomposition
/// contains an m-cycle.
bool is_metacirculant_definitional(const Graph &g, const Permutation &sigma,
                                   const Permutation &tau);

struct DefinitionalSearchOutcome {
  std::optional<std::pair<Permutation, Permutation>> pair;
  SearchStats stats;
};

/// Direct sweep for a definitional (sigma, tau) pair inside the given
/// subgroup of Aut(g) (cyclic cores up to conjugacy).
DefinitionalSearchOutcome
metacirculant_pair_search(const Graph &g, const PermutationGroup &sylow,
                          std::uint64_t max_nodes = kDefaultSearchNodes);

/// Constructive route from a split transitive metacyclic subgroup m of
/// Aut(g) to a definitional (sigma, tau) pair: sigma generates the
/// cyclic normal subgroup; tau is recovered through a cyclic overgroup
/// of a point stabilizer generator, then verified definitionally.
std::optional<std::pair<Permutation, Permutation>>
definitional_pair_from_split(const Graph &g, const PermutationGroup &m);

struct Flag {
  enum State { No = 0, Yes = 1, Inconclusive = 2 };
  State state = No;
  std::string detail;
  bool yes() const { return state == Yes; }
};

struct ClassificationReport {
  std::uint64_t order = 0;
  int prime = 0;
  Flag vertex_transitive, cayley, weak_metacirculant, split_weak_metacirculant,
      metacirculant, weak_metacirculant_cayley;
  std::vector<Permutation> cayley_witness;    // generators of a regular subgroup
  std::vector<Permutation> metacyclic_witness; // transitive metacyclic subgroup
  std::optional<std::pair<Permutation, Permutation>> sigma_tau;
  std::string to_json() const; // stable key order
};

/// All six flags with witnesses / exhaustion certificates. Requires
/// either |V| a power of the odd prime p (scalable Sylow-restricted
/// route) or an enumerable automorphism group (brute route).
ClassificationReport classify(const Graph &g, int p,
                              int aut_bound = kDefaultAutDegreeBound,
                              std::uint64_t max_nodes = kDefaultSearchNodes);

struct DistanceClaimReport {
  bool holds = false;
  std::uint64_t pairs_checked = 0;
  std::string violation;
};

/// In every layer subgraph of MP_{p^m, p^n, p^(m-1), lambda}: the
/// distance from (0,i) to (j,i) equals min{t, p^(m-1) - t} where
/// t * lambda^i = j (mod p^(m-1)), for all j not divisible by p^(m-1).
DistanceClaimReport verify_mp_distance_claim(int p, int m, int n,
                                             std::uint64_t lambda);

struct CayleyIsoReport {
  bool holds = false;
  std::vector<int> bijection; // graph vertex map, Cayley -> MP
  std::uint64_t edges_checked = 0;
  std::string violation;
};

/// The explicit map y^i x^j z^k -> (j + k p^(m-1) mod p^m, i) from the
/// Cayley graph of the three-generator group (connection set
/// {x, xz, ..., xz^(p-1), y} closed under inverses) onto
/// MP_{p^m, p^n, p^(m-1), lambda}, verified edge by edge in both
/// directions.
CayleyIsoReport verify_mp_cayley_isomorphism(int p, int m, int n,
                                             std::uint64_t lambda);

struct ArcTransitivityReport {
  bool inner_arcs_one_orbit = false;
  std::uint64_t inner_arc_orbits = 0;
  std::uint64_t all_arc_orbits = 0;
};

/// Aut orbit structure on arcs of MP_{p^m, p^n, p^(m-1), lambda}: the
/// arcs of intra-layer edges form a single orbit; spoke arcs lie apart.
ArcTransitivityReport
inner_arc_transitivity_check(int p, int m, int n, std::uint64_t lambda,
                             int aut_bound = kDefaultAutDegreeBound);

/// Connection set S u S^-1 with S = {x, xz, ..., xz^(p-1), y} for the
/// three-generator group; shared by the Cayley-side constructions.
std::vector<int> mp_cayley_connection_set(const FiniteGroup &g, int p);

} // namespace cgt
