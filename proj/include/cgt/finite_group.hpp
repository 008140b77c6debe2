#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cgt/perm_group.hpp"

namespace cgt {

/// Abstract finite group on element ids 0..order-1 with id 0 the
/// identity. Multiplication is a stored callable, so large groups (a
/// few hundred thousand elements) carry no table. Immutable.
class FiniteGroup {
public:
  using Mul = std::function<int(int, int)>;
  using Label = std::function<std::string(int)>;

  FiniteGroup(std::uint64_t order, Mul mul, std::vector<int> generators,
              Label label = nullptr);

  std::uint64_t order() const { return n_; }
  int size() const { return static_cast<int>(n_); }

  int mul(int a, int b) const { return mul_(a, b); }
  int inverse(int a) const;
  int pow(int g, long long e) const;
  int conj(int g, int by) const; // by^-1 * g * by
  int comm(int a, int b) const;  // a^-1 b^-1 a b

  std::uint64_t element_order(int g) const;

  const std::vector<int> &generators() const { return gens_; }
  std::string label(int g) const;

  bool is_abelian() const;
  bool is_cyclic() const;
  std::uint64_t exponent() const;

  /// p such that |G| = p^k, if any.
  std::optional<int> p_group_prime() const;

  /// Subgroup generated by the given elements, as a sorted id list.
  std::vector<int> generated_subgroup(const std::vector<int> &seed) const;

  /// Smallest normal subgroup containing the seed.
  std::vector<int> normal_closure(const std::vector<int> &seed) const;

  bool is_subgroup(const std::vector<int> &elems) const;
  bool is_normal(const std::vector<int> &sub) const;

  std::vector<int> cyclic_subgroup(int g) const;

  std::vector<int> derived_subgroup() const;
  std::vector<int> center() const;
  std::vector<int> frattini_subgroup() const; // p-groups only

private:
  std::uint64_t n_;
  Mul mul_;
  std::vector<int> gens_;
  Label label_;
  mutable std::vector<int> inv_; // lazy, -1 when unknown
};

// ---- presentations --------------------------------------------------------

/// Parameters of the two-generator metacyclic p-group presentation
///   a^(p^(r+s+u)) = 1, b^(p^(r+s+t)) = a^(p^(r+s)), b^-1 a b = a^(1+p^r)
struct XuZhangParams {
  int p;
  int r, s, t, u;
  std::uint64_t group_order() const;
};

/// Default construction cap for presentation-backed groups.
inline constexpr std::uint64_t kGroupElementCap = 6561; // 3^8

/// Metacyclic p-group from the presentation above. Normal forms a^i b^j
/// with i in Z_{p^{r+s+u}}, j in Z_{p^{r+s+t}}; id = i * p^{r+s+t} + j.
/// Generators: {a, b}. Non-split exactly when s*t*u != 0.
FiniteGroup xu_zhang_group(const XuZhangParams &params,
                           std::uint64_t cap = kGroupElementCap);

/// Split metacyclic group C_M : C_N with relation tau^-1 sigma tau =
/// sigma^e. Normal forms sigma^i tau^j; id = i * N + j. Generators:
/// {sigma, tau}. Requires e a unit mod M with e^N = 1 (mod M).
FiniteGroup split_metacyclic_group(std::uint64_t m_order, std::uint64_t n_order,
                                   std::uint64_t e,
                                   std::uint64_t cap = kGroupElementCap);

/// The group < x, y, z | x^(p^(m-1)) = y^(p^n) = z^p = 1, y^-1 x y = x^lambda,
/// z central >. Normal forms y^i x^j z^k; id = (i * p^(m-1) + j) * p + k.
/// Generators: {x, y, z}. Requires m >= n+2 >= 3 and lambda of
/// multiplicative order p^(n+1) mod p^m.
FiniteGroup mp_cayley_group(int p, int m, int n, std::uint64_t lambda,
                            std::uint64_t cap = kGroupElementCap);

FiniteGroup cyclic_group(std::uint64_t n);

/// Abstract group from an explicit permutation group; element ids follow
/// the lexicographic order of enumerate_elements (identity = 0).
FiniteGroup group_from_permutations(const PermutationGroup &g,
                                    std::uint64_t cap = kDefaultElementCap);

// ---- structure operations -------------------------------------------------

/// Right regular representation: R(g): x -> x*g on element ids.
PermutationGroup regular_representation(const FiniteGroup &g,
                                        std::uint64_t cap = kDefaultElementCap);

/// Coset group G/N; requires N normal. Also returns the projection map
/// element id -> coset id.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<int> projection;
};
QuotientGroup quotient_group(const FiniteGroup &g, const std::vector<int> &n);

/// Omega_s: subgroup generated by all elements of order dividing p^s.
/// Requires |G| a power of p.
std::vector<int> omega_s(const FiniteGroup &g, int p, int s);

struct StructureReport {
  std::uint64_t order;
  std::uint64_t exponent;
  std::vector<int> derived_subgroup;
  std::vector<int> center;
  std::vector<int> frattini;
  bool is_abelian;
  bool is_cyclic;
};
StructureReport structure_report(const FiniteGroup &g);

/// (xy)^(p^k) = x^(p^k) y^(p^k) for all pairs; exhaustive when |G| <= 729,
/// a seeded random sample of pairs above that.
bool is_pk_abelian(const FiniteGroup &g, int p, int k);

struct MetacyclicWitness {
  bool answer;
  std::vector<int> normal_subgroup;          // cyclic normal N, when answer
  std::optional<int> complement_generator;   // split case only
};

/// Cyclic normal N with G/N cyclic, searched over all cyclic subgroups
/// in decreasing order (first witness returned).
MetacyclicWitness is_metacyclic(const FiniteGroup &g);

/// Cyclic normal N plus a cyclic complement H (N and H intersect
/// trivially, |N||H| = |G|).
MetacyclicWitness is_split_metacyclic(const FiniteGroup &g);

struct OvergroupWitness {
  int tau_prime;
  bool complements_sigma; // <sigma> and <tau'> intersect trivially
};

/// In a split metacyclic p-group G = <sigma> : (complement), for g != 1
/// with <g> meeting <sigma> trivially, finds tau' with o(tau') equal to
/// |G|/o(sigma) and g in <tau'>. Existence is guaranteed under the
/// preconditions; the complement flag is reported, not required.
std::optional<OvergroupWitness> find_order_pn_overgroup(const FiniteGroup &g,
                                                        int sigma, int elem);

/// Explicit isomorphism (element id map) between two abstract groups, or
/// nullopt after exhausting the generator-image search. Intended for
/// small groups (a few hundred elements).
std::optional<std::vector<int>> group_isomorphism(const FiniteGroup &g1,
                                                  const FiniteGroup &g2);

/// Cheap isomorphism-invariant screen: (order, exponent, |G'|, |Z|,
/// |Omega_1| when a p-group, multiset of element orders).
std::vector<std::uint64_t> isomorphism_invariant_vector(const FiniteGroup &g);

} // namespace cgt
