#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cgt {

/// A bijection on the points 0..degree()-1. Permutations act on the
/// right: x^p = p[x], and x^(pq) = (x^p)^q.
class Permutation {
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(int degree);

  /// From an image array; throws std::invalid_argument if it is not a
  /// bijection.
  explicit Permutation(std::vector<int> images);

  /// Builds a permutation of the given degree from disjoint cycles,
  /// e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(int degree,
                                 const std::vector<std::vector<int>> &cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator[](int point) const { return images_[point]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;

  /// Least moved point, or -1 for the identity.
  int smallest_moved_point() const;

  Permutation inverse() const;
  Permutation pow(long long e) const;

  /// Least k >= 1 with p^k = identity (lcm of cycle lengths).
  std::uint64_t order() const;

  /// Cycle lengths in the order the cycles are discovered from point 0,
  /// fixed points included.
  std::vector<int> cycle_lengths() const;

  /// True if all cycles have equal length (identity counts).
  bool has_uniform_cycles() const;

  /// One-line serialization "[i0,i1,...]".
  std::string to_string() const;
  static Permutation parse(const std::string &line);

  bool operator==(const Permutation &o) const { return images_ == o.images_; }
  bool operator!=(const Permutation &o) const { return images_ != o.images_; }
  bool operator<(const Permutation &o) const { return images_ < o.images_; }

private:
  std::vector<int> images_;
};

/// Left-to-right composition: (p*q)[i] = q[p[i]].
Permutation compose(const Permutation &p, const Permutation &q);

inline Permutation operator*(const Permutation &p, const Permutation &q) {
  return compose(p, q);
}

/// Conjugate p^q = q^-1 p q.
Permutation conjugate(const Permutation &p, const Permutation &q);

} // namespace cgt
