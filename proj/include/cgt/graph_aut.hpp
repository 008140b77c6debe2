#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cgt/graph.hpp"
#include "cgt/perm_group.hpp"

namespace cgt {

inline constexpr int kDefaultAutDegreeBound = 512;
inline constexpr std::uint64_t kDefaultSearchNodes = 50'000'000;

/// Full automorphism group via color refinement + individualization
/// backtracking, built level by level along the point stabilizer chain
/// 0, 1, 2, ... so no element enumeration is ever needed. Every
/// returned generator is re-verified against the edge set.
PermutationGroup automorphism_group(const Graph &g,
                                    int degree_bound = kDefaultAutDegreeBound,
                                    std::uint64_t max_nodes = kDefaultSearchNodes);

/// Vertex bijection preserving adjacency both ways, or nullopt after the
/// refined search tree is exhausted.
std::optional<Permutation> are_isomorphic(const Graph &g1, const Graph &g2,
                                          int degree_bound = kDefaultAutDegreeBound,
                                          std::uint64_t max_nodes = kDefaultSearchNodes);

/// Color-respecting variant: a bijection is only admitted when it maps
/// each vertex to one of equal initial color.
std::optional<Permutation>
colored_isomorphism(const Graph &g1, const std::vector<int> &colors1,
                    const Graph &g2, const std::vector<int> &colors2,
                    std::uint64_t max_nodes = kDefaultSearchNodes);

/// Block-of-imprimitivity test: nontrivial (1 < |cell| < n) and every
/// group element maps the cell to itself or off itself entirely.
bool is_block(const PermutationGroup &g, const std::vector<int> &cell);

struct BlockSystem {
  std::vector<std::vector<int>> cells;
  int cell_size;
};

/// Minimal block system whose block contains {alpha, beta} (union-find
/// refinement); requires a transitive group.
BlockSystem block_system_from_pair(const PermutationGroup &g, int alpha, int beta);

} // namespace cgt
