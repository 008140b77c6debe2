#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/analysis.hpp"
#include "cgt/graph.hpp"

namespace cgt {

/// Budgets and the seed shared by every scenario run; defaults match the
/// CLI flag defaults.
struct ScenarioOptions {
  std::uint64_t max_group_order = kDefaultElementCap;
  int max_aut_degree = kDefaultAutDegreeBound;
  std::uint64_t search_nodes = kDefaultSearchNodes;
  std::uint64_t seed = 0;
};

/// One expected/observed comparison inside a scenario. `tag` records how
/// the expected value was obtained: "stated" (claimed result being
/// verified), "derived" (independent oracle), or "direct" (definition
/// unfolded on the instance).
struct ScenarioCheck {
  std::string name;
  std::string expected;
  std::string observed;
  std::string tag;
  bool pass = false;
};

struct ScenarioResult {
  enum class Status { Pass, Fail, Inconclusive };

  std::string id;
  Status status = Status::Fail;
  std::vector<ScenarioCheck> checks;
  double seconds = 0.0;
  std::string note; // budget message when inconclusive

  bool passed() const { return status == Status::Pass; }
};

/// Valid scenario ids, in canonical execution order.
const std::vector<std::string> &scenario_ids();

/// Runs one scenario; throws std::invalid_argument for an unknown id.
/// A pass requires every check to have observed == expected; status
/// inconclusive arises only from an exhausted search budget.
ScenarioResult run_scenario(const std::string &id, const ScenarioOptions &opt = {});

/// Multi-line human-readable block for one result.
std::string format_scenario(const ScenarioResult &r);

/// Fixed-width summary table plus a pass-count line.
std::string scenario_summary_table(const std::vector<ScenarioResult> &rs);

// ---- shared corpus --------------------------------------------------------

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// Connected Cayley graphs of the three metacyclic groups of order 27
/// with assorted connection sets (12 graphs).
std::vector<NamedGraph> order27_corpus();

/// Seeded random connected Cayley graphs of C27 : C3 (order 81).
std::vector<NamedGraph> random_c27c3_corpus(std::uint64_t seed, int count);

/// The order-81, valency-8 multilayer graph MP_{27,3,9,4}.
Graph flagship_graph();

} // namespace cgt
