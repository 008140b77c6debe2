#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgt/analysis.hpp"
#include "cgt/errors.hpp"
#include "cgt/finite_group.hpp"
#include "cgt/graph.hpp"
#include "cgt/graph_aut.hpp"
#include "cgt/scenarios.hpp"

namespace {

using cgt::FiniteGroup;
using cgt::Graph;

// exit codes: 0 completed, 1 usage/input error, 2 inconclusive search
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInconclusive = 2;

std::vector<int> parse_int_list(const std::string &text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(std::stoi(item));
  return out;
}

/// Group specs: cyclic:N | split:M,N,E | xz:P,R,S,T,U | mp:P,M,N,LAMBDA
FiniteGroup parse_group(const std::string &spec, std::uint64_t cap) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("group spec needs the form kind:params");
  std::string kind = spec.substr(0, colon);
  std::vector<int> a = parse_int_list(spec.substr(colon + 1));
  if (kind == "cyclic" && a.size() == 1)
    return cgt::cyclic_group(a[0]);
  if (kind == "split" && a.size() == 3)
    return cgt::split_metacyclic_group(a[0], a[1], a[2], cap);
  if (kind == "xz" && a.size() == 5)
    return cgt::xu_zhang_group({a[0], a[1], a[2], a[3], a[4]}, cap);
  if (kind == "mp" && a.size() == 4)
    return cgt::mp_cayley_group(a[0], a[1], a[2], a[3], cap);
  throw std::invalid_argument(
      "unknown group spec '" + spec +
      "' (expected cyclic:N, split:M,N,E, xz:P,R,S,T,U or mp:P,M,N,LAMBDA)");
}

Graph read_graph_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return Graph::from_edge_list(buf.str());
}

void emit(const std::string &text, const std::string &output) {
  if (output.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out)
    throw std::invalid_argument("cannot write " + output);
  out << text;
}

std::string render(const Graph &g, const std::string &format) {
  if (format == "edgelist")
    return g.to_edge_list();
  if (format == "dot")
    return g.to_dot();
  if (format == "json")
    return g.to_json();
  throw std::invalid_argument("unknown format '" + format +
                              "' (edgelist, dot or json)");
}

bool is_power_of(std::uint64_t n, int p) {
  if (n == 0)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

struct Budgets {
  std::uint64_t max_group_order = cgt::kDefaultElementCap;
  int max_aut_degree = cgt::kDefaultAutDegreeBound;
  std::uint64_t search_nodes = cgt::kDefaultSearchNodes;
  std::uint64_t seed = 0;
  int threads = 1;

  void attach(CLI::App *cmd) {
    cmd->add_option("--max-group-order", max_group_order,
                    "element cap for group enumeration (default 2000000)");
    cmd->add_option("--max-aut-degree", max_aut_degree,
                    "degree bound for automorphism search (default 512)");
    cmd->add_option("--search-nodes", search_nodes,
                    "node budget for subgroup searches (default 5e7)");
    cmd->add_option("--seed", seed, "seed for randomized sweeps (default 0)");
    cmd->add_option("--threads", threads,
                    "parallel scenario execution; output is identical to a "
                    "single-threaded run");
  }
};

int cmd_construct(const std::string &family, int n, int t, int m, int s,
                  const std::string &conn, const std::string &group_spec,
                  const std::string &hs, const std::string &ds, int arc,
                  const std::string &lex_a, const std::string &lex_b,
                  const std::string &format, const std::string &output,
                  std::uint64_t cap) {
  Graph g;
  if (family == "circulant") {
    g = cgt::circulant(n, parse_int_list(conn));
  } else if (family == "cayley") {
    FiniteGroup grp = parse_group(group_spec, cap);
    g = cgt::cayley_graph(grp, parse_int_list(conn));
  } else if (family == "coset") {
    FiniteGroup grp = parse_group(group_spec, cap);
    std::vector<int> h = parse_int_list(hs);
    if (arc >= 0)
      g = cgt::coset_graph_from_arc(grp, h, arc);
    else
      g = cgt::coset_graph(grp, h, parse_int_list(ds));
  } else if (family == "petersen") {
    g = cgt::generalized_petersen(n, t);
  } else if (family == "mp") {
    cgt::MPParams params{m, n, s, t};
    params.validate();
    g = cgt::multilayer_generalized_petersen(params);
  } else if (family == "lex") {
    g = cgt::lexicographic_product(read_graph_file(lex_a),
                                   read_graph_file(lex_b));
  } else {
    throw std::invalid_argument(
        "unknown family '" + family +
        "' (circulant, cayley, coset, petersen, mp or lex)");
  }
  emit(render(g, format), output);
  return kOk;
}

int cmd_classify(const std::string &path, int p, const Budgets &b,
                 const std::string &output) {
  Graph g = read_graph_file(path);
  if (p < 2)
    throw std::invalid_argument("--p must be a prime");
  if (!is_power_of(g.vertex_count(), p))
    throw std::invalid_argument("graph order " +
                                std::to_string(g.vertex_count()) +
                                " is not a power of " + std::to_string(p));
  cgt::ClassificationReport rep =
      cgt::classify(g, p, b.max_aut_degree, b.search_nodes);
  emit(rep.to_json() + "\n", output);
  bool inconclusive = false;
  for (const cgt::Flag *f :
       {&rep.vertex_transitive, &rep.cayley, &rep.weak_metacirculant,
        &rep.split_weak_metacirculant, &rep.metacirculant,
        &rep.weak_metacirculant_cayley})
    inconclusive = inconclusive || f->state == cgt::Flag::Inconclusive;
  return inconclusive ? kInconclusive : kOk;
}

int cmd_group(const std::string &spec, std::uint64_t cap,
              const std::string &output) {
  FiniteGroup g = parse_group(spec, cap);
  cgt::StructureReport r = cgt::structure_report(g);
  nlohmann::ordered_json j;
  j["order"] = r.order;
  j["exponent"] = r.exponent;
  j["abelian"] = r.is_abelian;
  j["cyclic"] = r.is_cyclic;
  j["derived_subgroup_order"] = r.derived_subgroup.size();
  j["center_order"] = r.center.size();
  if (g.p_group_prime())
    j["frattini_order"] = r.frattini.size();
  else
    j["frattini_order"] = nullptr;
  if (g.order() <= 10000) {
    j["metacyclic"] = cgt::is_metacyclic(g).answer;
    j["split_metacyclic"] = cgt::is_split_metacyclic(g).answer;
  } else {
    j["metacyclic"] = nullptr;
    j["split_metacyclic"] = nullptr;
  }
  emit(j.dump(2) + "\n", output);
  return kOk;
}

int cmd_verify_paper(std::vector<std::string> ids, const Budgets &b) {
  const auto &valid = cgt::scenario_ids();
  if (ids.size() == 1 && ids[0] == "all")
    ids = valid;
  for (const auto &id : ids)
    if (std::find(valid.begin(), valid.end(), id) == valid.end()) {
      std::fprintf(stderr, "unknown scenario id: %s\nvalid ids:\n", id.c_str());
      for (const auto &v : valid)
        std::fprintf(stderr, "  %s\n", v.c_str());
      return kUsage;
    }

  cgt::ScenarioOptions opt;
  opt.max_group_order = b.max_group_order;
  opt.max_aut_degree = b.max_aut_degree;
  opt.search_nodes = b.search_nodes;
  opt.seed = b.seed;

  std::vector<cgt::ScenarioResult> results(ids.size());
  if (b.threads > 1) {
    std::vector<std::future<cgt::ScenarioResult>> futs;
    for (const auto &id : ids)
      futs.push_back(std::async(std::launch::async,
                                [&opt, id] { return cgt::run_scenario(id, opt); }));
    for (std::size_t i = 0; i < futs.size(); ++i)
      results[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < ids.size(); ++i)
      results[i] = cgt::run_scenario(ids[i], opt);
  }

  bool inconclusive = false;
  for (const auto &r : results) {
    std::fputs(cgt::format_scenario(r).c_str(), stdout);
    inconclusive =
        inconclusive || r.status == cgt::ScenarioResult::Status::Inconclusive;
  }
  std::fputs(cgt::scenario_summary_table(results).c_str(), stdout);
  return inconclusive ? kInconclusive : kOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"construction, classification and verification toolkit for "
               "metacirculant graphs of odd prime power order"};
  app.require_subcommand(1);

  // construct
  auto *construct = app.add_subcommand(
      "construct", "build a graph and write it in edgelist/dot/json form");
  std::string family, conn, group_spec, hs, ds, lex_a, lex_b;
  std::string format = "edgelist", output;
  int n = 0, t = 0, m = 0, s = 0, arc = -1;
  std::uint64_t cap = cgt::kDefaultElementCap;
  construct->add_option("family", family,
                        "circulant | cayley | coset | petersen | mp | lex")
      ->required();
  construct->add_option("--n", n, "order / layer count, family-dependent");
  construct->add_option("--t", t, "step / twist parameter");
  construct->add_option("--m", m, "layer size (mp)");
  construct->add_option("--s", s, "inner step modulus (mp)");
  construct->add_option("--conn", conn, "comma-separated connection set");
  construct->add_option("--group", group_spec,
                        "group spec (cyclic:N, split:M,N,E, xz:P,R,S,T,U, "
                        "mp:P,M,N,LAMBDA)");
  construct->add_option("--subgroup", hs, "subgroup element ids (coset)");
  construct->add_option("--dcosets", ds,
                        "double-coset union element ids (coset)");
  construct->add_option("--arc", arc, "single arc element g (coset)");
  construct->add_option("--a", lex_a, "left factor graph file (lex)");
  construct->add_option("--b", lex_b, "right factor graph file (lex)");
  construct->add_option("--format", format, "edgelist | dot | json");
  construct->add_option("--output", output, "output file (default stdout)");
  construct->add_option("--max-group-order", cap, "group element cap");

  // classify
  auto *classify = app.add_subcommand(
      "classify", "six-flag classification report for a graph file");
  std::string graph_file;
  int p = 0;
  Budgets cb;
  classify->add_option("file", graph_file, "edge-list graph file")->required();
  classify->add_option("--p", p, "odd prime with |V| a power of p")->required();
  cb.attach(classify);
  classify->add_option("--output", output, "output file (default stdout)");

  // group
  auto *group = app.add_subcommand("group",
                                   "structure report for a presented group");
  std::string gspec;
  group->add_option("spec", gspec, "group spec")->required();
  group->add_option("--max-group-order", cap, "group element cap");
  group->add_option("--output", output, "output file (default stdout)");

  // verify-paper
  auto *verify = app.add_subcommand(
      "verify-paper", "run verification scenarios ('all' or explicit ids)");
  std::vector<std::string> ids;
  Budgets vb;
  verify->add_option("ids", ids, "scenario ids, or 'all'")->required();
  vb.attach(verify);

  // export-dot
  auto *exportdot =
      app.add_subcommand("export-dot", "convert an edge-list file to DOT");
  std::string in_file;
  exportdot->add_option("file", in_file, "edge-list graph file")->required();
  exportdot->add_option("--output", output, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (construct->parsed())
      return cmd_construct(family, n, t, m, s, conn, group_spec, hs, ds, arc,
                           lex_a, lex_b, format, output, cap);
    if (classify->parsed())
      return cmd_classify(graph_file, p, cb, output);
    if (group->parsed())
      return cmd_group(gspec, cap, output);
    if (verify->parsed())
      return cmd_verify_paper(ids, vb);
    if (exportdot->parsed()) {
      emit(read_graph_file(in_file).to_dot(), output);
      return kOk;
    }
  } catch (const cgt::SearchBudgetExceeded &e) {
    std::fprintf(stderr, "inconclusive: %s\n", e.what());
    return kInconclusive;
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
