#include "tap/gen.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "tap/decompose.hpp"
#include "tap/error.hpp"

namespace tap {

TapInstance tight_example() {
  TapInstance inst;
  inst.name = "tight-example";
  inst.vertices = {"r", "a1", "a2", "v", "b1", "b2", "b3", "b4"};
  inst.root = "r";
  inst.tree_edges = {{"r", "a1"}, {"r", "a2"}, {"r", "v"}, {"v", "b1"},
                     {"v", "b2"}, {"v", "b3"}, {"v", "b4"}};
  inst.links = {
      {"l1", "a1", "a2", Rational(1)}, {"l2", "b4", "a1", Rational(1)},
      {"l3", "b2", "a2", Rational(1)}, {"l4", "b1", "a2", Rational(1)},
      {"l5", "b1", "b2", Rational(1)}, {"l6", "b3", "b4", Rational(0)},
  };
  return inst;
}

TapInstance worst_case_instance(int k) {
  std::vector<Rational> costs = worst_case_costs(k);
  TapInstance inst;
  inst.name = "worst-case-" + std::to_string(k);
  auto spine = [](int i) { return "c" + std::to_string(i); };
  auto left = [](int i) { return "x" + std::to_string(i); };
  auto right = [](int i) { return "y" + std::to_string(i); };
  inst.root = spine(1);
  for (int i = 1; i <= k; ++i) {
    inst.vertices.push_back(spine(i));
    inst.vertices.push_back(left(i));
    inst.vertices.push_back(right(i));
    if (i > 1) inst.tree_edges.push_back({spine(i - 1), spine(i)});
    inst.tree_edges.push_back({spine(i), left(i)});
    inst.tree_edges.push_back({spine(i), right(i)});
  }
  // One twin link per level (lca at level i) plus ladder links covering the
  // spine, all priced by the equalizing vector.
  for (int i = 1; i <= k; ++i) {
    inst.links.push_back({"t" + std::to_string(i), left(i), right(i), costs[i - 1]});
    if (i < k) {
      inst.links.push_back({"d" + std::to_string(i), left(i), left(i + 1), costs[i - 1]});
    }
  }
  return inst;
}

namespace {

// All randomness flows through this wrapper so generated instances are
// bit-identical across platforms for a fixed seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t next() { return engine_(); }

  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return next() < static_cast<uint64_t>(p * 18446744073709551616.0);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

TapInstance generate_instance(const GenParams& params) {
  if (params.levels < 1) throw Error(ErrorCode::ParseError, "levels must be >= 1");
  if (params.branching < 1) throw Error(ErrorCode::ParseError, "branching must be >= 1");
  if (params.cost_max < 0) throw Error(ErrorCode::ParseError, "cost-max must be >= 0");

  Rng rng(params.seed);
  TapInstance inst;
  std::ostringstream name;
  name << "gen-k" << params.levels << "-b" << params.branching << "-d" << params.link_density
       << "-M" << params.cost_max << "-s" << params.seed;
  inst.name = name.str();

  struct Node {
    int level;
    bool internal;
    bool spine;
  };
  std::vector<Node> nodes;
  auto vertex_name = [](int i) { return "n" + std::to_string(i); };
  inst.vertices.push_back(vertex_name(0));
  inst.root = vertex_name(0);
  nodes.push_back({1, true, true});

  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].internal) continue;
    if (nodes.size() > 4000) throw Error(ErrorCode::TooLarge, "generated tree too large");
    for (int c = 0; c < params.branching; ++c) {
      int child = static_cast<int>(nodes.size());
      bool can_be_internal = nodes[i].level + 1 <= params.levels;
      bool spine_child = nodes[i].spine && c == 0 && can_be_internal;
      bool internal = can_be_internal && (spine_child || rng.bernoulli(0.5));
      inst.vertices.push_back(vertex_name(child));
      inst.tree_edges.push_back({vertex_name(static_cast<int>(i)), vertex_name(child)});
      nodes.push_back({nodes[i].level + 1, internal, spine_child});
    }
  }

  std::vector<int> leaves;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (!nodes[i].internal) leaves.push_back(i);
  }

  int link_counter = 0;
  for (size_t i = 0; i < leaves.size(); ++i) {
    for (size_t j = i + 1; j < leaves.size(); ++j) {
      if (!rng.bernoulli(params.link_density)) continue;
      inst.links.push_back({"l" + std::to_string(link_counter++), vertex_name(leaves[i]),
                            vertex_name(leaves[j]),
                            Rational(rng.below(params.cost_max + 1))});
    }
  }

  // Repair pass: give every still-uncoverable edge a zero-cost leaf-to-leaf
  // covering link.
  TreeIndex idx = validate(inst);
  auto in_subtree = [&](int child_edge_vertex, int leaf) {
    return idx.is_ancestor(child_edge_vertex, leaf);
  };
  for (int e = 0; e < idx.edge_count(); ++e) {
    int child = idx.edge_child(e);
    bool covered = false;
    for (const auto& link : inst.links) {
      int u = idx.id_of(link.u);
      int v = idx.id_of(link.v);
      if (in_subtree(child, u) != in_subtree(child, v)) {
        covered = true;
        break;
      }
    }
    if (covered) continue;
    int inside = -1;
    int outside = -1;
    for (int leaf : leaves) {
      if (inside < 0 && in_subtree(child, leaf)) inside = leaf;
      if (outside < 0 && !in_subtree(child, leaf)) outside = leaf;
    }
    if (inside < 0 || outside < 0) {
      throw Error(ErrorCode::Infeasible, "cannot repair edge " + vertex_name(child));
    }
    inst.links.push_back({"l" + std::to_string(link_counter++), vertex_name(inside),
                          vertex_name(outside), Rational(0)});
  }
  return inst;
}

}  // namespace tap
