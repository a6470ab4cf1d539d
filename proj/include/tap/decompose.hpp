#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tap/exact.hpp"
#include "tap/instance.hpp"
#include "tap/rational.hpp"

namespace tap {

// A copy of an original link produced by the level transformation; it keeps
// the original cost and remembers where it came from.
struct TransformedLink {
  std::string u;
  std::string v;
  Rational cost = 0;
  std::string origin;
};

// One star-shaped subinstance of a level candidate: for an internal node v at
// the chosen level, the subtree below v plus the edge to its parent; the
// residual instance collects every remaining tree edge and is rooted at the
// original root.
struct StarInstance {
  std::string center;
  std::vector<std::pair<std::string, std::string>> tree_edges;  // (parent, child)
  std::vector<TransformedLink> links;

  // Rooted at the center, with machine link ids ("t0", "t1", ...).
  TapInstance to_instance() const;
  static int link_ordinal(const std::string& id);
};

struct Candidate {
  int level = 0;
  std::set<std::string> link_ids;  // original link ids, deduplicated
  Rational cost = 0;
  struct PerStar {
    std::string center;
    std::vector<TransformedLink> chosen;
  };
  std::vector<PerStar> per_star;
};

struct ApproxResult {
  Candidate best;
  std::map<int, Rational> all_costs;
  Rational ratio_bound = 1;
  int k = 0;
};

// Splits a leaf-to-leaf instance into the level-l star-shaped subinstances.
// Their tree-edge sets partition E(T); every transformed link lands in the
// unique subinstance containing its covered path.
std::vector<StarInstance> build_level_candidate(const TapInstance& inst, const TreeIndex& idx,
                                                int level);

// Solves each subinstance exactly and maps the union back to original links.
Candidate solve_level_candidate(const TapInstance& inst, const TreeIndex& idx, int level);

// Applies the leaf-to-leaf reduction, solves all k level candidates, and
// returns the cheapest (ties toward the smaller level) with the certified
// ratio 2 - 1/2^(k-1).
ApproxResult approximate(const TapInstance& inst, bool parallel = false);

// Upper bound C_l on the level-l candidate given the per-level costs of any
// feasible solution; level_costs[i] is the cost of links with lca at level
// i + 1.
Rational candidate_cost_bound(int level, const std::vector<Rational>& level_costs);

// The equalizing cost vector: c_1 = 1 and c_l = 2^(l-2); it makes every C_l
// coincide.
std::vector<Rational> worst_case_costs(int k);

Rational ratio_bound(int k);  // 2 - 1/2^(k-1)

}  // namespace tap
