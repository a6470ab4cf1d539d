#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tap/instance.hpp"
#include "tap/rational.hpp"

namespace tap {

struct StarInstance;  // decompose.hpp

struct Solution {
  std::set<std::string> link_ids;
  Rational cost = 0;
};

// True iff every tree edge is covered by some member of the set.
bool is_feasible(const TapInstance& inst, const std::set<std::string>& link_ids);

struct ExactOptions {
  enum class Method { Auto, Exhaustive, BranchBound };
  Method method = Method::Auto;
  // Exhaustive enumeration refuses instances beyond this many links.
  int exhaustive_link_limit = 24;
};

// Minimum-cost feasible solution; ties resolved toward the lexicographically
// smallest link-id set. Auto runs full enumeration on small link sets and
// branch-and-bound with an exact edge-LP bound beyond that.
Solution solve_exact(const TapInstance& inst, const ExactOptions& options = {});

// All inclusion-minimal feasible link sets, each listed once, ordered by
// their sorted id sequences.
std::vector<Solution> enumerate_minimal_solutions(const TapInstance& inst);

// Exact solve of a star-shaped subinstance; rejects instances whose links are
// not all cross or up relative to the center.
Solution solve_star_exact(const StarInstance& star);

struct MembershipResult {
  bool member = false;
  // Weights in (0,1] summing to one whose incidence vectors reproduce the
  // queried point coordinate-exactly.
  std::vector<std::pair<Solution, Rational>> weights;
};

// Decides membership of the point in the convex hull of incidence vectors of
// feasible solutions, by exact LP over all feasible subsets of the point's
// support.
MembershipResult tap_polytope_membership(const TapInstance& inst,
                                         const std::map<std::string, Rational>& point);

}  // namespace tap
