#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tap/instance.hpp"
#include "tap/rational.hpp"
#include "tap/simplex.hpp"

namespace tap {

// One ">=" row over named variables.
struct LpRow {
  std::map<std::string, Rational> coeffs;
  Rational rhs;
};

// Covering LP: minimize objective subject to rows and x >= 0, all rational.
struct LpProblem {
  std::vector<std::string> variables;
  std::map<std::string, Rational> objective;
  std::vector<LpRow> rows;
};

struct LpSolution {
  SolveStatus status = SolveStatus::Infeasible;
  std::map<std::string, Rational> values;
  Rational objective_value = 0;
};

// Exact optimal vertex solution (or Infeasible/Unbounded), deterministic for
// the given variable order.
LpSolution solve_lp(const LpProblem& problem);

// One row x(cov(e)) >= 1 per tree edge; throws UncoverableEdge when some edge
// has no covering link.
LpProblem build_edge_lp(const TapInstance& inst);

// A vertex set with odd tree boundary. Canonical form excludes the root, so a
// set and its complement describe the same cut.
struct OddCut {
  std::vector<std::string> subset;                              // sorted
  std::vector<std::pair<std::string, std::string>> tree_boundary;  // (parent, child)
  std::vector<std::string> link_boundary;                       // sorted link ids
};

OddCut make_odd_cut(const TapInstance& inst, const TreeIndex& idx,
                    const std::vector<std::string>& subset);

// x(delta(S) cap L) + sum_{e in delta(S) cap T} x(cov(e)) >= |delta(S) cap T| + 1.
// Every variable coefficient comes out even; that parity is asserted.
LpRow odd_constraint(const TapInstance& inst, const TreeIndex& idx, const OddCut& cut);

// Exhaustively searches all canonical vertex subsets for a most-violated odd
// cut under x (ties: lexicographically smallest subset). Returns nothing when
// every odd-cut constraint holds.
std::optional<OddCut> separate_odd(const TapInstance& inst, const TreeIndex& idx,
                                   const std::map<std::string, Rational>& x);

struct OddLpResult {
  LpSolution solution;
  std::vector<OddCut> cuts;  // cuts active in the final relaxation
};

// Cutting-plane loop over the edge rows: solve, separate, add, repeat. The
// returned solution is optimal for the full odd-cut relaxation and verified
// by one final separation pass.
OddLpResult solve_odd_lp(const TapInstance& inst);

struct PointCheck {
  bool feasible = false;
  std::optional<OddCut> violated_cut;
  std::optional<std::string> negative_link;
};

PointCheck check_point_odd_feasible(const TapInstance& inst,
                                    const std::map<std::string, Rational>& point);

struct ExtremePointCheck {
  bool is_extreme = false;
  int rank = 0;
  int link_count = 0;
};

// Rank of the constraints tight at the point (nonnegativity, edge rows, odd
// cuts); the point is a vertex iff the rank reaches the number of links.
ExtremePointCheck extreme_point_rank(const TapInstance& inst,
                                     const std::map<std::string, Rational>& point);

bool is_extreme_point(const TapInstance& inst, const std::map<std::string, Rational>& point);

// Vertex-count cap for exhaustive subset work; TAP_SUBSET_LIMIT overrides.
int subset_vertex_limit();

}  // namespace tap
