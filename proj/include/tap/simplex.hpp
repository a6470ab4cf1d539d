#pragma once

#include <vector>

#include "tap/rational.hpp"

namespace tap {

enum class RowSense { Ge, Eq };

// Dense standard-form LP: minimize c.x subject to the rows and x >= 0.
struct StandardLp {
  int num_vars = 0;
  std::vector<Rational> objective;
  std::vector<std::vector<Rational>> rows;  // each of size num_vars
  std::vector<RowSense> senses;
  std::vector<Rational> rhs;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded };

struct StandardLpResult {
  SolveStatus status = SolveStatus::Infeasible;
  std::vector<Rational> x;              // basic (vertex) solution when Optimal
  Rational objective_value = 0;
  std::vector<Rational> reduced_costs;  // per structural variable, when Optimal
};

// Two-phase primal simplex with Bland's rule; fully deterministic for a fixed
// column order and exact over the rationals.
StandardLpResult solve_standard_lp(const StandardLp& lp);

}  // namespace tap
