#include "tap/simplex.hpp"

#include <stdexcept>

#include "tap/error.hpp"

namespace tap {

namespace {

// Tableau layout: columns [structural | surplus | artificial], one extra rhs
// column at the end. Row 0..m-1 are constraints, basis_[i] is the variable
// occupying row i. The objective row is kept separately as reduced costs plus
// the negated objective value.
class Tableau {
 public:
  explicit Tableau(const StandardLp& lp) : lp_(lp) {
    m_ = static_cast<int>(lp.rows.size());
    n_struct_ = lp.num_vars;
    n_surplus_ = 0;
    for (auto s : lp.senses) {
      if (s == RowSense::Ge) ++n_surplus_;
    }
    n_total_ = n_struct_ + n_surplus_ + m_;  // artificials occupy the tail
    tab_.assign(m_, std::vector<Rational>(n_total_ + 1, Rational(0)));
    basis_.assign(m_, -1);

    int surplus_at = n_struct_;
    for (int i = 0; i < m_; ++i) {
      bool flip = lp.rhs[i] < 0;
      for (int j = 0; j < n_struct_; ++j) {
        tab_[i][j] = flip ? -lp.rows[i][j] : lp.rows[i][j];
      }
      if (lp.senses[i] == RowSense::Ge) {
        tab_[i][surplus_at] = flip ? Rational(1) : Rational(-1);
        ++surplus_at;
      }
      tab_[i][n_total_] = flip ? -lp.rhs[i] : lp.rhs[i];
      int art = n_struct_ + n_surplus_ + i;
      tab_[i][art] = 1;
      basis_[i] = art;
    }
  }

  bool is_artificial(int col) const { return col >= n_struct_ + n_surplus_; }

  // Minimize the sum of artificials. Returns the phase-1 optimum.
  Rational phase_one() {
    std::vector<Rational> cost(n_total_, Rational(0));
    for (int j = n_struct_ + n_surplus_; j < n_total_; ++j) cost[j] = 1;
    price(cost);
    run(cost, /*forbid_artificial_entering=*/false);
    Rational value = -obj_value_;
    if (value != 0) return value;
    drive_out_artificials();
    return 0;
  }

  // Minimize the real objective; call only after a feasible phase one.
  SolveStatus phase_two() {
    std::vector<Rational> cost(n_total_, Rational(0));
    for (int j = 0; j < n_struct_; ++j) cost[j] = lp_.objective[j];
    price(cost);
    return run(cost, /*forbid_artificial_entering=*/true);
  }

  StandardLpResult extract() const {
    StandardLpResult result;
    result.status = SolveStatus::Optimal;
    result.x.assign(n_struct_, Rational(0));
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_struct_) result.x[basis_[i]] = tab_[i][n_total_];
    }
    result.objective_value = -obj_value_;
    result.reduced_costs.assign(reduced_.begin(), reduced_.begin() + n_struct_);
    return result;
  }

 private:
  // Recompute reduced costs and objective value for the given cost vector.
  void price(const std::vector<Rational>& cost) {
    reduced_ = cost;
    obj_value_ = 0;
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      obj_value_ -= cb * tab_[i][n_total_];
      for (int j = 0; j < n_total_; ++j) {
        if (tab_[i][j] != 0) reduced_[j] -= cb * tab_[i][j];
      }
    }
  }

  SolveStatus run(const std::vector<Rational>& /*cost*/, bool forbid_artificial_entering) {
    for (;;) {
      int entering = -1;
      for (int j = 0; j < n_total_; ++j) {  // Bland: lowest index first
        if (forbid_artificial_entering && is_artificial(j)) continue;
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering < 0) return SolveStatus::Optimal;

      int leaving = -1;
      Rational best_ratio = 0;
      for (int i = 0; i < m_; ++i) {
        if (tab_[i][entering] <= 0) continue;
        Rational ratio = tab_[i][n_total_] / tab_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return SolveStatus::Unbounded;
      pivot(leaving, entering);
    }
  }

  void pivot(int row, int col) {
    Rational inv = 1 / tab_[row][col];
    for (int j = 0; j <= n_total_; ++j) tab_[row][j] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || tab_[i][col] == 0) continue;
      Rational factor = tab_[i][col];
      for (int j = 0; j <= n_total_; ++j) {
        if (tab_[row][j] != 0) tab_[i][j] -= factor * tab_[row][j];
      }
      tab_[i][col] = 0;
    }
    if (reduced_[col] != 0) {
      Rational factor = reduced_[col];
      for (int j = 0; j < n_total_; ++j) {
        if (tab_[row][j] != 0) reduced_[j] -= factor * tab_[row][j];
      }
      obj_value_ -= factor * tab_[row][n_total_];
      reduced_[col] = 0;
    }
    basis_[row] = col;
  }

  // After phase one each artificial still in the basis sits at value zero;
  // pivot it out on any usable column, or drop the row as redundant.
  void drive_out_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      int col = -1;
      for (int j = 0; j < n_struct_ + n_surplus_; ++j) {
        if (tab_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        pivot(i, col);
      } else {
        tab_.erase(tab_.begin() + i);
        basis_.erase(basis_.begin() + i);
        --m_;
        --i;
      }
    }
  }

  const StandardLp& lp_;
  int m_ = 0;
  int n_struct_ = 0;
  int n_surplus_ = 0;
  int n_total_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<int> basis_;
  std::vector<Rational> reduced_;
  Rational obj_value_ = 0;  // negated running objective
};

}  // namespace

StandardLpResult solve_standard_lp(const StandardLp& lp) {
  if (static_cast<int>(lp.objective.size()) != lp.num_vars ||
      lp.rows.size() != lp.senses.size() || lp.rows.size() != lp.rhs.size()) {
    throw Error(ErrorCode::MalformedProblem, "inconsistent LP dimensions");
  }
  for (const auto& row : lp.rows) {
    if (static_cast<int>(row.size()) != lp.num_vars) {
      throw Error(ErrorCode::MalformedProblem, "row width mismatch");
    }
  }

  if (lp.rows.empty()) {
    // Only bounds: the origin is optimal for nonnegative costs, otherwise the
    // problem is unbounded below.
    StandardLpResult result;
    for (int j = 0; j < lp.num_vars; ++j) {
      if (lp.objective[j] < 0) {
        result.status = SolveStatus::Unbounded;
        return result;
      }
    }
    result.status = SolveStatus::Optimal;
    result.x.assign(lp.num_vars, Rational(0));
    result.objective_value = 0;
    result.reduced_costs = lp.objective;
    return result;
  }

  Tableau tableau(lp);
  if (tableau.phase_one() != 0) {
    StandardLpResult result;
    result.status = SolveStatus::Infeasible;
    return result;
  }
  SolveStatus status = tableau.phase_two();
  if (status != SolveStatus::Optimal) {
    StandardLpResult result;
    result.status = status;
    return result;
  }
  return tableau.extract();
}

}  // namespace tap
