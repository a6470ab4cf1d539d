#include "tap/lp.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tap/error.hpp"

namespace tap {

namespace {

constexpr int kDefaultSubsetLimit = 22;

std::map<std::string, Rational> point_to_map(const CoverMap& cover,
                                             const std::vector<Rational>& x) {
  std::map<std::string, Rational> result;
  for (int i = 0; i < cover.link_count(); ++i) result[cover.link(i).id] = x[i];
  return result;
}

// Fills a dense vector in CoverMap order; missing ids default to zero and
// unknown ids are rejected.
std::vector<Rational> map_to_point(const CoverMap& cover,
                                   const std::map<std::string, Rational>& point) {
  std::vector<Rational> x(cover.link_count(), Rational(0));
  for (const auto& [id, value] : point) {
    x[cover.link_index(id)] = value;
  }
  return x;
}

// Gray-code walk over all nonempty subsets of the non-root vertices, keeping
// the tree boundary size and the two constraint sums incremental. Positions
// follow ascending vertex-name order so subset masks compare lexicographically
// with a two-pointer walk.
class CutScanner {
 public:
  CutScanner(const TreeIndex& idx, const CoverMap& cover) : idx_(idx), cover_(cover) {
    // the env var may raise the limit, but subsets must fit one machine word
    int limit = std::min(subset_vertex_limit(), 64);
    if (idx.vertex_count() > limit) {
      throw Error(ErrorCode::TooLarge, std::to_string(idx.vertex_count()) +
                                           " vertices exceeds subset limit " +
                                           std::to_string(limit));
    }
    std::vector<std::string> names;
    for (int v = 0; v < idx.vertex_count(); ++v) {
      if (v != idx.root()) names.push_back(idx.name_of(v));
    }
    std::sort(names.begin(), names.end());
    for (const auto& name : names) scan_vertices_.push_back(idx.id_of(name));

    edges_at_.resize(idx.vertex_count());
    links_at_.resize(idx.vertex_count());
    for (int e = 0; e < idx.edge_count(); ++e) {
      edges_at_[idx.edge_parent(e)].push_back(e);
      edges_at_[idx.edge_child(e)].push_back(e);
    }
    for (int i = 0; i < cover.link_count(); ++i) {
      links_at_[idx.id_of(cover.link(i).u)].push_back(i);
      links_at_[idx.id_of(cover.link(i).v)].push_back(i);
    }
  }

  // visit(mask, boundary_count, lhs, rhs) for every subset with odd boundary.
  template <typename Visit>
  void scan(const std::vector<Rational>& x, Visit&& visit) const {
    std::vector<Rational> xcov(idx_.edge_count(), Rational(0));
    for (int e = 0; e < idx_.edge_count(); ++e) {
      for (int l : cover_.cov(e)) xcov[e] += x[l];
    }
    const int m = static_cast<int>(scan_vertices_.size());
    std::vector<char> in_s(idx_.vertex_count(), 0);
    std::vector<char> edge_in(idx_.edge_count(), 0);
    std::vector<char> link_in(cover_.link_count(), 0);
    int boundary = 0;
    Rational sum_cov = 0;
    Rational sum_link = 0;
    uint64_t mask = 0;
    const uint64_t total = 1ull << m;
    for (uint64_t i = 1; i < total; ++i) {
      int p = __builtin_ctzll(i);
      mask ^= 1ull << p;
      int w = scan_vertices_[p];
      in_s[w] ^= 1;
      for (int e : edges_at_[w]) {
        if (edge_in[e]) {
          --boundary;
          sum_cov -= xcov[e];
        } else {
          ++boundary;
          sum_cov += xcov[e];
        }
        edge_in[e] ^= 1;
      }
      for (int l : links_at_[w]) {
        if (link_in[l]) {
          sum_link -= x[l];
        } else {
          sum_link += x[l];
        }
        link_in[l] ^= 1;
      }
      if (boundary % 2 == 1) {
        visit(mask, boundary, sum_link + sum_cov, Rational(boundary + 1));
      }
    }
  }

  std::vector<std::string> mask_subset(uint64_t mask) const {
    std::vector<std::string> subset;
    for (int p = 0; p < static_cast<int>(scan_vertices_.size()); ++p) {
      if (mask & (1ull << p)) subset.push_back(idx_.name_of(scan_vertices_[p]));
    }
    return subset;  // sorted because positions follow name order
  }

  // Lexicographic order on the vertex-name sequences the masks denote.
  static bool mask_lex_less(uint64_t a, uint64_t b) {
    while (a && b) {
      int pa = __builtin_ctzll(a);
      int pb = __builtin_ctzll(b);
      if (pa != pb) return pa < pb;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  }

 private:
  const TreeIndex& idx_;
  const CoverMap& cover_;
  std::vector<int> scan_vertices_;
  std::vector<std::vector<int>> edges_at_;
  std::vector<std::vector<int>> links_at_;
};

std::string row_key(const LpRow& row) {
  std::ostringstream out;
  for (const auto& [id, coeff] : row.coeffs) {
    if (coeff == 0) continue;
    out << id << '*' << to_string(coeff) << ';';
  }
  out << '|' << to_string(row.rhs);
  return out.str();
}

// Coefficient vector of the odd-cut row in CoverMap link order.
std::vector<Rational> cut_row_vector(const TreeIndex& idx, const CoverMap& cover,
                                     uint64_t mask, const CutScanner& scanner) {
  std::vector<Rational> coeffs(cover.link_count(), Rational(0));
  std::set<std::string> in_subset;
  for (const auto& name : scanner.mask_subset(mask)) in_subset.insert(name);
  auto contains = [&](const std::string& name) { return in_subset.count(name) > 0; };
  for (int i = 0; i < cover.link_count(); ++i) {
    if (contains(cover.link(i).u) != contains(cover.link(i).v)) coeffs[i] += 1;
  }
  for (int e = 0; e < idx.edge_count(); ++e) {
    auto [p, c] = idx.edge_names(e);
    if (contains(p) != contains(c)) {
      for (int l : cover.cov(e)) coeffs[l] += 1;
    }
  }
  return coeffs;
}

}  // namespace

int subset_vertex_limit() {
  if (const char* env = std::getenv("TAP_SUBSET_LIMIT")) {
    int value = std::atoi(env);
    if (value > 0) return value;
  }
  return kDefaultSubsetLimit;
}

LpSolution solve_lp(const LpProblem& problem) {
  std::map<std::string, int> var_index;
  for (int j = 0; j < static_cast<int>(problem.variables.size()); ++j) {
    if (!var_index.emplace(problem.variables[j], j).second) {
      throw Error(ErrorCode::MalformedProblem, "duplicate variable " + problem.variables[j]);
    }
  }
  StandardLp lp;
  lp.num_vars = static_cast<int>(problem.variables.size());
  lp.objective.assign(lp.num_vars, Rational(0));
  for (const auto& [id, cost] : problem.objective) {
    auto it = var_index.find(id);
    if (it == var_index.end()) throw Error(ErrorCode::MalformedProblem, "objective variable " + id);
    lp.objective[it->second] = cost;
  }
  for (const auto& row : problem.rows) {
    std::vector<Rational> dense(lp.num_vars, Rational(0));
    for (const auto& [id, coeff] : row.coeffs) {
      auto it = var_index.find(id);
      if (it == var_index.end()) throw Error(ErrorCode::MalformedProblem, "row variable " + id);
      dense[it->second] = coeff;
    }
    lp.rows.push_back(std::move(dense));
    lp.senses.push_back(RowSense::Ge);
    lp.rhs.push_back(row.rhs);
  }

  StandardLpResult raw = solve_standard_lp(lp);
  LpSolution solution;
  solution.status = raw.status;
  if (raw.status != SolveStatus::Optimal) return solution;
  for (int j = 0; j < lp.num_vars; ++j) {
    solution.values[problem.variables[j]] = raw.x[j];
  }
  solution.objective_value = raw.objective_value;
  for (int r = 0; r < static_cast<int>(lp.rows.size()); ++r) {
    Rational lhs = 0;
    for (int j = 0; j < lp.num_vars; ++j) {
      if (lp.rows[r][j] != 0) lhs += lp.rows[r][j] * raw.x[j];
    }
    if (lhs < lp.rhs[r]) throw std::logic_error("simplex returned an infeasible point");
  }
  return solution;
}

LpProblem build_edge_lp(const TapInstance& inst) {
  TreeIndex idx = validate(inst);
  CoverMap cover(inst, idx);
  LpProblem problem;
  for (int i = 0; i < cover.link_count(); ++i) {
    problem.variables.push_back(cover.link(i).id);
    problem.objective[cover.link(i).id] = cover.link(i).cost;
  }
  for (int e = 0; e < idx.edge_count(); ++e) {
    if (cover.cov(e).empty()) {
      auto [p, c] = idx.edge_names(e);
      throw Error(ErrorCode::UncoverableEdge, "(" + p + "," + c + ")");
    }
    LpRow row;
    row.rhs = 1;
    for (int l : cover.cov(e)) row.coeffs[cover.link(l).id] = 1;
    problem.rows.push_back(std::move(row));
  }
  return problem;
}

OddCut make_odd_cut(const TapInstance& inst, const TreeIndex& idx,
                    const std::vector<std::string>& subset) {
  std::set<std::string> s(subset.begin(), subset.end());
  for (const auto& name : s) idx.id_of(name);
  if (s.count(inst.root)) {
    std::set<std::string> complement;
    for (const auto& v : inst.vertices) {
      if (!s.count(v)) complement.insert(v);
    }
    s = std::move(complement);
  }
  OddCut cut;
  cut.subset.assign(s.begin(), s.end());
  for (const auto& [a, b] : inst.tree_edges) {
    if (s.count(a) != s.count(b)) {
      // orient (parent, child): validate() guarantees a tree, recover via index
      int e = idx.edge_index(a, b);
      cut.tree_boundary.push_back(idx.edge_names(e));
    }
  }
  for (const auto& link : inst.links) {
    if (s.count(link.u) != s.count(link.v)) cut.link_boundary.push_back(link.id);
  }
  std::sort(cut.link_boundary.begin(), cut.link_boundary.end());
  if (cut.tree_boundary.size() % 2 == 0) {
    throw Error(ErrorCode::EvenBoundary,
                "|delta(S) & E(T)| = " + std::to_string(cut.tree_boundary.size()));
  }
  return cut;
}

LpRow odd_constraint(const TapInstance& inst, const TreeIndex& idx, const OddCut& cut) {
  if (cut.tree_boundary.size() % 2 == 0) {
    throw Error(ErrorCode::EvenBoundary,
                "|delta(S) & E(T)| = " + std::to_string(cut.tree_boundary.size()));
  }
  CoverMap cover(inst, idx);
  LpRow row;
  row.rhs = Rational(static_cast<long>(cut.tree_boundary.size()) + 1);
  for (const auto& id : cut.link_boundary) row.coeffs[id] += 1;
  for (const auto& [a, b] : cut.tree_boundary) {
    int e = idx.edge_index(a, b);
    for (int l : cover.cov(e)) row.coeffs[cover.link(l).id] += 1;
  }
  for (const auto& [id, coeff] : row.coeffs) {
    if (!is_integer(coeff) || coeff.get_num() % 2 != 0) {
      throw std::logic_error("odd-cut coefficient of " + id + " is not even");
    }
  }
  return row;
}

std::optional<OddCut> separate_odd(const TapInstance& inst, const TreeIndex& idx,
                                   const std::map<std::string, Rational>& x) {
  CoverMap cover(inst, idx);
  CutScanner scanner(idx, cover);
  std::vector<Rational> dense = map_to_point(cover, x);

  bool found = false;
  Rational best_violation = 0;
  uint64_t best_mask = 0;
  scanner.scan(dense, [&](uint64_t mask, int, const Rational& lhs, const Rational& rhs) {
    Rational violation = rhs - lhs;
    if (violation <= 0) return;
    if (!found || violation > best_violation ||
        (violation == best_violation && CutScanner::mask_lex_less(mask, best_mask))) {
      found = true;
      best_violation = violation;
      best_mask = mask;
    }
  });
  if (!found) return std::nullopt;
  return make_odd_cut(inst, idx, scanner.mask_subset(best_mask));
}

OddLpResult solve_odd_lp(const TapInstance& inst) {
  TreeIndex idx = validate(inst);
  LpProblem problem = build_edge_lp(inst);
  std::set<std::string> seen;
  for (const auto& row : problem.rows) seen.insert(row_key(row));

  OddLpResult result;
  for (;;) {
    LpSolution solution = solve_lp(problem);
    if (solution.status != SolveStatus::Optimal) {
      throw std::logic_error("odd-cut relaxation lost feasibility");
    }
    auto cut = separate_odd(inst, idx, solution.values);
    if (!cut) {
      result.solution = std::move(solution);
      break;
    }
    LpRow row = odd_constraint(inst, idx, *cut);
    if (!seen.insert(row_key(row)).second) {
      throw std::logic_error("separation produced a duplicate cut row");
    }
    problem.rows.push_back(std::move(row));
    result.cuts.push_back(std::move(*cut));
  }
  if (separate_odd(inst, idx, result.solution.values)) {
    throw std::logic_error("returned point fails final separation pass");
  }
  return result;
}

PointCheck check_point_odd_feasible(const TapInstance& inst,
                                    const std::map<std::string, Rational>& point) {
  TreeIndex idx = validate(inst);
  CoverMap cover(inst, idx);
  PointCheck check;
  std::vector<Rational> dense = map_to_point(cover, point);
  for (int i = 0; i < cover.link_count(); ++i) {
    if (dense[i] < 0) {
      check.negative_link = cover.link(i).id;
      return check;
    }
  }
  // Edge rows are subsumed: the subtree below any edge is a canonical subset
  // with singleton tree boundary, and its cut row is the edge row doubled.
  auto cut = separate_odd(inst, idx, point_to_map(cover, dense));
  if (cut) {
    check.violated_cut = std::move(*cut);
    return check;
  }
  check.feasible = true;
  return check;
}

ExtremePointCheck extreme_point_rank(const TapInstance& inst,
                                     const std::map<std::string, Rational>& point) {
  PointCheck feasibility = check_point_odd_feasible(inst, point);
  if (!feasibility.feasible) {
    throw Error(ErrorCode::NotFeasible, "point is not odd-cut feasible");
  }
  TreeIndex idx = validate(inst);
  CoverMap cover(inst, idx);
  CutScanner scanner(idx, cover);
  std::vector<Rational> dense = map_to_point(cover, point);
  const int m = cover.link_count();

  // Incremental Gaussian elimination; basis rows are kept pivot-normalized.
  std::vector<std::vector<Rational>> basis;
  std::vector<int> pivot_col;
  auto add_row = [&](std::vector<Rational> row) {
    for (size_t r = 0; r < basis.size(); ++r) {
      if (row[pivot_col[r]] != 0) {
        Rational factor = row[pivot_col[r]];
        for (int j = 0; j < m; ++j) {
          if (basis[r][j] != 0) row[j] -= factor * basis[r][j];
        }
      }
    }
    int col = -1;
    for (int j = 0; j < m; ++j) {
      if (row[j] != 0) {
        col = j;
        break;
      }
    }
    if (col < 0) return;
    Rational inv = 1 / row[col];
    for (int j = 0; j < m; ++j) row[j] *= inv;
    basis.push_back(std::move(row));
    pivot_col.push_back(col);
  };

  for (int i = 0; i < m && static_cast<int>(basis.size()) < m; ++i) {
    if (dense[i] == 0) {
      std::vector<Rational> unit(m, Rational(0));
      unit[i] = 1;
      add_row(std::move(unit));
    }
  }
  scanner.scan(dense, [&](uint64_t mask, int, const Rational& lhs, const Rational& rhs) {
    if (static_cast<int>(basis.size()) >= m) return;
    if (lhs == rhs) add_row(cut_row_vector(idx, cover, mask, scanner));
  });

  ExtremePointCheck result;
  result.rank = static_cast<int>(basis.size());
  result.link_count = m;
  result.is_extreme = result.rank == m;
  return result;
}

bool is_extreme_point(const TapInstance& inst, const std::map<std::string, Rational>& point) {
  return extreme_point_rank(inst, point).is_extreme;
}

}  // namespace tap
