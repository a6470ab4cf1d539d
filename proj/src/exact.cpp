#include "tap/exact.hpp"

#include <algorithm>
#include <stdexcept>

#include "tap/decompose.hpp"
#include "tap/error.hpp"
#include "tap/lp.hpp"
#include "tap/simplex.hpp"

namespace tap {

namespace {

constexpr int kScanLinkLimit = 18;   // full enumeration below, B&B above
constexpr int kMaskEdgeLimit = 64;   // edge sets live in one machine word
constexpr int kMembershipSupportLimit = 16;

struct ExactContext {
  const TapInstance& inst;
  TreeIndex idx;
  CoverMap cover;

  explicit ExactContext(const TapInstance& instance)
      : inst(instance), idx(validate(instance)), cover(instance, idx) {
    if (idx.edge_count() > kMaskEdgeLimit) {
      throw Error(ErrorCode::TooLarge, std::to_string(idx.edge_count()) + " tree edges");
    }
  }

  uint64_t full_edge_mask() const {
    return idx.edge_count() == 64 ? ~0ull : (1ull << idx.edge_count()) - 1;
  }
};

// Compares sorted link-index sequences; indices follow lexicographic id order.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Best {
  bool found = false;
  Rational cost = 0;
  std::vector<int> links;  // sorted

  void offer(const Rational& candidate_cost, std::vector<int> candidate) {
    std::sort(candidate.begin(), candidate.end());
    if (!found || candidate_cost < cost ||
        (candidate_cost == cost && lex_less(candidate, links))) {
      found = true;
      cost = candidate_cost;
      links = std::move(candidate);
    }
  }
};

// Depth-first enumeration over the candidate links with suffix-coverage and
// incumbent-cost pruning; exact and deterministic.
class ScanSolver {
 public:
  ScanSolver(const ExactContext& ctx, const std::vector<int>& candidates, uint64_t need,
             bool prune_by_cost)
      : ctx_(ctx), candidates_(candidates), need_(need), prune_by_cost_(prune_by_cost) {
    suffix_.assign(candidates.size() + 1, 0);
    for (int i = static_cast<int>(candidates.size()) - 1; i >= 0; --i) {
      suffix_[i] = suffix_[i + 1] | ctx_.cover.covered_mask(candidates[i]);
    }
  }

  Best run() {
    chosen_.clear();
    recurse(0, 0, Rational(0));
    return best_;
  }

 private:
  void recurse(size_t pos, uint64_t covered, const Rational& cost) {
    if ((need_ & ~covered) == 0) {
      best_.offer(cost, chosen_);
      return;
    }
    if (pos == candidates_.size()) return;
    if ((need_ & ~(covered | suffix_[pos])) != 0) return;
    if (prune_by_cost_ && best_.found && cost > best_.cost) return;

    int link = candidates_[pos];
    chosen_.push_back(link);
    recurse(pos + 1, covered | ctx_.cover.covered_mask(link), cost + ctx_.cover.link(link).cost);
    chosen_.pop_back();
    recurse(pos + 1, covered, cost);
  }

  const ExactContext& ctx_;
  const std::vector<int>& candidates_;
  uint64_t need_;
  bool prune_by_cost_;
  std::vector<uint64_t> suffix_;
  std::vector<int> chosen_;
  Best best_;
};

// Branch-and-bound on the covering structure: branch over the covering links
// of the most constrained uncovered edge, bounded by the exact edge-LP value
// of the residual problem.
class BranchBoundSolver {
 public:
  BranchBoundSolver(const ExactContext& ctx, const std::vector<int>& candidates, uint64_t need)
      : ctx_(ctx), candidates_(candidates), need_(need) {
    link_pos_.assign(ctx.cover.link_count(), -1);
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i) link_pos_[candidates[i]] = i;
  }

  Best run() {
    seed_incumbent();
    chosen_.clear();
    recurse(0, std::vector<char>(candidates_.size(), 0), Rational(0));
    return best_;
  }

 private:
  // Greedy initial incumbent: repeatedly cover the first uncovered edge with
  // its cheapest available link.
  void seed_incumbent() {
    uint64_t covered = 0;
    Rational cost = 0;
    std::vector<int> picked;
    while ((need_ & ~covered) != 0) {
      int edge = first_uncovered(covered);
      int choice = -1;
      for (int l : ctx_.cover.cov(edge)) {
        if (link_pos_[l] < 0) continue;
        if (choice < 0 || ctx_.cover.link(l).cost < ctx_.cover.link(choice).cost) choice = l;
      }
      if (choice < 0) return;  // infeasible; recursion will conclude the same
      picked.push_back(choice);
      covered |= ctx_.cover.covered_mask(choice);
      cost += ctx_.cover.link(choice).cost;
    }
    best_.offer(cost, picked);
  }

  int first_uncovered(uint64_t covered) const {
    uint64_t open = need_ & ~covered;
    return __builtin_ctzll(open);
  }

  void recurse(uint64_t covered, const std::vector<char>& excluded, const Rational& cost) {
    uint64_t open = need_ & ~covered;
    if (open == 0) {
      best_.offer(cost, chosen_);
      return;
    }

    // Availability per open edge; empty availability kills the branch.
    int branch_edge = -1;
    size_t branch_width = 0;
    Rational cheap_extra = 0;
    for (uint64_t rest = open; rest;) {
      int e = __builtin_ctzll(rest);
      rest &= rest - 1;
      size_t width = 0;
      bool any = false;
      Rational cheapest = 0;
      for (int l : ctx_.cover.cov(e)) {
        if (link_pos_[l] < 0 || excluded[link_pos_[l]]) continue;
        ++width;
        if (!any || ctx_.cover.link(l).cost < cheapest) cheapest = ctx_.cover.link(l).cost;
        any = true;
      }
      if (!any) return;
      if (cheapest > cheap_extra) cheap_extra = cheapest;
      if (branch_edge < 0 || width < branch_width) {
        branch_edge = e;
        branch_width = width;
      }
    }
    // Completions cost at least the bound, so nodes that can only tie the
    // incumbent are cut; without this, zero-cost ties blow the tree up.
    if (best_.found && cost + cheap_extra >= best_.cost) return;

    StandardLpResult lp = residual_lp(open, excluded);
    if (lp.status != SolveStatus::Optimal) return;
    if (best_.found && cost + lp.objective_value >= best_.cost) return;

    // Branch links ordered by reduced cost, highest first (ties: id order).
    std::vector<int> branches;
    for (int l : ctx_.cover.cov(branch_edge)) {
      if (link_pos_[l] >= 0 && !excluded[link_pos_[l]]) branches.push_back(l);
    }
    std::stable_sort(branches.begin(), branches.end(), [&](int a, int b) {
      return lp.reduced_costs[link_pos_[a]] > lp.reduced_costs[link_pos_[b]];
    });

    std::vector<char> local_excluded = excluded;
    for (int l : branches) {
      chosen_.push_back(l);
      recurse(covered | ctx_.cover.covered_mask(l), local_excluded,
              cost + ctx_.cover.link(l).cost);
      chosen_.pop_back();
      local_excluded[link_pos_[l]] = 1;
    }
  }

  // Edge LP over the still-available candidates, restricted to open edges.
  // Variables span all candidates so reduced-cost indices line up; excluded
  // ones get zero objective and no row coefficients and stay at zero.
  StandardLpResult residual_lp(uint64_t open, const std::vector<char>& excluded) const {
    StandardLp lp;
    lp.num_vars = static_cast<int>(candidates_.size());
    lp.objective.assign(lp.num_vars, Rational(0));
    for (int i = 0; i < lp.num_vars; ++i) {
      if (!excluded[i]) lp.objective[i] = ctx_.cover.link(candidates_[i]).cost;
    }
    for (uint64_t rest = open; rest;) {
      int e = __builtin_ctzll(rest);
      rest &= rest - 1;
      std::vector<Rational> row(lp.num_vars, Rational(0));
      for (int l : ctx_.cover.cov(e)) {
        if (link_pos_[l] >= 0 && !excluded[link_pos_[l]]) row[link_pos_[l]] = 1;
      }
      lp.rows.push_back(std::move(row));
      lp.senses.push_back(RowSense::Ge);
      lp.rhs.push_back(Rational(1));
    }
    return solve_standard_lp(lp);
  }

  const ExactContext& ctx_;
  const std::vector<int>& candidates_;
  uint64_t need_;
  std::vector<int> link_pos_;
  std::vector<int> chosen_;
  Best best_;
};

// Dominance and forced-inclusion preprocessing. A link is dropped when
// another covers a superset of its path at no larger cost (ties by id); an
// edge with a single remaining cover forces that link in. Both preserve the
// optimal cost and the lexicographic tie-break.
struct Preprocessed {
  std::vector<int> forced;
  std::vector<int> candidates;
  uint64_t remaining_edges = 0;
};

Preprocessed preprocess(const ExactContext& ctx) {
  const int m = ctx.cover.link_count();
  std::vector<char> active(m, 1);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m && active[i]; ++j) {
      if (j == i) continue;
      uint64_t mi = ctx.cover.covered_mask(i);
      uint64_t mj = ctx.cover.covered_mask(j);
      if ((mi & ~mj) != 0) continue;
      const Rational& ci = ctx.cover.link(i).cost;
      const Rational& cj = ctx.cover.link(j).cost;
      if (cj < ci || (cj == ci && j < i)) active[i] = 0;
    }
  }

  Preprocessed result;
  uint64_t covered = 0;
  const uint64_t all = ctx.full_edge_mask();
  for (bool changed = true; changed;) {
    changed = false;
    for (int e = 0; e < ctx.idx.edge_count(); ++e) {
      if ((covered >> e) & 1) continue;
      int only = -1;
      int count = 0;
      for (int l : ctx.cover.cov(e)) {
        if (!active[l]) continue;
        only = l;
        if (++count > 1) break;
      }
      if (count == 1) {
        result.forced.push_back(only);
        covered |= ctx.cover.covered_mask(only);
        active[only] = 0;
        changed = true;
      }
    }
  }
  result.remaining_edges = all & ~covered;
  for (int l = 0; l < m; ++l) {
    if (active[l] && (ctx.cover.covered_mask(l) & result.remaining_edges) != 0) {
      result.candidates.push_back(l);
    }
  }
  return result;
}

Solution finish(const ExactContext& ctx, const Preprocessed& prep, const Best& best) {
  if (!best.found) throw Error(ErrorCode::Infeasible, "no feasible augmentation");
  Solution solution;
  for (int l : prep.forced) solution.link_ids.insert(ctx.cover.link(l).id);
  for (int l : best.links) solution.link_ids.insert(ctx.cover.link(l).id);
  for (const auto& id : solution.link_ids) {
    solution.cost += ctx.cover.link(ctx.cover.link_index(id)).cost;
  }
  return solution;
}

void require_coverable(const ExactContext& ctx) {
  for (int e = 0; e < ctx.idx.edge_count(); ++e) {
    if (ctx.cover.cov(e).empty()) {
      auto [p, c] = ctx.idx.edge_names(e);
      throw Error(ErrorCode::Infeasible, "edge (" + p + "," + c + ") has no covering link");
    }
  }
}

}  // namespace

bool is_feasible(const TapInstance& inst, const std::set<std::string>& link_ids) {
  TreeIndex idx = validate(inst);
  CoverMap cover(inst, idx);
  std::vector<char> chosen(cover.link_count(), 0);
  for (const auto& id : link_ids) chosen[cover.link_index(id)] = 1;
  for (int e = 0; e < idx.edge_count(); ++e) {
    bool hit = false;
    for (int l : cover.cov(e)) {
      if (chosen[l]) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

Solution solve_exact(const TapInstance& inst, const ExactOptions& options) {
  ExactContext ctx(inst);
  require_coverable(ctx);

  if (options.method == ExactOptions::Method::Exhaustive &&
      ctx.cover.link_count() > options.exhaustive_link_limit) {
    throw Error(ErrorCode::TooLarge,
                std::to_string(ctx.cover.link_count()) + " links exceeds exhaustive limit " +
                    std::to_string(options.exhaustive_link_limit));
  }

  Preprocessed prep = preprocess(ctx);
  if (prep.remaining_edges == 0) {
    Best empty;
    empty.offer(Rational(0), {});
    return finish(ctx, prep, empty);
  }

  bool use_scan;
  switch (options.method) {
    case ExactOptions::Method::Exhaustive: use_scan = true; break;
    case ExactOptions::Method::BranchBound: use_scan = false; break;
    default: use_scan = static_cast<int>(prep.candidates.size()) <= kScanLinkLimit; break;
  }

  Best best;
  if (use_scan) {
    best = ScanSolver(ctx, prep.candidates, prep.remaining_edges, /*prune_by_cost=*/true).run();
  } else {
    best = BranchBoundSolver(ctx, prep.candidates, prep.remaining_edges).run();
  }
  return finish(ctx, prep, best);
}

std::vector<Solution> enumerate_minimal_solutions(const TapInstance& inst) {
  ExactContext ctx(inst);
  const int m = ctx.cover.link_count();
  if (m > 24) throw Error(ErrorCode::TooLarge, std::to_string(m) + " links");
  for (int e = 0; e < ctx.idx.edge_count(); ++e) {
    if (ctx.cover.cov(e).empty()) return {};
  }

  const uint64_t all = ctx.full_edge_mask();
  std::vector<uint64_t> suffix(m + 1, 0);
  for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] | ctx.cover.covered_mask(i);

  std::vector<Solution> out;
  std::vector<int> chosen;
  // A chosen link with no uniquely covered edge can never become essential
  // again, so such branches are abandoned immediately.
  auto chosen_all_essential = [&]() {
    for (int l : chosen) {
      bool essential = false;
      for (int e : ctx.cover.covered_edges(l)) {
        int hits = 0;
        for (int other : chosen) {
          if ((ctx.cover.covered_mask(other) >> e) & 1) ++hits;
        }
        if (hits == 1) {
          essential = true;
          break;
        }
      }
      if (!essential) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, int pos, uint64_t covered) -> void {
    if ((all & ~covered) == 0) {
      Solution sol;
      for (int l : chosen) {
        sol.link_ids.insert(ctx.cover.link(l).id);
        sol.cost += ctx.cover.link(l).cost;
      }
      out.push_back(std::move(sol));
      return;
    }
    if (pos == m) return;
    if ((all & ~(covered | suffix[pos])) != 0) return;

    chosen.push_back(pos);
    if (chosen_all_essential()) {
      self(self, pos + 1, covered | ctx.cover.covered_mask(pos));
    }
    chosen.pop_back();
    self(self, pos + 1, covered);
  };
  recurse(recurse, 0, 0);
  return out;
}

Solution solve_star_exact(const StarInstance& star) {
  TapInstance instance = star.to_instance();
  TreeIndex idx = validate(instance);
  for (const auto& link : instance.links) {
    LinkClass cls = classify(idx, link, star.center);
    if (cls == LinkClass::In) {
      throw Error(ErrorCode::NotStarShaped,
                  "link (" + link.u + "," + link.v + ") is an in-link at " + star.center);
    }
  }
  return solve_exact(instance);
}

MembershipResult tap_polytope_membership(const TapInstance& inst,
                                         const std::map<std::string, Rational>& point) {
  ExactContext ctx(inst);
  std::vector<Rational> dense(ctx.cover.link_count(), Rational(0));
  for (const auto& [id, value] : point) dense[ctx.cover.link_index(id)] = value;

  MembershipResult result;
  for (const Rational& v : dense) {
    if (v < 0 || v > 1) return result;  // outside the 0/1 hull outright
  }
  std::vector<int> support;
  for (int i = 0; i < ctx.cover.link_count(); ++i) {
    if (dense[i] > 0) support.push_back(i);
  }
  if (static_cast<int>(support.size()) > kMembershipSupportLimit) {
    throw Error(ErrorCode::TooLarge,
                "support of size " + std::to_string(support.size()) + " exceeds " +
                    std::to_string(kMembershipSupportLimit));
  }

  // Any set receiving positive weight must avoid links outside the support,
  // so the column pool is exactly the feasible subsets of the support.
  const uint64_t all = ctx.full_edge_mask();
  std::vector<uint64_t> columns;
  const uint64_t total = 1ull << support.size();
  for (uint64_t mask = 0; mask < total; ++mask) {
    uint64_t covered = 0;
    for (uint64_t rest = mask; rest;) {
      int b = __builtin_ctzll(rest);
      rest &= rest - 1;
      covered |= ctx.cover.covered_mask(support[b]);
    }
    if ((all & ~covered) == 0) columns.push_back(mask);
  }
  if (columns.empty()) return result;

  StandardLp lp;
  lp.num_vars = static_cast<int>(columns.size());
  lp.objective.assign(lp.num_vars, Rational(0));
  std::vector<Rational> ones(lp.num_vars, Rational(1));
  lp.rows.push_back(ones);
  lp.senses.push_back(RowSense::Eq);
  lp.rhs.push_back(Rational(1));
  for (size_t s = 0; s < support.size(); ++s) {
    std::vector<Rational> row(lp.num_vars, Rational(0));
    for (int j = 0; j < lp.num_vars; ++j) {
      if ((columns[j] >> s) & 1) row[j] = 1;
    }
    lp.rows.push_back(std::move(row));
    lp.senses.push_back(RowSense::Eq);
    lp.rhs.push_back(dense[support[s]]);
  }

  StandardLpResult raw = solve_standard_lp(lp);
  if (raw.status != SolveStatus::Optimal) return result;

  std::vector<Rational> reconstructed(support.size(), Rational(0));
  Rational weight_sum = 0;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (raw.x[j] == 0) continue;
    Solution sol;
    for (size_t s = 0; s < support.size(); ++s) {
      if ((columns[j] >> s) & 1) {
        const Link& link = ctx.cover.link(support[s]);
        sol.link_ids.insert(link.id);
        sol.cost += link.cost;
        reconstructed[s] += raw.x[j];
      }
    }
    weight_sum += raw.x[j];
    result.weights.push_back({std::move(sol), raw.x[j]});
  }
  if (weight_sum != 1) throw std::logic_error("membership weights do not sum to one");
  for (size_t s = 0; s < support.size(); ++s) {
    if (reconstructed[s] != dense[support[s]]) {
      throw std::logic_error("membership reconstruction mismatch");
    }
  }
  result.member = true;
  return result;
}

}  // namespace tap
