#include "tap/decompose.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "tap/error.hpp"

namespace tap {

TapInstance StarInstance::to_instance() const {
  TapInstance inst;
  inst.name = "star@" + center;
  std::set<std::string> seen;
  auto add_vertex = [&](const std::string& v) {
    if (seen.insert(v).second) inst.vertices.push_back(v);
  };
  add_vertex(center);
  for (const auto& [a, b] : tree_edges) {
    add_vertex(a);
    add_vertex(b);
  }
  inst.root = center;
  inst.tree_edges = tree_edges;
  for (int i = 0; i < static_cast<int>(links.size()); ++i) {
    inst.links.push_back({"t" + std::to_string(i), links[i].u, links[i].v, links[i].cost});
  }
  return inst;
}

int StarInstance::link_ordinal(const std::string& id) {
  return std::stoi(id.substr(1));
}

namespace {

// Splits one link into the copies used by the level-l candidate. Endpoints
// strictly below level l are lifted to their level-(l-1) ancestor so that
// each resulting piece's path stays inside a single subinstance; the middle
// piece crosses the root when the lca sits at level 1 and otherwise splits
// at the lca into two up pieces.
std::vector<std::pair<int, int>> transform_link(const TreeIndex& idx, int a, int b, int level) {
  int c = idx.lca(a, b);
  int q = idx.level(c);
  if (q == level) return {{a, b}};
  if (q > level) return {{a, c}, {b, c}};

  int sa = idx.level(a) > level ? idx.ancestor_at_level(a, level - 1) : a;
  int sb = idx.level(b) > level ? idx.ancestor_at_level(b, level - 1) : b;
  std::vector<std::pair<int, int>> pieces;
  if (sa != a) pieces.push_back({a, sa});
  if (sb != b) pieces.push_back({b, sb});
  if (q == 1) {
    if (sa != sb) pieces.push_back({sa, sb});
  } else {
    if (sa != c) pieces.push_back({sa, c});
    if (sb != c) pieces.push_back({sb, c});
  }
  return pieces;
}

}  // namespace

std::vector<StarInstance> build_level_candidate(const TapInstance& inst, const TreeIndex& idx,
                                                int level) {
  if (!is_leaf_to_leaf(inst, idx)) {
    throw Error(ErrorCode::NotLeafToLeaf, "apply the leaf-to-leaf reduction first");
  }
  if (level < 1 || level > idx.depth()) {
    throw Error(ErrorCode::LevelOutOfRange,
                "level " + std::to_string(level) + " outside 1.." + std::to_string(idx.depth()));
  }

  // Assign every tree edge to its subinstance: the star of the level-l
  // internal node above it, or the residual instance at the root.
  std::vector<StarInstance> stars;
  std::vector<int> owner(idx.edge_count(), -1);
  if (level == 1) {
    stars.push_back({inst.root, {}, {}});
    for (int e = 0; e < idx.edge_count(); ++e) owner[e] = 0;
  } else {
    std::vector<std::string> centers;
    for (int v = 0; v < idx.vertex_count(); ++v) {
      if (idx.is_internal(v) && idx.level(v) == level) centers.push_back(idx.name_of(v));
    }
    std::sort(centers.begin(), centers.end());
    for (const auto& name : centers) stars.push_back({name, {}, {}});
    int residual = static_cast<int>(stars.size());
    stars.push_back({inst.root, {}, {}});
    for (int e = 0; e < idx.edge_count(); ++e) {
      owner[e] = residual;
      for (int s = 0; s < residual; ++s) {
        if (idx.is_ancestor(idx.id_of(stars[s].center), idx.edge_child(e))) {
          owner[e] = s;
          break;
        }
      }
    }
  }
  for (int e = 0; e < idx.edge_count(); ++e) stars[owner[e]].tree_edges.push_back(idx.edge_names(e));

  for (const auto& link : inst.links) {
    int a = idx.id_of(link.u);
    int b = idx.id_of(link.v);
    for (const auto& [x, y] : transform_link(idx, a, b, level)) {
      auto path = idx.path_edges(x, y);
      int home = owner[path.front()];
      for (int e : path) {
        if (owner[e] != home) {
          throw std::logic_error("transformed copy of " + link.id +
                                 " spans multiple subinstances");
        }
      }
      stars[home].links.push_back({idx.name_of(x), idx.name_of(y), link.cost, link.id});
    }
  }

  // The residual can come out empty when every root child is internal.
  std::vector<StarInstance> result;
  for (auto& star : stars) {
    if (!star.tree_edges.empty()) result.push_back(std::move(star));
  }
  return result;
}

Candidate solve_level_candidate(const TapInstance& inst, const TreeIndex& idx, int level) {
  CoverMap cover(inst, idx);
  Candidate candidate;
  candidate.level = level;
  for (const StarInstance& star : build_level_candidate(inst, idx, level)) {
    Solution sol = solve_star_exact(star);
    Candidate::PerStar per;
    per.center = star.center;
    for (const auto& id : sol.link_ids) {
      const TransformedLink& chosen = star.links[StarInstance::link_ordinal(id)];
      per.chosen.push_back(chosen);
      candidate.link_ids.insert(chosen.origin);
    }
    candidate.per_star.push_back(std::move(per));
  }
  for (const auto& id : candidate.link_ids) {
    candidate.cost += cover.link(cover.link_index(id)).cost;
  }
  // Each copy's path nests inside its origin's path, so the union of origins
  // covers everything the subinstance solutions covered.
  if (!is_feasible(inst, candidate.link_ids)) {
    throw std::logic_error("level candidate is infeasible for the full instance");
  }
  return candidate;
}

ApproxResult approximate(const TapInstance& inst, bool parallel) {
  TreeIndex idx = validate(inst);
  CoverMap cover(inst, idx);
  for (int e = 0; e < idx.edge_count(); ++e) {
    if (cover.cov(e).empty()) {
      auto [p, c] = idx.edge_names(e);
      throw Error(ErrorCode::Infeasible, "edge (" + p + "," + c + ") has no covering link");
    }
  }

  ApproxResult result;
  if (idx.edge_count() == 0) {
    result.best.level = 1;
    result.ratio_bound = 1;
    result.k = 1;
    result.all_costs[1] = 0;
    return result;
  }

  LeafToLeafResult reduction = leaf_to_leaf(inst);
  TreeIndex reduced_idx = validate(reduction.reduced);
  const int k = reduced_idx.depth();
  result.k = k;
  result.ratio_bound = ratio_bound(k);

  std::vector<Candidate> candidates(k);
  if (parallel) {
    std::vector<std::future<Candidate>> futures;
    for (int l = 1; l <= k; ++l) {
      futures.push_back(std::async(std::launch::async, [&, l] {
        return solve_level_candidate(reduction.reduced, reduced_idx, l);
      }));
    }
    for (int l = 1; l <= k; ++l) candidates[l - 1] = futures[l - 1].get();
  } else {
    for (int l = 1; l <= k; ++l) {
      candidates[l - 1] = solve_level_candidate(reduction.reduced, reduced_idx, l);
    }
  }

  int best = 0;
  for (int i = 0; i < k; ++i) {
    result.all_costs[i + 1] = candidates[i].cost;
    if (candidates[i].cost < candidates[best].cost) best = i;
  }

  result.best = candidates[best];
  result.best.link_ids = reduction.backward_solution(result.best.link_ids);
  Rational mapped_cost = 0;
  for (const auto& id : result.best.link_ids) {
    mapped_cost += cover.link(cover.link_index(id)).cost;
  }
  if (mapped_cost != result.best.cost) {
    throw std::logic_error("dropping zero-cost helper links changed the candidate cost");
  }
  if (!is_feasible(inst, result.best.link_ids)) {
    throw std::logic_error("mapped-back solution is infeasible for the original instance");
  }
  return result;
}

Rational candidate_cost_bound(int level, const std::vector<Rational>& level_costs) {
  const int k = static_cast<int>(level_costs.size());
  if (level < 1 || level > k) {
    throw Error(ErrorCode::LevelOutOfRange,
                "level " + std::to_string(level) + " outside 1.." + std::to_string(k));
  }
  auto c = [&](int l) -> const Rational& { return level_costs[l - 1]; };
  Rational total = 0;
  if (level == 1) {
    total = c(1);
    for (int i = 2; i <= k; ++i) total += 2 * c(i);
  } else if (level == 2) {
    total = 2 * c(1) + c(2);
    for (int i = 3; i <= k; ++i) total += 2 * c(i);
  } else {
    total = 3 * c(1);
    for (int i = 2; i <= level - 2; ++i) total += 4 * c(i);
    total += 2 * c(level - 1) + c(level);
    for (int i = level + 1; i <= k; ++i) total += 2 * c(i);
  }
  return total;
}

std::vector<Rational> worst_case_costs(int k) {
  if (k < 1) throw Error(ErrorCode::LevelOutOfRange, "k = " + std::to_string(k));
  std::vector<Rational> costs;
  costs.push_back(1);
  Rational power = 1;
  for (int l = 2; l <= k; ++l) {
    costs.push_back(power);  // 2^(l-2)
    power *= 2;
  }
  return costs;
}

Rational ratio_bound(int k) {
  if (k < 1) throw Error(ErrorCode::LevelOutOfRange, "k = " + std::to_string(k));
  Rational half_power = 1;  // 2^(k-1)
  for (int i = 1; i < k; ++i) half_power *= 2;
  return 2 - 1 / half_power;
}

}  // namespace tap
