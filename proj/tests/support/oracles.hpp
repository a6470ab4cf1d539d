// Test-only reference implementations. Everything here recomputes results
// from first principles (BFS paths, full subset scans, tight-basis
// enumeration) and deliberately shares no solver code with the library.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tap/instance.hpp"
#include "tap/lp.hpp"
#include "tap/rational.hpp"

namespace oracle {

// Edge indices (into inst.tree_edges) on the tree path between two vertices,
// found by BFS over the undirected edge list.
inline std::vector<int> tree_path_edges(const tap::TapInstance& inst, const std::string& from,
                                        const std::string& to) {
  std::map<std::string, std::vector<std::pair<std::string, int>>> adj;
  for (int e = 0; e < static_cast<int>(inst.tree_edges.size()); ++e) {
    const auto& [a, b] = inst.tree_edges[e];
    adj[a].push_back({b, e});
    adj[b].push_back({a, e});
  }
  std::map<std::string, std::pair<std::string, int>> back;  // vertex -> (prev, edge)
  std::vector<std::string> queue{from};
  std::set<std::string> seen{from};
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const auto& [next, e] : adj[queue[i]]) {
      if (seen.insert(next).second) {
        back[next] = {queue[i], e};
        queue.push_back(next);
      }
    }
  }
  std::vector<int> path;
  std::string at = to;
  while (at != from) {
    auto [prev, e] = back.at(at);
    path.push_back(e);
    at = prev;
  }
  return path;
}

inline std::vector<std::set<int>> link_edge_sets(const tap::TapInstance& inst) {
  std::vector<std::set<int>> sets;
  for (const auto& link : inst.links) {
    auto path = tree_path_edges(inst, link.u, link.v);
    sets.emplace_back(path.begin(), path.end());
  }
  return sets;
}

inline bool covers_all(const tap::TapInstance& inst, const std::set<std::string>& chosen) {
  auto sets = link_edge_sets(inst);
  std::set<int> covered;
  for (int i = 0; i < static_cast<int>(inst.links.size()); ++i) {
    if (chosen.count(inst.links[i].id)) covered.insert(sets[i].begin(), sets[i].end());
  }
  return covered.size() == inst.tree_edges.size();
}

struct ExactResult {
  bool feasible = false;
  tap::Rational cost = 0;
  std::set<std::string> links;
};

// Full scan of all 2^L link subsets.
inline ExactResult min_cost_cover(const tap::TapInstance& inst) {
  const int m = static_cast<int>(inst.links.size());
  auto sets = link_edge_sets(inst);
  ExactResult best;
  std::vector<std::string> best_sorted;
  for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
    std::set<int> covered;
    tap::Rational cost = 0;
    std::vector<std::string> ids;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1) {
        covered.insert(sets[i].begin(), sets[i].end());
        cost += inst.links[i].cost;
        ids.push_back(inst.links[i].id);
      }
    }
    if (covered.size() != inst.tree_edges.size()) continue;
    std::sort(ids.begin(), ids.end());
    if (!best.feasible || cost < best.cost || (cost == best.cost && ids < best_sorted)) {
      best.feasible = true;
      best.cost = cost;
      best.links = {ids.begin(), ids.end()};
      best_sorted = ids;
    }
  }
  return best;
}

// Optimal LP value by enumerating candidate vertices: every maximal feasible
// intersection of n constraints drawn from the rows and the x >= 0 bounds.
inline std::optional<tap::Rational> lp_vertex_optimum(const tap::LpProblem& problem) {
  const int n = static_cast<int>(problem.variables.size());
  std::map<std::string, int> index;
  for (int j = 0; j < n; ++j) index[problem.variables[j]] = j;

  // Constraint list: rows then bounds, as (coeffs, rhs) of a >= inequality.
  std::vector<std::pair<std::vector<tap::Rational>, tap::Rational>> cons;
  for (const auto& row : problem.rows) {
    std::vector<tap::Rational> dense(n, tap::Rational(0));
    for (const auto& [id, c] : row.coeffs) dense[index.at(id)] = c;
    cons.push_back({dense, row.rhs});
  }
  for (int j = 0; j < n; ++j) {
    std::vector<tap::Rational> dense(n, tap::Rational(0));
    dense[j] = 1;
    cons.push_back({dense, tap::Rational(0)});
  }

  std::vector<tap::Rational> objective(n, tap::Rational(0));
  for (const auto& [id, c] : problem.objective) objective[index.at(id)] = c;

  std::optional<tap::Rational> best;
  std::vector<int> pick;
  auto try_basis = [&]() {
    // Solve the square system by Gauss-Jordan; reject singular choices.
    std::vector<std::vector<tap::Rational>> a(n, std::vector<tap::Rational>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = cons[pick[i]].first[j];
      a[i][n] = cons[pick[i]].second;
    }
    for (int col = 0; col < n; ++col) {
      int p = -1;
      for (int i = col; i < n; ++i) {
        if (a[i][col] != 0) {
          p = i;
          break;
        }
      }
      if (p < 0) return;
      std::swap(a[col], a[p]);
      tap::Rational inv = 1 / a[col][col];
      for (int j = col; j <= n; ++j) a[col][j] *= inv;
      for (int i = 0; i < n; ++i) {
        if (i == col || a[i][col] == 0) continue;
        tap::Rational f = a[i][col];
        for (int j = col; j <= n; ++j) a[i][j] -= f * a[col][j];
      }
    }
    std::vector<tap::Rational> x(n);
    for (int i = 0; i < n; ++i) x[i] = a[i][n];
    for (const auto& [coeffs, rhs] : cons) {
      tap::Rational lhs = 0;
      for (int j = 0; j < n; ++j) lhs += coeffs[j] * x[j];
      if (lhs < rhs) return;
    }
    tap::Rational value = 0;
    for (int j = 0; j < n; ++j) value += objective[j] * x[j];
    if (!best || value < *best) best = value;
  };

  auto recurse = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == n) {
      try_basis();
      return;
    }
    for (int i = from; i < static_cast<int>(cons.size()); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  return best;
}

struct CutResult {
  tap::Rational violation;
  std::vector<std::string> subset;  // sorted
};

// Most-violated odd cut by direct enumeration of root-free vertex subsets,
// with the same tie-break (lexicographically smallest subset).
inline std::optional<CutResult> most_violated_odd_cut(
    const tap::TapInstance& inst, const std::map<std::string, tap::Rational>& x) {
  std::vector<std::string> others;
  for (const auto& v : inst.vertices) {
    if (v != inst.root) others.push_back(v);
  }
  std::sort(others.begin(), others.end());
  auto sets = link_edge_sets(inst);
  auto value_of = [&](const std::string& id) {
    auto it = x.find(id);
    return it == x.end() ? tap::Rational(0) : it->second;
  };

  std::optional<CutResult> best;
  const int m = static_cast<int>(others.size());
  for (uint64_t mask = 1; mask < (1ull << m); ++mask) {
    std::set<std::string> s;
    for (int p = 0; p < m; ++p) {
      if ((mask >> p) & 1) s.insert(others[p]);
    }
    std::vector<int> boundary_edges;
    for (int e = 0; e < static_cast<int>(inst.tree_edges.size()); ++e) {
      if (s.count(inst.tree_edges[e].first) != s.count(inst.tree_edges[e].second)) {
        boundary_edges.push_back(e);
      }
    }
    if (boundary_edges.size() % 2 == 0) continue;
    tap::Rational lhs = 0;
    for (int i = 0; i < static_cast<int>(inst.links.size()); ++i) {
      if (s.count(inst.links[i].u) != s.count(inst.links[i].v)) lhs += value_of(inst.links[i].id);
    }
    for (int e : boundary_edges) {
      for (int i = 0; i < static_cast<int>(inst.links.size()); ++i) {
        if (sets[i].count(e)) lhs += value_of(inst.links[i].id);
      }
    }
    tap::Rational violation = tap::Rational(static_cast<long>(boundary_edges.size()) + 1) - lhs;
    if (violation <= 0) continue;
    std::vector<std::string> subset(s.begin(), s.end());
    if (!best || violation > best->violation ||
        (violation == best->violation && subset < best->subset)) {
      best = CutResult{violation, subset};
    }
  }
  return best;
}

}  // namespace oracle
