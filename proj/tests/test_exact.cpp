#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tap/decompose.hpp"
#include "tap/error.hpp"
#include "tap/exact.hpp"
#include "tap/gen.hpp"
#include "tap/lp.hpp"

using namespace tap;

namespace {

TapInstance p3_instance(const Rational& cost = Rational(7)) {
  TapInstance inst;
  inst.name = "p3";
  inst.vertices = {"r", "a", "v", "b"};
  inst.root = "r";
  inst.tree_edges = {{"r", "a"}, {"r", "v"}, {"v", "b"}};
  inst.links = {{"ab", "a", "b", cost}};
  return inst;
}

std::map<std::string, Rational> scaled_te_point(const Rational& alpha) {
  std::map<std::string, Rational> point;
  for (const char* id : {"l1", "l2", "l3", "l4"}) point[id] = Rational(1, 2);
  point["l5"] = alpha / 2;  // in-links scale with alpha
  point["l6"] = alpha;
  return point;
}

}  // namespace

TEST_CASE("is_feasible checks edge coverage") {
  TapInstance te = tight_example();
  CHECK(is_feasible(te, {"l1", "l3", "l4", "l6"}));
  CHECK(!is_feasible(te, {"l1", "l6"}));
  CHECK(is_feasible(te, {"l1", "l2", "l3", "l4", "l5", "l6"}));
  CHECK_THROWS_AS(is_feasible(te, {"nope"}), Error);
}

TEST_CASE("solve_exact on the builtin instances") {
  Solution te = solve_exact(tight_example());
  CHECK(te.cost == 3);
  CHECK(is_feasible(tight_example(), te.link_ids));

  Solution p3 = solve_exact(p3_instance());
  CHECK(p3.cost == 7);
  CHECK(p3.link_ids == std::set<std::string>{"ab"});

  TapInstance unit = tight_example();
  for (auto& link : unit.links) link.cost = 1;
  Solution unit_sol = solve_exact(unit);
  oracle::ExactResult expect = oracle::min_cost_cover(unit);
  CHECK(unit_sol.cost == expect.cost);
  CHECK(unit_sol.cost == 4);

  TapInstance bare = tight_example();
  bare.links.clear();
  CHECK_THROWS_AS(solve_exact(bare), Error);
  try {
    solve_exact(bare);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Infeasible);
  }
}

TEST_CASE("solve_exact matches the naive oracle and is deterministic") {
  for (const auto& inst : corpus::guarantee_corpus(25)) {
    Solution got = solve_exact(inst);
    oracle::ExactResult expect = oracle::min_cost_cover(inst);
    REQUIRE(expect.feasible);
    CHECK(got.cost == expect.cost);
    CHECK(is_feasible(inst, got.link_ids));
    Solution again = solve_exact(inst);
    CHECK(got.link_ids == again.link_ids);
  }
}

TEST_CASE("branch and bound agrees with exhaustive enumeration") {
  ExactOptions exhaustive;
  exhaustive.method = ExactOptions::Method::Exhaustive;
  ExactOptions bb;
  bb.method = ExactOptions::Method::BranchBound;
  for (const auto& inst : corpus::guarantee_corpus(200)) {
    Solution a = solve_exact(inst, exhaustive);
    Solution b = solve_exact(inst, bb);
    CHECK(a.cost == b.cost);
    CHECK(is_feasible(inst, b.link_ids));
  }
}

TEST_CASE("branch and bound copes with all-zero costs") {
  // equal-cost ties prune against the incumbent instead of exploding
  GenParams params;
  params.levels = 3;
  params.branching = 3;
  params.link_density = 0.5;
  params.cost_max = 0;
  params.seed = 203;
  TapInstance inst = generate_instance(params);
  REQUIRE(inst.links.size() > 30);
  ExactOptions bb;
  bb.method = ExactOptions::Method::BranchBound;
  Solution sol = solve_exact(inst, bb);
  CHECK(sol.cost == 0);
  CHECK(is_feasible(inst, sol.link_ids));
  Solution again = solve_exact(inst, bb);
  CHECK(sol.link_ids == again.link_ids);
}

TEST_CASE("exhaustive solving refuses oversized instances") {
  TapInstance inst = tight_example();
  for (int i = 0; i < 25; ++i) {
    inst.links.push_back({"extra" + std::to_string(i), "b1", "b2", Rational(1)});
  }
  ExactOptions exhaustive;
  exhaustive.method = ExactOptions::Method::Exhaustive;
  CHECK_THROWS_AS(solve_exact(inst, exhaustive), Error);
  CHECK(solve_exact(inst).cost == 3);  // auto path still fine
}

TEST_CASE("enumerate_minimal_solutions on the tight example") {
  TapInstance te = tight_example();
  std::vector<Solution> minimal = enumerate_minimal_solutions(te);
  CHECK(minimal.size() == 7);

  std::vector<std::set<std::string>> listed = {
      {"l1", "l6", "l3", "l4"}, {"l1", "l6", "l4", "l5"}, {"l1", "l6", "l3", "l5"},
      {"l2", "l6", "l3", "l4"}, {"l2", "l6", "l4", "l5"}, {"l2", "l6", "l3", "l5"},
  };
  for (const auto& want : listed) {
    bool found = false;
    for (const auto& sol : minimal) {
      if (sol.link_ids == want) found = true;
    }
    CHECK(found);
  }
  for (const auto& sol : minimal) {
    CHECK(sol.link_ids.count("l6") == 1);
    CHECK(is_feasible(te, sol.link_ids));
    for (const auto& dropped : sol.link_ids) {
      std::set<std::string> smaller = sol.link_ids;
      smaller.erase(dropped);
      CHECK(!oracle::covers_all(te, smaller));
    }
  }

  CHECK(enumerate_minimal_solutions(p3_instance()).size() == 1);

  TapInstance bare = tight_example();
  bare.links.clear();
  CHECK(enumerate_minimal_solutions(bare).empty());
}

TEST_CASE("solve_star_exact solves star-shaped instances") {
  TapInstance star;
  star.root = "r";
  star.vertices = {"r", "a", "b", "c"};
  star.tree_edges = {{"r", "a"}, {"r", "b"}, {"r", "c"}};
  star.links = {{"ab", "a", "b", Rational(1)}, {"bc", "b", "c", Rational(1)}};
  StarInstance wrapped{"r", star.tree_edges, {}};
  for (const auto& link : star.links) {
    wrapped.links.push_back({link.u, link.v, link.cost, link.id});
  }
  Solution sol = solve_star_exact(wrapped);
  CHECK(sol.cost == 2);

  StarInstance single{"p", {{"p", "c"}}, {{"c", "p", Rational(3), "up"}}};
  Solution up = solve_star_exact(single);
  CHECK(up.cost == 3);
  CHECK(up.link_ids.size() == 1);

  // an in-link relative to the center is rejected
  StarInstance bad{"r",
                   {{"r", "m"}, {"m", "x"}, {"m", "y"}},
                   {{"x", "y", Rational(1), "xy"}}};
  CHECK_THROWS_AS(solve_star_exact(bad), Error);
  try {
    solve_star_exact(bad);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotStarShaped);
  }
}

TEST_CASE("level-1 stars of the tight example solve like brute force") {
  TapInstance unit = tight_example();
  for (auto& link : unit.links) link.cost = 1;
  TreeIndex idx = validate(unit);
  for (const StarInstance& star : build_level_candidate(unit, idx, 1)) {
    Solution sol = solve_star_exact(star);
    oracle::ExactResult expect = oracle::min_cost_cover(star.to_instance());
    REQUIRE(expect.feasible);
    CHECK(sol.cost == expect.cost);
  }
}

TEST_CASE("star integrality sample") {
  for (const auto& star : corpus::star_corpus(30)) {
    OddLpResult lp = solve_odd_lp(star);
    StarInstance wrapped{star.root, {}, {}};
    TreeIndex idx = validate(star);
    for (int e = 0; e < idx.edge_count(); ++e) wrapped.tree_edges.push_back(idx.edge_names(e));
    for (const auto& link : star.links) {
      wrapped.links.push_back({link.u, link.v, link.cost, link.id});
    }
    Solution exact = solve_star_exact(wrapped);
    CHECK(lp.solution.objective_value == exact.cost);
  }
}

TEST_CASE("membership rejects scaled tight-example points") {
  TapInstance te = tight_example();
  for (const Rational& alpha : {Rational(1), Rational(3, 2), Rational(199, 100)}) {
    MembershipResult result = tap_polytope_membership(te, scaled_te_point(alpha));
    CHECK(!result.member);
  }
}

TEST_CASE("membership accepts incidence vectors with weight one") {
  TapInstance te = tight_example();
  std::map<std::string, Rational> incidence;
  for (const char* id : {"l1", "l3", "l4", "l6"}) incidence[id] = 1;
  MembershipResult result = tap_polytope_membership(te, incidence);
  REQUIRE(result.member);
  REQUIRE(result.weights.size() == 1);
  CHECK(result.weights[0].second == 1);
  CHECK(result.weights[0].first.link_ids == std::set<std::string>{"l1", "l3", "l4", "l6"});
}

TEST_CASE("membership accepts convex combinations of feasible vectors") {
  for (const auto& inst : corpus::guarantee_corpus(10, /*max_links=*/10)) {
    std::vector<Solution> minimal = enumerate_minimal_solutions(inst);
    if (minimal.size() < 2) continue;
    const auto& a = minimal.front().link_ids;
    const auto& b = minimal.back().link_ids;
    std::map<std::string, Rational> midpoint;
    for (const auto& id : a) midpoint[id] += Rational(1, 2);
    for (const auto& id : b) midpoint[id] += Rational(1, 2);
    MembershipResult result = tap_polytope_membership(inst, midpoint);
    CHECK(result.member);
    // returned weights reconstruct the point exactly
    std::map<std::string, Rational> rebuilt;
    Rational total = 0;
    for (const auto& [sol, weight] : result.weights) {
      CHECK(weight > 0);
      total += weight;
      for (const auto& id : sol.link_ids) rebuilt[id] += weight;
    }
    CHECK(total == 1);
    for (const auto& [id, value] : midpoint) CHECK(rebuilt[id] == value);
  }
}

TEST_CASE("membership handles out-of-range coordinates") {
  TapInstance te = tight_example();
  std::map<std::string, Rational> above_one{{"l6", Rational(2)}};
  CHECK(!tap_polytope_membership(te, above_one).member);
  std::map<std::string, Rational> negative{{"l6", Rational(-1)}};
  CHECK(!tap_polytope_membership(te, negative).member);
}
