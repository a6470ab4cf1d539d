#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "tap/commands.hpp"
#include "tap/decompose.hpp"
#include "tap/error.hpp"
#include "tap/gen.hpp"
#include "tap/io.hpp"

using namespace tap;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const OrderedJson& doc)
      : path("cli_test_" + name + ".json") {
    std::ofstream out(path);
    out << doc.dump(2) << "\n";
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("instance json round trip") {
  TapInstance te = tight_example();
  OrderedJson doc = instance_to_json(te);
  TapInstance parsed = parse_instance(doc);
  CHECK(parsed.name == te.name);
  CHECK(parsed.vertices == te.vertices);
  CHECK(parsed.root == te.root);
  CHECK(parsed.tree_edges == te.tree_edges);
  REQUIRE(parsed.links.size() == te.links.size());
  for (size_t i = 0; i < te.links.size(); ++i) {
    CHECK(parsed.links[i].id == te.links[i].id);
    CHECK(parsed.links[i].cost == te.links[i].cost);
  }
  CHECK(instance_to_json(parsed) == doc);
}

TEST_CASE("instance parsing is strict") {
  OrderedJson doc = instance_to_json(tight_example());
  doc["surprise"] = 1;
  CHECK_THROWS_AS(parse_instance(doc), Error);

  OrderedJson missing = instance_to_json(tight_example());
  missing.erase("root");
  CHECK_THROWS_AS(parse_instance(missing), Error);

  OrderedJson bad_cost = instance_to_json(tight_example());
  bad_cost["links"][0]["cost"] = 1.5;  // floats are rejected, strings are not
  CHECK_THROWS_AS(parse_instance(bad_cost), Error);

  OrderedJson int_cost = instance_to_json(tight_example());
  int_cost["links"][0]["cost"] = 3;
  CHECK(parse_instance(int_cost).links[0].cost == 3);

  OrderedJson frac = instance_to_json(tight_example());
  frac["links"][0]["cost"] = "5/2";
  CHECK(parse_instance(frac).links[0].cost == Rational(5, 2));
  frac["links"][0]["cost"] = "1.25";
  CHECK(parse_instance(frac).links[0].cost == Rational(5, 4));
}

TEST_CASE("rational parsing and rendering") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK(parse_rational("10/4") == Rational(5, 2));
  CHECK(parse_rational("1.25") == Rational(5, 4));
  CHECK(parse_rational("-2") == -2);
  CHECK_THROWS_AS(parse_rational("a/2"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK(to_string(Rational(5, 2)) == "5/2");
  CHECK(to_string(Rational(4)) == "4");
  CHECK(to_string(parse_rational("10/4")) == "5/2");
}

TEST_CASE("generator is deterministic and feasible") {
  GenParams params;
  params.levels = 3;
  params.branching = 2;
  params.link_density = 0.25;
  params.cost_max = 9;
  params.seed = 7;
  TapInstance a = generate_instance(params);
  TapInstance b = generate_instance(params);
  CHECK(instance_to_json(a).dump() == instance_to_json(b).dump());

  for (uint64_t seed = 0; seed < 6; ++seed) {
    GenParams p = params;
    p.seed = seed;
    TapInstance inst = generate_instance(p);
    TreeIndex idx = validate(inst);
    CoverMap cover(inst, idx);
    for (int e = 0; e < idx.edge_count(); ++e) CHECK(!cover.cov(e).empty());
    CHECK(is_leaf_to_leaf(inst, idx));
  }
}

TEST_CASE("builtin instances") {
  TapInstance te = tight_example();
  TreeIndex idx = validate(te);
  CHECK(te.vertices.size() == 8);
  CHECK(te.links.size() == 6);
  CHECK(idx.depth() == 2);
  CHECK(te.links[5].cost == 0);  // l6

  for (int k = 1; k <= 5; ++k) {
    TapInstance wc = worst_case_instance(k);
    TreeIndex widx = validate(wc);
    CHECK(widx.depth() == k);
    auto buckets = partition_by_lca_level(widx, wc.links);
    std::vector<Rational> expected = worst_case_costs(k);
    for (int q = 1; q <= k; ++q) {
      for (int i : buckets[q]) CHECK(wc.links[i].cost == expected[q - 1]);
    }
  }
}

TEST_CASE("command bodies") {
  TempFile te("te", instance_to_json(tight_example()));

  OrderedJson validated = cmd_validate(te.path);
  CHECK(validated["valid"] == true);
  CHECK(validated["k"] == 2);

  OrderedJson reduced = cmd_reduce(te.path, "");
  TapInstance parsed = parse_instance(reduced);
  CHECK(parsed.vertices.size() == 12);
  // reducing again re-validates; the internal node set (r, v) is unchanged,
  // so another pass adds two leaves per internal node
  TempFile red("red", reduced);
  OrderedJson twice = cmd_reduce(red.path, "");
  TapInstance parsed2 = parse_instance(twice);
  CHECK(parsed2.vertices.size() == parsed.vertices.size() + 4);
  CHECK(validate(parsed2).depth() == 2);

  OrderedJson exact = cmd_exact(te.path);
  CHECK(exact["cost"] == "3");

  OrderedJson lp_edge = cmd_lp(te.path, "edge");
  CHECK(lp_edge["value"] == "9/4");
  OrderedJson lp_odd = cmd_lp(te.path, "odd");
  CHECK(parse_rational(lp_odd["value"].get<std::string>()) <= Rational(5, 2));

  OrderedJson approx = cmd_approx(te.path, 0, false);
  CHECK(approx["ratio_bound"] == "3/2");
  CHECK(approx["cost"] == "3");

  OrderedJson one_level = cmd_approx(te.path, 1, false);
  CHECK(one_level["level"] == 1);

  OrderedJson gap = cmd_gap(te.path, false);
  CHECK(gap["exact_value"] == "3");
  CHECK(parse_rational(gap["observed_gap_odd"].get<std::string>()) >= Rational(6, 5));
  CHECK(gap["k"] == 2);
  // every numeric report field is an exact rational string
  for (const char* key : {"edge_lp_value", "odd_lp_value", "exact_value", "approx_value",
                          "ratio_bound", "observed_ratio", "observed_gap_edge",
                          "observed_gap_odd"}) {
    REQUIRE(gap[key].is_string());
    parse_rational(gap[key].get<std::string>());
  }

  OrderedJson point;
  point["values"] = {{"l1", "1/2"}, {"l2", "1/2"}, {"l3", "1/2"},
                     {"l4", "1/2"}, {"l5", "1/2"}, {"l6", "1"}};
  TempFile pt("pt", point);
  OrderedJson membership = cmd_membership(te.path, pt.path);
  CHECK(membership["member"] == false);
}

TEST_CASE("cmd_exact reports infeasibility") {
  TapInstance bare = tight_example();
  bare.links.clear();
  TempFile f("bare", instance_to_json(bare));
  try {
    cmd_exact(f.path);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Infeasible);
  }
}

TEST_CASE("cmd_gen and cmd_paper emit parseable instances") {
  GenParams params;
  params.seed = 11;
  OrderedJson gen = cmd_gen(params, "");
  TapInstance inst = parse_instance(gen);
  validate(inst);

  OrderedJson paper = cmd_paper("tight-example", 0, "");
  CHECK(parse_instance(paper).links.size() == 6);
  OrderedJson wc = cmd_paper("worst-case", 4, "");
  CHECK(validate(parse_instance(wc)).depth() == 4);
  CHECK_THROWS_AS(cmd_paper("nope", 0, ""), Error);
}

TEST_CASE("point files parse with defaults") {
  OrderedJson doc;
  doc["values"] = {{"l1", "1/2"}};
  auto point = parse_point(doc);
  CHECK(point.at("l1") == Rational(1, 2));
  CHECK(point.count("l2") == 0);

  OrderedJson bad;
  bad["values"] = {{"l1", "1/2"}};
  bad["extra"] = 3;
  CHECK_THROWS_AS(parse_point(bad), Error);
}
