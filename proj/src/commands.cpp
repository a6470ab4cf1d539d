#include "tap/commands.hpp"

#include <fstream>
#include <stdexcept>

#include "tap/decompose.hpp"
#include "tap/error.hpp"
#include "tap/exact.hpp"
#include "tap/lp.hpp"

namespace tap {

namespace {

void maybe_write(const OrderedJson& doc, const std::string& out_path) {
  if (out_path.empty()) return;
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
  out << doc.dump(2) << "\n";
}

OrderedJson values_to_json(const std::map<std::string, Rational>& values) {
  OrderedJson doc = OrderedJson::object();
  for (const auto& [id, value] : values) doc[id] = to_string(value);
  return doc;
}

OrderedJson cut_to_json(const OddCut& cut) {
  OrderedJson doc;
  doc["S"] = cut.subset;
  doc["tree_boundary"] = OrderedJson::array();
  for (const auto& [a, b] : cut.tree_boundary) doc["tree_boundary"].push_back({a, b});
  doc["link_boundary"] = cut.link_boundary;
  return doc;
}

}  // namespace

OrderedJson cmd_validate(const std::string& path) {
  TapInstance inst = load_instance(path);
  TreeIndex idx = validate(inst);
  OrderedJson doc;
  doc["instance"] = inst.name;
  doc["valid"] = true;
  doc["vertices"] = idx.vertex_count();
  doc["tree_edges"] = idx.edge_count();
  doc["links"] = static_cast<int>(inst.links.size());
  doc["k"] = idx.depth();
  doc["leaf_to_leaf"] = is_leaf_to_leaf(inst, idx);
  return doc;
}

OrderedJson cmd_reduce(const std::string& path, const std::string& out_path) {
  TapInstance inst = load_instance(path);
  LeafToLeafResult reduction = leaf_to_leaf(inst);
  validate(reduction.reduced);
  OrderedJson doc = instance_to_json(reduction.reduced);
  maybe_write(doc, out_path);
  return doc;
}

OrderedJson cmd_exact(const std::string& path) {
  TapInstance inst = load_instance(path);
  validate(inst);
  Solution solution = solve_exact(inst);
  OrderedJson doc;
  doc["instance"] = inst.name;
  doc["cost"] = to_string(solution.cost);
  doc["links"] = solution.link_ids;
  return doc;
}

OrderedJson cmd_lp(const std::string& path, const std::string& relaxation) {
  TapInstance inst = load_instance(path);
  validate(inst);
  OrderedJson doc;
  doc["instance"] = inst.name;
  doc["relaxation"] = relaxation;
  if (relaxation == "edge") {
    LpSolution solution = solve_lp(build_edge_lp(inst));
    doc["status"] = solution.status == SolveStatus::Optimal ? "optimal" : "infeasible";
    doc["value"] = to_string(solution.objective_value);
    doc["solution"] = values_to_json(solution.values);
  } else if (relaxation == "odd") {
    OddLpResult result = solve_odd_lp(inst);
    doc["status"] = "optimal";
    doc["value"] = to_string(result.solution.objective_value);
    doc["solution"] = values_to_json(result.solution.values);
    doc["cuts"] = OrderedJson::array();
    for (const auto& cut : result.cuts) doc["cuts"].push_back(cut_to_json(cut));
  } else {
    throw Error(ErrorCode::ParseError, "relaxation must be 'edge' or 'odd'");
  }
  return doc;
}

OrderedJson cmd_approx(const std::string& path, int level, bool parallel) {
  TapInstance inst = load_instance(path);
  TreeIndex idx = validate(inst);
  OrderedJson doc;
  doc["instance"] = inst.name;
  if (level > 0) {
    LeafToLeafResult reduction = leaf_to_leaf(inst);
    TreeIndex reduced_idx = validate(reduction.reduced);
    Candidate candidate = solve_level_candidate(reduction.reduced, reduced_idx, level);
    doc["level"] = level;
    doc["cost"] = to_string(candidate.cost);
    std::set<std::string> mapped = reduction.backward_solution(candidate.link_ids);
    doc["links"] = mapped;
    doc["stars"] = OrderedJson::array();
    for (const auto& per : candidate.per_star) {
      OrderedJson star;
      star["center"] = per.center;
      star["chosen"] = OrderedJson::array();
      for (const auto& t : per.chosen) {
        star["chosen"].push_back({{"u", t.u}, {"v", t.v}, {"origin", t.origin}});
      }
      doc["stars"].push_back(std::move(star));
    }
    return doc;
  }
  (void)idx;
  ApproxResult result = approximate(inst, parallel);
  doc["k"] = result.k;
  doc["ratio_bound"] = to_string(result.ratio_bound);
  doc["best_level"] = result.best.level;
  doc["cost"] = to_string(result.best.cost);
  doc["links"] = result.best.link_ids;
  OrderedJson costs = OrderedJson::object();
  for (const auto& [l, cost] : result.all_costs) costs[std::to_string(l)] = to_string(cost);
  doc["all_costs"] = std::move(costs);
  return doc;
}

OrderedJson cmd_gap(const std::string& path, bool parallel) {
  TapInstance inst = load_instance(path);
  TreeIndex idx = validate(inst);

  LpSolution edge = solve_lp(build_edge_lp(inst));
  if (edge.status != SolveStatus::Optimal) {
    throw Error(ErrorCode::Infeasible, "edge relaxation infeasible");
  }
  OddLpResult odd = solve_odd_lp(inst);
  Solution exact = solve_exact(inst);
  ApproxResult approx = approximate(inst, parallel);

  const Rational& edge_value = edge.objective_value;
  const Rational& odd_value = odd.solution.objective_value;
  if (odd_value < edge_value) throw std::logic_error("odd value below edge value");
  if (approx.best.cost < exact.cost) throw std::logic_error("approximation beat the optimum");

  // Ratios degenerate to 1 when the denominator (and hence the numerator)
  // vanishes.
  auto ratio = [](const Rational& num, const Rational& den) {
    return den == 0 ? std::string("1") : to_string(Rational(num / den));
  };

  OrderedJson doc;
  doc["instance"] = inst.name;
  doc["k"] = idx.depth();
  doc["edge_lp_value"] = to_string(edge_value);
  doc["odd_lp_value"] = to_string(odd_value);
  doc["exact_value"] = to_string(exact.cost);
  doc["approx_value"] = to_string(approx.best.cost);
  doc["ratio_bound"] = to_string(approx.ratio_bound);
  doc["observed_ratio"] = ratio(approx.best.cost, exact.cost);
  doc["observed_gap_edge"] = ratio(exact.cost, edge_value);
  doc["observed_gap_odd"] = ratio(exact.cost, odd_value);
  return doc;
}

OrderedJson cmd_membership(const std::string& path, const std::string& point_path) {
  TapInstance inst = load_instance(path);
  validate(inst);
  std::map<std::string, Rational> point = load_point(point_path);
  MembershipResult result = tap_polytope_membership(inst, point);
  OrderedJson doc;
  doc["instance"] = inst.name;
  doc["member"] = result.member;
  if (result.member) {
    doc["weights"] = OrderedJson::array();
    for (const auto& [solution, weight] : result.weights) {
      OrderedJson entry;
      entry["links"] = solution.link_ids;
      entry["weight"] = to_string(weight);
      doc["weights"].push_back(std::move(entry));
    }
  }
  return doc;
}

OrderedJson cmd_gen(const GenParams& params, const std::string& out_path) {
  TapInstance inst = generate_instance(params);
  validate(inst);
  OrderedJson doc = instance_to_json(inst);
  maybe_write(doc, out_path);
  return doc;
}

OrderedJson cmd_paper(const std::string& case_name, int k, const std::string& out_path) {
  TapInstance inst;
  if (case_name == "tight-example") {
    inst = tight_example();
  } else if (case_name == "worst-case") {
    inst = worst_case_instance(k);
  } else {
    throw Error(ErrorCode::ParseError, "case must be 'tight-example' or 'worst-case'");
  }
  validate(inst);
  OrderedJson doc = instance_to_json(inst);
  maybe_write(doc, out_path);
  return doc;
}

}  // namespace tap
