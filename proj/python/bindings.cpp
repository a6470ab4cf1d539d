#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "tap/commands.hpp"
#include "tap/decompose.hpp"
#include "tap/error.hpp"
#include "tap/exact.hpp"
#include "tap/gen.hpp"
#include "tap/io.hpp"
#include "tap/lp.hpp"

namespace py = pybind11;

namespace {

tap::TapInstance instance_from(const std::string& text) {
  return tap::parse_instance(nlohmann::json::parse(text));
}

std::map<std::string, tap::Rational> point_from(const std::map<std::string, std::string>& point) {
  std::map<std::string, tap::Rational> result;
  for (const auto& [id, value] : point) result[id] = tap::parse_rational(value);
  return result;
}

std::vector<std::string> sorted_ids(const std::set<std::string>& ids) {
  return {ids.begin(), ids.end()};
}

}  // namespace

PYBIND11_MODULE(_tapkit, m) {
  m.doc() = "Weighted tree augmentation toolkit: exact solver, LP relaxations, "
            "level-decomposition approximation. Instances travel as JSON "
            "strings; all numbers are exact rational strings.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const tap::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("tight_example", [] { return tap::instance_to_json(tap::tight_example()).dump(); });
  m.def("worst_case_instance",
        [](int k) { return tap::instance_to_json(tap::worst_case_instance(k)).dump(); });
  m.def(
      "generate_instance",
      [](int levels, int branching, double link_density, int cost_max, uint64_t seed) {
        tap::GenParams params{levels, branching, link_density, cost_max, seed};
        return tap::instance_to_json(tap::generate_instance(params)).dump();
      },
      py::arg("levels") = 2, py::arg("branching") = 2, py::arg("link_density") = 0.3,
      py::arg("cost_max") = 10, py::arg("seed") = 0);

  m.def("validate", [](const std::string& text) {
    tap::TapInstance inst = instance_from(text);
    tap::TreeIndex idx = tap::validate(inst);
    py::dict info;
    info["name"] = inst.name;
    info["vertices"] = idx.vertex_count();
    info["tree_edges"] = idx.edge_count();
    info["links"] = static_cast<int>(inst.links.size());
    info["k"] = idx.depth();
    info["leaf_to_leaf"] = tap::is_leaf_to_leaf(inst, idx);
    return info;
  });

  m.def("reduce", [](const std::string& text) {
    return tap::instance_to_json(tap::leaf_to_leaf(instance_from(text)).reduced).dump();
  });

  m.def("solve_exact", [](const std::string& text) {
    tap::Solution sol = tap::solve_exact(instance_from(text));
    py::dict out;
    out["cost"] = tap::to_string(sol.cost);
    out["links"] = sorted_ids(sol.link_ids);
    return out;
  });

  m.def("edge_lp_value", [](const std::string& text) {
    tap::LpSolution sol = tap::solve_lp(tap::build_edge_lp(instance_from(text)));
    return tap::to_string(sol.objective_value);
  });

  m.def("odd_lp_value", [](const std::string& text) {
    return tap::to_string(tap::solve_odd_lp(instance_from(text)).solution.objective_value);
  });

  m.def("approximate", [](const std::string& text) {
    tap::ApproxResult result = tap::approximate(instance_from(text));
    py::dict out;
    out["k"] = result.k;
    out["ratio_bound"] = tap::to_string(result.ratio_bound);
    out["best_level"] = result.best.level;
    out["cost"] = tap::to_string(result.best.cost);
    out["links"] = sorted_ids(result.best.link_ids);
    py::dict costs;
    for (const auto& [l, c] : result.all_costs) {
      costs[py::str(std::to_string(l))] = tap::to_string(c);
    }
    out["all_costs"] = costs;
    return out;
  });

  m.def("check_point_odd_feasible",
        [](const std::string& text, const std::map<std::string, std::string>& point) {
          return tap::check_point_odd_feasible(instance_from(text), point_from(point)).feasible;
        });

  m.def("is_extreme_point",
        [](const std::string& text, const std::map<std::string, std::string>& point) {
          return tap::is_extreme_point(instance_from(text), point_from(point));
        });

  m.def("membership",
        [](const std::string& text, const std::map<std::string, std::string>& point) {
          tap::MembershipResult result =
              tap::tap_polytope_membership(instance_from(text), point_from(point));
          py::dict out;
          out["member"] = result.member;
          py::list weights;
          for (const auto& [solution, weight] : result.weights) {
            py::dict entry;
            entry["links"] = sorted_ids(solution.link_ids);
            entry["weight"] = tap::to_string(weight);
            weights.append(entry);
          }
          out["weights"] = weights;
          return out;
        });

  m.def("ratio_bound", [](int k) { return tap::to_string(tap::ratio_bound(k)); });
  m.def("worst_case_costs", [](int k) {
    std::vector<std::string> out;
    for (const auto& c : tap::worst_case_costs(k)) out.push_back(tap::to_string(c));
    return out;
  });
}
