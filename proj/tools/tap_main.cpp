#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tap/commands.hpp"
#include "tap/error.hpp"

namespace {

int error_exit_code(tap::ErrorCode code) {
  switch (code) {
    case tap::ErrorCode::Infeasible:
    case tap::ErrorCode::UncoverableEdge:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted tree augmentation toolkit"};
  app.require_subcommand(1);

  std::string path;
  std::string out_path;
  std::string relaxation = "edge";
  std::string point_path;
  std::string paper_case;
  int level = 0;
  int paper_k = 3;
  bool parallel = false;
  tap::GenParams gen_params;

  auto* validate = app.add_subcommand("validate", "Check an instance file");
  validate->add_option("path", path)->required();

  auto* reduce = app.add_subcommand("reduce", "Apply the leaf-to-leaf reduction");
  reduce->add_option("path", path)->required();
  reduce->add_option("out", out_path, "Also write the reduced instance here");

  auto* exact = app.add_subcommand("exact", "Solve to optimality");
  exact->add_option("path", path)->required();

  auto* lp = app.add_subcommand("lp", "Solve a relaxation");
  lp->add_option("path", path)->required();
  lp->add_option("--relaxation", relaxation, "edge or odd")
      ->check(CLI::IsMember({"edge", "odd"}));

  auto* approx = app.add_subcommand("approx", "Level-decomposition approximation");
  approx->add_option("path", path)->required();
  approx->add_option("--level", level, "Solve a single level candidate");
  approx->add_flag("--parallel", parallel, "Solve level candidates concurrently");

  auto* gap = app.add_subcommand("gap", "Relaxation and approximation gap report");
  gap->add_option("path", path)->required();
  gap->add_flag("--parallel", parallel, "Solve level candidates concurrently");

  auto* membership = app.add_subcommand("membership", "Convex-hull membership of a point");
  membership->add_option("path", path)->required();
  membership->add_option("--point", point_path, "Point file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--levels", gen_params.levels, "Internal levels")->check(CLI::PositiveNumber);
  gen->add_option("--branching", gen_params.branching, "Children per internal node")
      ->check(CLI::PositiveNumber);
  gen->add_option("--link-density", gen_params.link_density, "Leaf-pair link probability")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--cost-max", gen_params.cost_max, "Costs drawn from 0..cost-max")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_params.seed, "RNG seed");
  gen->add_option("out", out_path, "Also write the instance here");

  auto* paper = app.add_subcommand("paper", "Emit a builtin instance");
  paper->add_option("--case", paper_case, "tight-example or worst-case")->required();
  paper->add_option("--k", paper_k, "Levels for worst-case")->check(CLI::PositiveNumber);
  paper->add_option("out", out_path, "Also write the instance here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    tap::OrderedJson doc;
    if (*validate) doc = tap::cmd_validate(path);
    else if (*reduce) doc = tap::cmd_reduce(path, out_path);
    else if (*exact) doc = tap::cmd_exact(path);
    else if (*lp) doc = tap::cmd_lp(path, relaxation);
    else if (*approx) doc = tap::cmd_approx(path, level, parallel);
    else if (*gap) doc = tap::cmd_gap(path, parallel);
    else if (*membership) doc = tap::cmd_membership(path, point_path);
    else if (*gen) doc = tap::cmd_gen(gen_params, out_path);
    else if (*paper) doc = tap::cmd_paper(paper_case, paper_k, out_path);
    std::cout << doc.dump(2) << "\n";
    return 0;
  } catch (const tap::Error& e) {
    nlohmann::ordered_json err;
    err["error"] = tap::error_code_name(e.code());
    err["detail"] = e.detail();
    std::cerr << err.dump(2) << "\n";
    return error_exit_code(e.code());
  } catch (const std::exception& e) {
    nlohmann::ordered_json err;
    err["error"] = "internal";
    err["detail"] = e.what();
    std::cerr << err.dump(2) << "\n";
    return 2;
  }
}
