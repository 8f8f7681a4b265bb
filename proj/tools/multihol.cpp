// Copyright 2026 The multihol authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Batch driver. Exit codes: 0 all checks pass, 2 spec or input errors,
// 3 check failures (reports still written), 4 guard exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "multihol/pipeline.hpp"

namespace {

struct CommonArgs {
  std::string spec_path;
  std::string out_dir = ".";
  std::size_t guard = multihol::kDefaultLatticeGuard;
  bool guard_given = false;
  bool oracle = false;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_spec = true) {
  auto* spec = cmd->add_option("--spec", args.spec_path, "group spec file");
  if (needs_spec) spec->required();
  cmd->add_option("--out", args.out_dir, "output directory for report files");
  cmd->add_option("--guard", args.guard, "lattice / closure guard")
      ->each([&args](const std::string&) { args.guard_given = true; });
  cmd->add_flag("--oracle", args.oracle, "also run the brute-force regular-normal oracle");
}

int run_stage(const CommonArgs& args, multihol::PipelineStage stage, bool write_files) {
  multihol::GroupSpecFile spec = multihol::load_group_spec(args.spec_path);
  multihol::PipelineOptions opts;
  opts.guard = args.guard_given ? args.guard : spec.analysis.guard;
  opts.run_oracle = args.oracle || spec.analysis.oracle;

  multihol::PipelineResult result = multihol::run_pipeline(spec, stage, opts);
  std::cout << multihol::report_summary(result);

  if (write_files) {
    namespace fs = std::filesystem;
    fs::create_directories(args.out_dir);
    {
      std::ofstream json_out(fs::path(args.out_dir) / "report.json", std::ios::binary);
      json_out << multihol::report_json(result);
    }
    {
      std::ofstream txt_out(fs::path(args.out_dir) / "summary.txt", std::ios::binary);
      txt_out << multihol::report_summary(result);
    }
    std::cout << "report written to " << (fs::path(args.out_dir) / "report.json").string() << "\n";
  }
  return result.all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multihol: regular subgroup families sharing the holomorph of a semisimple group"};
  app.require_subcommand(1);

  CommonArgs args;
  int formula_n = 0, formula_l = 0;

  auto* cmd_build = app.add_subcommand("build", "construct the group and run the build gates");
  auto* cmd_decompose = app.add_subcommand("decompose", "components and central factors");
  auto* cmd_holomorph = app.add_subcommand("holomorph", "holomorph generators and identities");
  auto* cmd_hset = app.add_subcommand("hset", "the regular-subgroup family with certificates");
  auto* cmd_tgroup = app.add_subcommand("tgroup", "the quotient acting on the family");
  auto* cmd_oracle = app.add_subcommand("oracle-j", "brute-force regular normal subgroups");
  auto* cmd_formula = app.add_subcommand("formula", "evaluate the counting formulas from n and l");
  auto* cmd_report = app.add_subcommand("report", "full pipeline; writes report.json and summary.txt");

  for (CLI::App* c : {cmd_build, cmd_decompose, cmd_holomorph, cmd_hset, cmd_tgroup, cmd_oracle,
                      cmd_report}) {
    add_common(c, args);
  }
  cmd_formula->add_option("--n", formula_n, "number of indecomposable central factors")->required();
  cmd_formula->add_option("--l", formula_l, "number of exceptional factors")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_formula->parsed()) {
      multihol::HBounds b = multihol::h_bounds(formula_n, formula_l);
      std::cout << "n = " << formula_n << ", l = " << formula_l << "\n"
                << "m = " << b.m << "\n"
                << "family size bounds: [" << b.count_lower << ", " << b.count_upper << "]\n"
                << "amalgamated-center family size: 2^" << b.m << " = "
                << multihol::amalgamated_count(formula_n, formula_l) << "\n";
      return 0;
    }
    if (cmd_build->parsed()) return run_stage(args, multihol::PipelineStage::Build, false);
    if (cmd_decompose->parsed()) return run_stage(args, multihol::PipelineStage::Decompose, false);
    if (cmd_holomorph->parsed()) return run_stage(args, multihol::PipelineStage::Holomorph, false);
    if (cmd_hset->parsed()) return run_stage(args, multihol::PipelineStage::HSet, false);
    if (cmd_tgroup->parsed()) return run_stage(args, multihol::PipelineStage::TGroup, false);
    if (cmd_oracle->parsed()) return run_stage(args, multihol::PipelineStage::OracleJ, false);
    if (cmd_report->parsed()) return run_stage(args, multihol::PipelineStage::Report, true);
  } catch (const multihol::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const multihol::GuardError& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
