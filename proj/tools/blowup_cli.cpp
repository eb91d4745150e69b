/*
 * Copyright 2026 The blowup authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "commands.hpp"

using namespace blowup;

namespace {

void add_instance_flags(CLI::App* app, cli::RunConfig& config) {
  app->add_option("--d", config.d, "number of variables of R")->capture_default_str();
  app->add_option("--n", config.n, "size of the alternating matrix (odd)")->capture_default_str();
  app->add_option("--char", config.characteristic, "prime characteristic")->capture_default_str();
  app->add_option("--seed", config.seed, "random seed")->capture_default_str();
}

void add_run_flags(CLI::App* app, cli::RunConfig& config) {
  app->add_option("--checks", config.checks, "comma-separated checks; \"main\" and \"all\" are accepted");
  app->add_option("--budget-pairs", config.budget.max_pairs, "S-pair limit per Groebner basis (0 = none)");
  app->add_option("--budget-terms", config.budget.max_terms, "term limit per Groebner basis (0 = none)");
  app->add_option("--budget-seconds", config.budget_seconds, "wall-clock limit per instance (0 = none)");
  app->add_option("--tier", config.tier, "acceptance tier")
      ->check(CLI::IsMember({"required", "extended"}))
      ->capture_default_str();
  app->add_flag("--timings", config.timings, "include wall time in report JSON");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rees and fiber ideals of linearly presented height three Gorenstein ideals"};
  app.require_subcommand(1);

  cli::RunConfig config;
  config.budget = Budget::from_environment();

  auto* gen = app.add_subcommand("gen", "generate a random instance");
  add_instance_flags(gen, config);
  gen->add_option("-o,--output", config.output, "instance file (stdout when omitted)");

  std::string instance_path;
  bool json = false;
  auto* verify = app.add_subcommand("verify", "verify an instance");
  verify->add_option("instance", instance_path, "instance JSON file (generated from the flags when omitted)");
  add_instance_flags(verify, config);
  add_run_flags(verify, config);
  verify->add_option("-o,--output", config.output, "report JSON file");
  verify->add_flag("--json", json, "print the report JSON instead of the table");

  cli::SweepConfig sweep_config;
  std::optional<std::string> grid;
  sweep_config.jobs = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
  auto* sweep = app.add_subcommand("sweep", "verify a grid of instances and emit CSV");
  sweep->add_option("--grid", grid, "shapes as d:n pairs, e.g. 3:5,4:5 (default: the tier's shapes)");
  sweep->add_option("--seed", config.seed, "first seed")->capture_default_str();
  sweep->add_option("--seeds", sweep_config.count, "seeds per shape")->capture_default_str();
  sweep->add_option("--char", config.characteristic, "prime characteristic")->capture_default_str();
  sweep->add_option("--jobs", sweep_config.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  add_run_flags(sweep, config);
  sweep->add_option("-o,--output", config.output, "CSV file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cli::cmd_gen(config, std::cout, std::cerr);
    if (verify->parsed()) return cli::cmd_verify(config, instance_path, json, std::cout, std::cerr);
    sweep_config.base = config;
    if (grid) sweep_config.grid = cli::parse_grid(*grid);
    return cli::cmd_sweep(sweep_config, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  }
}
