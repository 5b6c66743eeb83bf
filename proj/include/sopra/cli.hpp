#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "config_io.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "experiment.hpp"
#include "simulation.hpp"

namespace sopra {

/// Entry point behind the `sopra` executable:
///
///   sopra run --config PATH [--seed N] --out PATH
///   sopra experiment --config PATH --variant {office-size|coffee-places}
///                    --levels L1,L2,... --reps N --out PATH [--seed N] [--threads N]
///   sopra validate --config PATH
///
/// Returns 0 on success, 64 on usage errors and the Error exit codes for
/// config and I/O failures.
inline int cli_main(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Agent-based simulation of rumour spread through an office floor", "sopra"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;

  auto* run = app.add_subcommand("run", "Simulate one replication and write its tick trace");
  run->add_option("--config", config_path, "Scenario file")->required();
  run->add_option("--seed", seed, "Run seed (defaults to scenario.seed)");
  run->add_option("--out", out_path, "Trace CSV to write")->required();

  std::string variant_name;
  std::vector<int> levels;
  int reps = 30;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* exp = app.add_subcommand("experiment", "Run replicated layout variants and write the result table");
  exp->add_option("--config", config_path, "Scenario file")->required();
  exp->add_option("--variant", variant_name, "office-size or coffee-places")
      ->required()
      ->check(CLI::IsMember({"office-size", "coffee-places"}));
  exp->add_option("--levels", levels, "Comma separated layout levels")->required()->delimiter(',');
  exp->add_option("--reps", reps, "Replications per level")->required();
  exp->add_option("--out", out_path, "Table CSV to write")->required();
  exp->add_option("--seed", seed, "Base seed (defaults to scenario.seed)");
  exp->add_option("--threads", threads, "Worker threads");

  auto* validate = app.add_subcommand("validate", "Check a scenario file and print it with defaults filled in");
  validate->add_option("--config", config_path, "Scenario file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return exit_code::kUsage;
  }

  try {
    const ScenarioConfig config = load_config(config_path);
    if (validate->parsed()) {
      out << serialize_config(config);
      return exit_code::kOk;
    }
    if (run->parsed()) {
      const auto layout = make_layout(static_cast<std::size_t>(config.agent_count), config.layout.office_capacity,
                                      config.layout.coffee_places, config.layout.grid_spacing);
      export_csv(run_replication(config, layout, seed.value_or(config.seed)), out_path);
      return exit_code::kOk;
    }
    ExperimentPlan plan{*parse_layout_variant(variant_name), levels, reps, seed.value_or(config.seed)};
    RunOptions options;
    options.threads = threads;
    export_csv(run_experiment(plan, config, options), out_path);
    return exit_code::kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  }
}

}  // namespace sopra
