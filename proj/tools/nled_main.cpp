// Batch driver: validate a scenario config, run the dispersion pipeline, and
// emit the CSV sweep plus the JSON report.
//
//   nled run --config scenario.json [--csv sweep.csv] [--json report.json]
//   nled check --config scenario.json
//
// Exit codes: 0 success, 2 config error, 3 degenerate metric/cone,
// 4 I/O error.

#include <CLI11.hpp>
#include <iostream>

#include "nled/scenario.hpp"

namespace {

int dispatch_error(const std::exception& e) {
  std::cerr << "nled: " << e.what() << "\n";
  if (dynamic_cast<const nled::ConfigError*>(&e)) return 2;
  if (dynamic_cast<const nled::IoError*>(&e)) return 4;
  if (dynamic_cast<const nled::Error*>(&e)) return 3;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"photon dispersion in nonlinear electrodynamics backgrounds"};
  app.set_version_flag("--version", "nled 0.1.0");
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string csv_path;
  std::string json_path;

  CLI::App* run = app.add_subcommand("run", "run a scenario");
  run->add_option("--config", config_path, "scenario JSON file")->required();
  run->add_option("--csv", csv_path, "CSV output path (overrides config)");
  run->add_option("--json", json_path, "JSON report path (overrides config)");

  std::string check_path;
  CLI::App* check = app.add_subcommand("check", "validate a scenario config");
  check->add_option("--config", check_path, "scenario JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const nled::ScenarioConfig cfg = nled::load_config_file(config_path);
      const nled::ScenarioResult result = nled::run_scenario(cfg);
      const std::string report =
          nled::write_outputs(result, cfg, csv_path, json_path);
      if (json_path.empty() && cfg.outputs.json_path.empty())
        std::cout << report;
      return 0;
    }
    if (check->parsed()) {
      nled::load_config_file(check_path);
      std::cout << "config ok\n";
      return 0;
    }
  } catch (const std::exception& e) {
    return dispatch_error(e);
  }

  std::cerr << app.help();
  return 2;
}
