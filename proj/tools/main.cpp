#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace spintorus::cli;

  CLI::App app{"Antiperiodic su(3) chain: certificates, spectra, Bethe roots and eigenstates"};
  app.require_subcommand(1);

  std::string config_path;
  CommandOptions options;
  for (const char* name : {"verify", "spectrum", "bae", "reconstruct", "homog"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "run configuration (JSON)")->required();
    sub->add_flag("--strict", options.strict, "non-convergence and tolerance misses fail the run");
    sub->add_flag("--csv", options.csv, "also write the tabular section as CSV");
    sub->add_option("--out", options.out_dir, "directory for the report files");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  RunConfig config;
  try {
    config = load_run_config(config_path);
    (void)config.spec();
  } catch (const spintorus::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  const auto result = run_command(app.get_subcommands().front()->get_name(), config, options, std::cerr);
  if (!result.report_path.empty()) std::cout << result.report_path << "\n";
  return result.exit_code;
}
