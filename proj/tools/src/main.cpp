#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "duet/error.hpp"
#include "duet_cli/config.hpp"
#include "duet_cli/presets.hpp"
#include "duet_cli/tasks.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Steady state of two coupled oscillators with separate heat baths"};
  std::string config_path;
  std::string task;
  std::string out;
  std::string preset;
  std::optional<std::size_t> omega_points;
  bool print_config = false;
  app.add_option("--config", config_path, "key = value configuration file (applied on top of --preset)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--task", task, "absorption | heat-spectrum | heat-sweep | covariance | entanglement-sweep | "
                                  "witness-spectra | fd-check | oracle-check");
  app.add_option("--out", out, "output CSV path");
  app.add_option("--preset", preset, "figure preset (fig1a, fig1b, fig1c, fig3left[-a|-b|-c], fig3right, "
                                     "fig4[-a|-c], fig5)");
  app.add_option("--omega-points", omega_points, "uniform frequency grid size (0 = adaptive)");
  app.add_flag("--print-config", print_config, "write the resolved configuration to stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    using namespace duet::cli;
    RunConfig config = preset.empty() ? RunConfig{} : duet::cli::preset(preset);
    config = load_config(config_path, config);
    if (!task.empty()) config.task = parse_task(task);
    if (!out.empty()) config.output = out;
    if (omega_points) config.grid.points = *omega_points;
    validate(config);
    if (print_config) std::cout << emit_config(config);
    run_task(config);
  } catch (const std::exception& e) {
    const int code = duet::cli::exit_code_for(e);
    std::cerr << "duet: " << e.what() << '\n';
    return code;
  }
  return EXIT_SUCCESS;
}
