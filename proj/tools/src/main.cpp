#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "alpha_channel/errors.hpp"
#include "commands.hpp"
#include "config.hpp"

using namespace alpha_channel;

int main(int argc, char** argv) {
  CLI::App app{"Reynolds-averaged channel flow, heat-kernel series and the roughness cascade"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir;
  for (const auto& name : cli::command_names()) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON config file")->required();
    sub->add_option("--set", overrides, "override a config key, e.g. kernel.tail_tol=1e-12")
        ->take_all()
        ->allow_extra_args(false);
    sub->add_option("--out", out_dir, "directory for CSV output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    auto cfg = cli::load_config(config_path, overrides);
    const bool color = std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout)) == 1;
    const cli::Io io{std::cout, std::cerr, out_dir.empty() ? cfg.output.directory : out_dir, color};
    const int code = cli::run_command(command, cfg, io);
    std::cout.flush();
    return code;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
  } catch (const RegimeError& e) {
    std::cerr << "regime error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
  } catch (const ResolutionError& e) {
    std::cerr << "resolution error: " << e.what() << "\n";
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return cli::kExitValidation;
}
