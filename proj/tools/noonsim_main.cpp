#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "noonsim/errors.hpp"
#include "noonsim/runner.hpp"

namespace {

void add_common_options(CLI::App* sub, std::string& config_path, noonsim::CliOverrides& ov) {
  sub->add_option("-c,--config", config_path, "JSON configuration file")->required();
  sub->add_option("-N,--n-target", ov.n_target, "override the r1 photon target");
  sub->add_option("-M,--m-target", ov.m_target, "override the r2 photon target");
  sub->add_option("--mode", ov.mode, "override the mode: ideal or finite_detuning");
  sub->add_option("--delta-over-g", ov.delta_over_g, "override the parking detuning ratio");
  sub->add_option("-o,--output", ov.output_directory, "override the output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NOON-state synthesis on two microwave resonators coupled to a ladder qutrit:\n"
               "compile the pulse/swap schedule, propagate it, and score the result."};
  app.require_subcommand(1);

  std::string config_path;
  noonsim::CliOverrides overrides;
  CLI::App* run = app.add_subcommand("run", "run the schedule and write report/trajectory/schedule files");
  CLI::App* verify =
      app.add_subcommand("verify", "check propagated boundary states against the ideal composition");
  add_common_options(run, config_path, overrides);
  add_common_options(verify, config_path, overrides);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return noonsim::kExitConfigError;
  }

  try {
    noonsim::RunConfigFile cfg = noonsim::load_config(config_path);
    noonsim::apply_overrides(cfg, overrides);
    if (run->parsed()) return noonsim::run_command(cfg, std::cout);
    return noonsim::verify_command(cfg, std::cout);
  } catch (const noonsim::config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return noonsim::kExitConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return noonsim::kExitConfigError;
  } catch (const noonsim::physics_error& e) {
    std::cerr << "physics check failed: " << e.what() << "\n";
    return noonsim::kExitPhysicsError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
