#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "ulearn/cli.hpp"
#include "ulearn/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Simulator for social learning with uncertain statistical models"};
  app.set_version_flag("--version", std::string(ulearn::kVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed_override;

  auto* run = app.add_subcommand("run", "Run the configured Monte Carlo campaign");
  run->add_option("--config", config_path, "Experiment config file (JSON)")->required();
  run->add_option("--out", out_dir, "Output directory for curves.csv/table.csv/manifest.json")
      ->required();
  std::uint64_t seed_value = 0;
  auto* seed_opt = run->add_option("--seed", seed_value, "Override the config's master seed");

  auto* check = app.add_subcommand("check", "Validate the configured graph sequence");
  check->add_option("--config", config_path, "Experiment config file (JSON)")->required();

  ulearn::Prop1Args prop1_args;
  auto* prop1 = app.add_subcommand(
      "prop1", "Empirical KL-flip probability under finite evidence");
  prop1->add_option("--p-star", prop1_args.p_star, "True distribution, e.g. 0.6,0.4")
      ->required();
  prop1->add_option("--p-alt", prop1_args.p_alt, "Wrong hypothesis distribution")
      ->required();
  prop1->add_option("--r1", prop1_args.r1, "Evidence draws for the wrong hypothesis");
  prop1->add_option("--r2", prop1_args.r2, "Evidence draws for the true hypothesis");
  prop1->add_option("--trials", prop1_args.trials, "Number of evidence draws");
  prop1->add_option("--seed", prop1_args.seed, "Master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ulearn::kExitOk : ulearn::kExitInvalid;
  }

  if (run->parsed()) {
    if (seed_opt->count() > 0) seed_override = seed_value;
    return ulearn::cmd_run(config_path, out_dir, seed_override, std::cout, std::cerr);
  }
  if (check->parsed()) return ulearn::cmd_check(config_path, std::cout, std::cerr);
  return ulearn::cmd_prop1(prop1_args, std::cout, std::cerr);
}
