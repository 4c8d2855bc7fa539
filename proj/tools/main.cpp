#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nlmf/cli.hpp"

namespace {

unsigned threads_from_env() {
  const char* env = std::getenv("NLMF_SIM_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == nullptr || *end != '\0' || v == 0) {
    std::cerr << "warning: ignoring NLMF_SIM_THREADS=\"" << env
              << "\" (expected a positive integer)\n";
    return 0;
  }
  return static_cast<unsigned>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse NLMF adaptive filter simulator"};
  app.set_version_flag("--version", nlmf::kArtifactVersion);
  app.require_subcommand(1);

  const unsigned env_threads = threads_from_env();

  nlmf::RunOptions run_opt;
  run_opt.threads = env_threads;
  CLI::App* run = app.add_subcommand(
      "run", "Run one experiment config and write MSD traces");
  run->add_option("--config", run_opt.config_path, "Experiment config (JSON)")
      ->required();
  run->add_option("--out", run_opt.out_dir, "Output directory")->required();
  run->add_option("--seed", run_opt.seed, "Override the master seed");
  run->add_option("--runs", run_opt.runs, "Override the Monte Carlo run count");
  run->add_option("--threads", run_opt.threads,
                  "Worker thread count (default: hardware)");

  nlmf::CompareOptions cmp_opt;
  cmp_opt.threads = env_threads;
  CLI::App* cmp = app.add_subcommand(
      "compare", "Run a preset's algorithm roster on shared data streams");
  cmp->add_option("--preset", cmp_opt.preset, "Preset name (fig5, fig6)")
      ->required();
  cmp->add_option("--out", cmp_opt.out_dir, "Output directory")->required();
  cmp->add_option("--seed", cmp_opt.seed, "Override the master seed");
  cmp->add_option("--runs", cmp_opt.runs, "Override the Monte Carlo run count");
  cmp->add_option("--threads", cmp_opt.threads,
                  "Worker thread count (default: hardware)");

  std::string validate_path;
  CLI::App* val = app.add_subcommand(
      "validate", "Check a config and print the resolved settings");
  val->add_option("--config", validate_path, "Experiment config (JSON)")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return nlmf::cmd_run(run_opt, std::cout, std::cerr);
  if (cmp->parsed()) return nlmf::cmd_compare(cmp_opt, std::cout, std::cerr);
  if (val->parsed()) return nlmf::cmd_validate(validate_path, std::cout, std::cerr);
  return 1;
}
