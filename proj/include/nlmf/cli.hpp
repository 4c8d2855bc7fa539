#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "nlmf/version.hpp"

namespace nlmf {

struct RunOptions {
  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;   // overrides experiment.seed
  std::optional<std::size_t> runs;     // overrides experiment.monte_carlo_runs
  unsigned threads = 0;                // 0 = hardware default
};

struct CompareOptions {
  std::string preset;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  unsigned threads = 0;
};

// Runs the config's algorithm and writes msd_total.csv, msd_per_node.csv and
// manifest.txt into out_dir. Returns 0 on success, 1 on config errors, 2 on
// I/O errors.
int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err);

// Runs every algorithm of the preset's roster on shared data streams (same
// seed, so all algorithms see identical inputs and observations), writes
// msd_compare.csv plus manifest.txt, and prints a steady-state summary table.
int cmd_compare(const CompareOptions& opt, std::ostream& out, std::ostream& err);

// Parses and checks a config without running; prints either the resolved
// config or every violation with its field path.
int cmd_validate(const std::string& config_path, std::ostream& out,
                 std::ostream& err);

}  // namespace nlmf
