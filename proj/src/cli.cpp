#include "nlmf/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "nlmf/config.hpp"
#include "nlmf/csv.hpp"
#include "nlmf/presets.hpp"

namespace nlmf {

namespace {

namespace fs = std::filesystem;

bool write_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  out << body;
  out.flush();
  return out.good();
}

template <typename WriteFn>
bool write_stream_file(const fs::path& path, WriteFn&& fn) {
  std::ofstream out(path, std::ios::binary);
  fn(out);
  out.flush();
  return out.good();
}

bool prepare_out_dir(const std::string& dir, std::ostream& err) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    err << "error: cannot create output directory \"" << dir << "\"\n";
    return false;
  }
  return true;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int cmd_run(const RunOptions& opt, std::ostream& out, std::ostream& err) {
  ExperimentConfig cfg;
  try {
    cfg = load_config_file(opt.config_path);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.runs) cfg.monte_carlo_runs = *opt.runs;
  if (cfg.monte_carlo_runs < 1) {
    err << "error: --runs must be >= 1\n";
    return 1;
  }

  if (!prepare_out_dir(opt.out_dir, err)) return 2;

  const auto t0 = std::chrono::steady_clock::now();
  MsdTrace trace;
  try {
    trace = run_monte_carlo(cfg, opt.threads);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  const double wall = seconds_since(t0);

  const fs::path dir(opt.out_dir);
  if (!write_stream_file(dir / "msd_total.csv",
                         [&](std::ostream& os) { write_msd_total_csv(os, trace); })) {
    err << "error: cannot write " << (dir / "msd_total.csv").string() << "\n";
    return 2;
  }
  if (!write_stream_file(dir / "msd_per_node.csv", [&](std::ostream& os) {
        write_msd_per_node_csv(os, trace);
      })) {
    err << "error: cannot write " << (dir / "msd_per_node.csv").string() << "\n";
    return 2;
  }
  if (!write_file(dir / "manifest.txt", manifest_text(cfg, "run", wall))) {
    err << "error: cannot write " << (dir / "manifest.txt").string() << "\n";
    return 2;
  }

  out << "algorithm " << algorithm_name(cfg.algorithm) << ", "
      << cfg.monte_carlo_runs << " runs x " << cfg.iterations
      << " iterations, steady-state msd "
      << format_double(steady_state_msd(trace)) << " ("
      << format_double(to_db(steady_state_msd(trace))) << " dB)\n";
  out << "wrote " << (dir / "msd_total.csv").string() << "\n";
  out << "wrote " << (dir / "msd_per_node.csv").string() << "\n";
  out << "wrote " << (dir / "manifest.txt").string() << "\n";
  return 0;
}

int cmd_compare(const CompareOptions& opt, std::ostream& out, std::ostream& err) {
  if (!is_preset(opt.preset)) {
    err << "error: unknown preset \"" << opt.preset << "\" (valid:";
    for (const std::string& n : preset_names()) err << " " << n;
    err << ")\n";
    return 1;
  }
  ExperimentConfig base = preset_config(opt.preset);
  if (opt.seed) base.seed = *opt.seed;
  if (opt.runs) base.monte_carlo_runs = *opt.runs;
  if (base.monte_carlo_runs < 1) {
    err << "error: --runs must be >= 1\n";
    return 1;
  }

  if (!prepare_out_dir(opt.out_dir, err)) return 2;

  const auto t0 = std::chrono::steady_clock::now();
  // Every algorithm keeps the preset's seed, so all of them see identical
  // input and observation streams.
  std::vector<std::pair<std::string, MsdTrace>> traces;
  for (Algorithm alg : preset_roster(opt.preset)) {
    ExperimentConfig cfg = base;
    cfg.algorithm = alg;
    traces.emplace_back(algorithm_name(alg), run_monte_carlo(cfg, opt.threads));
  }
  const double wall = seconds_since(t0);

  const fs::path dir(opt.out_dir);
  if (!write_stream_file(dir / "msd_compare.csv", [&](std::ostream& os) {
        write_compare_csv(os, traces);
      })) {
    err << "error: cannot write " << (dir / "msd_compare.csv").string() << "\n";
    return 2;
  }
  if (!write_file(dir / "manifest.txt",
                  manifest_text(base, "compare " + opt.preset, wall))) {
    err << "error: cannot write " << (dir / "manifest.txt").string() << "\n";
    return 2;
  }

  out << "algorithm                  steady_state_msd_db\n";
  for (const auto& [name, trace] : traces) {
    out << name;
    for (std::size_t i = name.size(); i < 27; ++i) out << ' ';
    out << format_double(to_db(steady_state_msd(trace))) << "\n";
  }
  out << "wrote " << (dir / "msd_compare.csv").string() << "\n";
  return 0;
}

int cmd_validate(const std::string& config_path, std::ostream& out,
                 std::ostream& err) {
  std::string text;
  {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
      err << "error: " << config_path << ": cannot open config file\n";
      return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  ExperimentConfig cfg;
  std::vector<std::string> issues;
  try {
    issues = check_config_text(text, config_path, &cfg);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (!issues.empty()) {
    err << "invalid config:\n";
    for (const std::string& msg : issues) err << "  " << msg << "\n";
    return 1;
  }
  out << config_to_json_text(cfg);
  return 0;
}

}  // namespace nlmf
