#include "nlmf/presets.hpp"

#include "nlmf/config.hpp"
#include "nlmf/errors.hpp"

namespace nlmf {

namespace {

// Shared tuning for both comparison presets: the sparse target vector, the
// trimodal observation noise and one parameter set for every algorithm.
// The text below is byte-identical to configs/<name>.json.
const std::string kFig5Text = R"({
  "experiment": {
    "algorithm": "sparse_nlmf",
    "true_weights": [0.0, 0.9, 0.03, 0.7, 0.01, 0.0, 0.09, 0.0, 0.0, 0.01, 0.0, 0.0, 0.01, 0.0, 0.0, 0.015, 0.0],
    "iterations": 6000,
    "monte_carlo_runs": 200,
    "seed": 42,
    "input_variance": 1.0
  },
  "filter": {
    "mu": 0.5,
    "lambda": 0.005,
    "beta": 5.0
  },
  "noise": {
    "components": [
      { "weight": 0.3333333333333333, "mean": -1.0, "variance": 0.01 },
      { "weight": 0.3333333333333333, "mean": 0.0, "variance": 0.01 },
      { "weight": 0.3333333333333333, "mean": 1.0, "variance": 0.01 }
    ]
  }
}
)";

const std::string kFig6Text = R"({
  "experiment": {
    "algorithm": "distributed_sparse_nlmf",
    "true_weights": [0.0, 0.9, 0.03, 0.7, 0.01, 0.0, 0.09, 0.0, 0.0, 0.01, 0.0, 0.0, 0.01, 0.0, 0.0, 0.015, 0.0],
    "iterations": 6000,
    "monte_carlo_runs": 200,
    "seed": 42,
    "input_variance": 1.0
  },
  "filter": {
    "mu": 0.5,
    "lambda": 0.005,
    "beta": 5.0
  },
  "noise": {
    "components": [
      { "weight": 0.3333333333333333, "mean": -1.0, "variance": 0.01 },
      { "weight": 0.3333333333333333, "mean": 0.0, "variance": 0.01 },
      { "weight": 0.3333333333333333, "mean": 1.0, "variance": 0.01 }
    ]
  },
  "topology": {
    "kind": "circulant",
    "nodes": 10,
    "offsets": [1, 5]
  }
}
)";

const std::vector<std::string> kNames = {"fig5", "fig6"};

}  // namespace

const std::vector<std::string>& preset_names() { return kNames; }

bool is_preset(const std::string& name) {
  for (const std::string& n : kNames) {
    if (n == name) return true;
  }
  return false;
}

const std::string& preset_config_text(const std::string& name) {
  if (name == "fig5") return kFig5Text;
  if (name == "fig6") return kFig6Text;
  throw ConfigError("unknown preset \"" + name + "\" (valid: fig5, fig6)");
}

ExperimentConfig preset_config(const std::string& name) {
  return load_config_text(preset_config_text(name), "preset:" + name);
}

std::vector<Algorithm> preset_roster(const std::string& name) {
  if (name == "fig5") {
    return {Algorithm::Nlms, Algorithm::SparseNlms, Algorithm::SparseNlmf};
  }
  if (name == "fig6") {
    return {Algorithm::SparseNlms, Algorithm::SparseNlmf,
            Algorithm::DistributedSparseNlmf};
  }
  throw ConfigError("unknown preset \"" + name + "\" (valid: fig5, fig6)");
}

}  // namespace nlmf
