#include "nlmf/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "nlmf/csv.hpp"
#include "nlmf/version.hpp"

namespace nlmf {

namespace {

using json = nlohmann::ordered_json;

constexpr double kWeightSumTol = 1e-12;

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError(origin + ":" + std::to_string(line) + ":" +
                      std::to_string(col) + ": " + e.what());
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError(path + ": " + msg);
}

const json& need_object(const json& obj, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  return obj;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail(path.empty() ? item.key() : path + "." + item.key(),
           "unknown key");
    }
  }
}

double need_double(const json& obj, const std::string& path) {
  if (!obj.is_number()) fail(path, "expected a number");
  return obj.get<double>();
}

std::size_t need_count(const json& obj, const std::string& path) {
  if (!obj.is_number_unsigned()) fail(path, "expected a nonnegative integer");
  return obj.get<std::size_t>();
}

std::uint64_t need_u64(const json& obj, const std::string& path) {
  if (!obj.is_number_unsigned()) fail(path, "expected a nonnegative integer");
  return obj.get<std::uint64_t>();
}

std::vector<double> need_number_array(const json& obj, const std::string& path) {
  if (!obj.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(obj.size());
  for (std::size_t i = 0; i < obj.size(); ++i) {
    if (!obj[i].is_number()) {
      fail(path + "[" + std::to_string(i) + "]", "expected a number");
    }
    out.push_back(obj[i].get<double>());
  }
  return out;
}

struct RawTopology {
  bool circulant = false;
  std::size_t nodes = 0;
  std::vector<std::size_t> offsets;
  std::vector<std::vector<std::size_t>> neighborhoods;
};

struct RawConfig {
  std::string algorithm;
  WeightVector true_weights = default_true_weights();
  std::optional<std::size_t> order;
  std::size_t iterations = 2000;
  std::size_t monte_carlo_runs = 200;
  std::uint64_t seed = 1;
  double input_variance = 1.0;
  FilterParams params;
  std::vector<GaussianComponent> noise_components;
  bool noise_given = false;
  std::optional<RawTopology> topology;
};

RawConfig parse_raw(const json& root) {
  need_object(root, "config");
  check_keys(root, "", {"experiment", "filter", "noise", "topology"});
  if (!root.contains("experiment")) fail("experiment", "section is required");

  RawConfig raw;
  const json& exp = need_object(root["experiment"], "experiment");
  check_keys(exp, "experiment",
             {"algorithm", "true_weights", "order", "iterations",
              "monte_carlo_runs", "seed", "input_variance"});
  if (!exp.contains("algorithm")) fail("experiment.algorithm", "is required");
  if (!exp["algorithm"].is_string()) {
    fail("experiment.algorithm", "expected a string");
  }
  raw.algorithm = exp["algorithm"].get<std::string>();
  if (exp.contains("true_weights")) {
    raw.true_weights = need_number_array(exp["true_weights"],
                                         "experiment.true_weights");
  }
  if (exp.contains("order")) {
    raw.order = need_count(exp["order"], "experiment.order");
  }
  if (exp.contains("iterations")) {
    raw.iterations = need_count(exp["iterations"], "experiment.iterations");
  }
  if (exp.contains("monte_carlo_runs")) {
    raw.monte_carlo_runs =
        need_count(exp["monte_carlo_runs"], "experiment.monte_carlo_runs");
  }
  if (exp.contains("seed")) raw.seed = need_u64(exp["seed"], "experiment.seed");
  if (exp.contains("input_variance")) {
    raw.input_variance =
        need_double(exp["input_variance"], "experiment.input_variance");
  }

  if (root.contains("filter")) {
    const json& filt = need_object(root["filter"], "filter");
    check_keys(filt, "filter", {"mu", "lambda", "beta"});
    if (filt.contains("mu")) raw.params.mu = need_double(filt["mu"], "filter.mu");
    if (filt.contains("lambda")) {
      raw.params.lambda = need_double(filt["lambda"], "filter.lambda");
    }
    if (filt.contains("beta")) {
      raw.params.beta = need_double(filt["beta"], "filter.beta");
    }
  }

  if (root.contains("noise")) {
    raw.noise_given = true;
    const json& noise = need_object(root["noise"], "noise");
    check_keys(noise, "noise", {"components"});
    if (!noise.contains("components")) {
      fail("noise.components", "is required");
    }
    const json& comps = noise["components"];
    if (!comps.is_array() || comps.empty()) {
      fail("noise.components", "expected a nonempty array");
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const std::string path = "noise.components[" + std::to_string(i) + "]";
      const json& c = need_object(comps[i], path);
      check_keys(c, path, {"weight", "mean", "variance"});
      GaussianComponent gc;
      if (!c.contains("weight") || !c.contains("mean") || !c.contains("variance")) {
        fail(path, "needs weight, mean and variance");
      }
      gc.weight = need_double(c["weight"], path + ".weight");
      gc.mean = need_double(c["mean"], path + ".mean");
      gc.variance = need_double(c["variance"], path + ".variance");
      raw.noise_components.push_back(gc);
    }
  }

  if (root.contains("topology")) {
    const json& top = need_object(root["topology"], "topology");
    RawTopology rt;
    if (!top.contains("kind") || !top["kind"].is_string()) {
      fail("topology.kind", "expected \"circulant\" or \"explicit\"");
    }
    const std::string kind = top["kind"].get<std::string>();
    if (kind == "circulant") {
      rt.circulant = true;
      check_keys(top, "topology", {"kind", "nodes", "offsets"});
      if (!top.contains("nodes")) fail("topology.nodes", "is required");
      rt.nodes = need_count(top["nodes"], "topology.nodes");
      if (top.contains("offsets")) {
        if (!top["offsets"].is_array()) {
          fail("topology.offsets", "expected an array of integers");
        }
        for (std::size_t i = 0; i < top["offsets"].size(); ++i) {
          rt.offsets.push_back(need_count(
              top["offsets"][i], "topology.offsets[" + std::to_string(i) + "]"));
        }
      }
    } else if (kind == "explicit") {
      check_keys(top, "topology", {"kind", "neighborhoods"});
      if (!top.contains("neighborhoods") || !top["neighborhoods"].is_array()) {
        fail("topology.neighborhoods", "expected an array of arrays");
      }
      const json& nb = top["neighborhoods"];
      rt.nodes = nb.size();
      for (std::size_t k = 0; k < nb.size(); ++k) {
        const std::string path =
            "topology.neighborhoods[" + std::to_string(k) + "]";
        if (!nb[k].is_array()) fail(path, "expected an array of node indices");
        std::vector<std::size_t> nk;
        for (std::size_t i = 0; i < nb[k].size(); ++i) {
          nk.push_back(need_count(nb[k][i], path + "[" + std::to_string(i) + "]"));
        }
        rt.neighborhoods.push_back(std::move(nk));
      }
    } else {
      fail("topology.kind", "expected \"circulant\" or \"explicit\" (got \"" +
                                kind + "\")");
    }
    raw.topology = std::move(rt);
  }

  return raw;
}

std::vector<std::string> validate_raw(const RawConfig& raw) {
  std::vector<std::string> issues;
  auto bad = [&issues](const std::string& msg) { issues.push_back(msg); };

  const auto alg = algorithm_from_name(raw.algorithm);
  if (!alg) {
    bad("experiment.algorithm: unknown algorithm \"" + raw.algorithm +
        "\" (valid: nlms, sparse_nlms, nlmf, sparse_nlmf, "
        "distributed_sparse_nlmf)");
  }
  if (raw.true_weights.empty()) {
    bad("experiment.true_weights: must not be empty");
  }
  for (double v : raw.true_weights) {
    if (!std::isfinite(v)) {
      bad("experiment.true_weights: entries must be finite");
      break;
    }
  }
  if (raw.order && *raw.order != raw.true_weights.size()) {
    bad("experiment.order: must equal true_weights length (order " +
        std::to_string(*raw.order) + ", true_weights " +
        std::to_string(raw.true_weights.size()) + ")");
  }
  if (raw.iterations < 1) bad("experiment.iterations: must be >= 1");
  if (raw.monte_carlo_runs < 1) bad("experiment.monte_carlo_runs: must be >= 1");
  if (!(raw.input_variance > 0.0) || !std::isfinite(raw.input_variance)) {
    bad("experiment.input_variance: must be > 0");
  }
  if (!(raw.params.mu > 0.0) || !std::isfinite(raw.params.mu)) {
    bad("filter.mu: must be > 0");
  }
  if (!(raw.params.lambda >= 0.0) || !std::isfinite(raw.params.lambda)) {
    bad("filter.lambda: must be >= 0");
  }
  if (!(raw.params.beta > 0.0) || !std::isfinite(raw.params.beta)) {
    bad("filter.beta: must be > 0");
  }

  if (raw.noise_given) {
    double sum = 0.0;
    for (std::size_t i = 0; i < raw.noise_components.size(); ++i) {
      const GaussianComponent& c = raw.noise_components[i];
      const std::string path = "noise.components[" + std::to_string(i) + "]";
      if (!(c.weight >= 0.0) || !std::isfinite(c.weight)) {
        bad(path + ".weight: must be >= 0");
      }
      if (!(c.variance > 0.0) || !std::isfinite(c.variance)) {
        bad(path + ".variance: must be > 0");
      }
      if (!std::isfinite(c.mean)) bad(path + ".mean: must be finite");
      sum += c.weight;
    }
    if (std::abs(sum - 1.0) > kWeightSumTol) {
      bad("noise.components: weights must sum to 1 within 1e-12 (sum = " +
          format_double(sum) + ")");
    }
  }

  if (raw.topology) {
    const RawTopology& rt = *raw.topology;
    if (rt.nodes == 0) {
      bad("topology.nodes: must be >= 1");
    } else if (rt.circulant) {
      if (rt.nodes > 1 && rt.offsets.empty()) {
        bad("topology.offsets: must be nonempty for more than one node");
      }
      if (rt.nodes == 1 && !rt.offsets.empty()) {
        bad("topology.offsets: a single-node network takes no offsets");
      }
      for (std::size_t o : rt.offsets) {
        if (o < 1 || o >= rt.nodes) {
          bad("topology.offsets: offset " + std::to_string(o) +
              " outside [1, " + std::to_string(rt.nodes - 1) + "]");
        }
      }
    } else {
      Topology probe;
      probe.size = rt.nodes;
      probe.neighborhoods = rt.neighborhoods;
      for (const std::string& msg : topology_violations(probe)) bad(msg);
    }
  }
  if (alg && is_distributed(*alg) && !raw.topology) {
    bad("topology: required when experiment.algorithm = "
        "distributed_sparse_nlmf");
  }
  return issues;
}

// Assumes validate_raw passed.
ExperimentConfig build_config(const RawConfig& raw) {
  ExperimentConfig cfg;
  cfg.algorithm = *algorithm_from_name(raw.algorithm);
  cfg.true_weights = raw.true_weights;
  cfg.params = raw.params;
  if (raw.noise_given) {
    cfg.noise = GaussianMixture(raw.noise_components);
  }
  cfg.iterations = raw.iterations;
  cfg.monte_carlo_runs = raw.monte_carlo_runs;
  cfg.seed = raw.seed;
  cfg.input_variance = raw.input_variance;
  if (raw.topology) {
    const RawTopology& rt = *raw.topology;
    if (rt.circulant) {
      cfg.topology = circulant_topology(rt.nodes, rt.offsets);
    } else {
      Topology t;
      t.size = rt.nodes;
      t.neighborhoods = rt.neighborhoods;
      for (auto& nk : t.neighborhoods) {
        std::sort(nk.begin(), nk.end());
        nk.erase(std::unique(nk.begin(), nk.end()), nk.end());
      }
      cfg.topology = std::move(t);
    }
  }
  return cfg;
}

std::string join_issues(const std::vector<std::string>& issues) {
  std::string msg = "invalid config:";
  for (const std::string& s : issues) {
    msg += "\n  ";
    msg += s;
  }
  return msg;
}

}  // namespace

ExperimentConfig load_config_text(const std::string& text,
                                  const std::string& origin) {
  const RawConfig raw = parse_raw(parse_json(text, origin));
  const auto issues = validate_raw(raw);
  if (!issues.empty()) throw ConfigError(join_issues(issues));
  return build_config(raw);
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_config_text(buf.str(), path);
}

std::vector<std::string> check_config_text(const std::string& text,
                                           const std::string& origin,
                                           ExperimentConfig* out) {
  const RawConfig raw = parse_raw(parse_json(text, origin));
  auto issues = validate_raw(raw);
  if (issues.empty() && out != nullptr) *out = build_config(raw);
  return issues;
}

std::string config_to_json_text(const ExperimentConfig& cfg) {
  json root;
  json exp;
  exp["algorithm"] = algorithm_name(cfg.algorithm);
  exp["order"] = cfg.true_weights.size();
  exp["true_weights"] = cfg.true_weights;
  exp["iterations"] = cfg.iterations;
  exp["monte_carlo_runs"] = cfg.monte_carlo_runs;
  exp["seed"] = cfg.seed;
  exp["input_variance"] = cfg.input_variance;
  root["experiment"] = std::move(exp);
  json filt;
  filt["mu"] = cfg.params.mu;
  filt["lambda"] = cfg.params.lambda;
  filt["beta"] = cfg.params.beta;
  root["filter"] = std::move(filt);
  json comps = json::array();
  for (const GaussianComponent& c : cfg.noise.components()) {
    json jc;
    jc["weight"] = c.weight;
    jc["mean"] = c.mean;
    jc["variance"] = c.variance;
    comps.push_back(std::move(jc));
  }
  root["noise"] = json{{"components", std::move(comps)}};
  if (cfg.topology) {
    json top;
    top["kind"] = "explicit";
    top["neighborhoods"] = cfg.topology->neighborhoods;
    root["topology"] = std::move(top);
  }
  return root.dump(2) + "\n";
}

namespace {

std::string join_doubles(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

std::string join_counts(const std::vector<std::size_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

double parse_double(const std::string& s, const std::string& key) {
  double v = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  const auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc{} || res.ptr != end) {
    throw ConfigError("manifest: bad number for " + key + ": \"" + s + "\"");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& s, const std::string& key) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
    throw ConfigError("manifest: bad integer for " + key + ": \"" + s + "\"");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string manifest_text(const ExperimentConfig& cfg, const std::string& command,
                          double wall_seconds) {
  std::string m;
  auto put = [&m](const std::string& key, const std::string& value) {
    m += key;
    m += " = ";
    m += value;
    m += '\n';
  };
  put("artifact_version", kArtifactVersion);
  put("command", command);
  put("master_seed", std::to_string(cfg.seed));
  put("wall_time_seconds", format_double(wall_seconds));
  put("experiment.algorithm", algorithm_name(cfg.algorithm));
  put("experiment.order", std::to_string(cfg.true_weights.size()));
  put("experiment.true_weights", join_doubles(cfg.true_weights));
  put("experiment.iterations", std::to_string(cfg.iterations));
  put("experiment.monte_carlo_runs", std::to_string(cfg.monte_carlo_runs));
  put("experiment.seed", std::to_string(cfg.seed));
  put("experiment.input_variance", format_double(cfg.input_variance));
  put("filter.mu", format_double(cfg.params.mu));
  put("filter.lambda", format_double(cfg.params.lambda));
  put("filter.beta", format_double(cfg.params.beta));
  const auto& comps = cfg.noise.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    put("noise.component." + std::to_string(i),
        format_double(comps[i].weight) + "," + format_double(comps[i].mean) +
            "," + format_double(comps[i].variance));
  }
  if (cfg.topology) {
    put("topology.nodes", std::to_string(cfg.topology->size));
    std::string nb;
    for (std::size_t k = 0; k < cfg.topology->size; ++k) {
      if (k) nb += ';';
      nb += join_counts(cfg.topology->neighborhoods[k]);
    }
    put("topology.neighborhoods", nb);
  }
  return m;
}

ExperimentConfig config_from_manifest(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::size_t pos = line.find(" = ");
    if (pos == std::string::npos) {
      throw ConfigError("manifest: malformed line \"" + line + "\"");
    }
    kv[line.substr(0, pos)] = line.substr(pos + 3);
  }
  auto need = [&kv](const std::string& key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError("manifest: missing key " + key);
    return it->second;
  };

  ExperimentConfig cfg;
  const std::string alg_name = need("experiment.algorithm");
  const auto alg = algorithm_from_name(alg_name);
  if (!alg) throw ConfigError("manifest: unknown algorithm \"" + alg_name + "\"");
  cfg.algorithm = *alg;

  cfg.true_weights.clear();
  for (const std::string& s : split(need("experiment.true_weights"), ',')) {
    cfg.true_weights.push_back(parse_double(s, "experiment.true_weights"));
  }
  cfg.iterations = parse_u64(need("experiment.iterations"), "experiment.iterations");
  cfg.monte_carlo_runs =
      parse_u64(need("experiment.monte_carlo_runs"), "experiment.monte_carlo_runs");
  cfg.seed = parse_u64(need("experiment.seed"), "experiment.seed");
  cfg.input_variance =
      parse_double(need("experiment.input_variance"), "experiment.input_variance");
  cfg.params.mu = parse_double(need("filter.mu"), "filter.mu");
  cfg.params.lambda = parse_double(need("filter.lambda"), "filter.lambda");
  cfg.params.beta = parse_double(need("filter.beta"), "filter.beta");

  std::vector<GaussianComponent> comps;
  for (std::size_t i = 0;; ++i) {
    const auto it = kv.find("noise.component." + std::to_string(i));
    if (it == kv.end()) break;
    const auto parts = split(it->second, ',');
    if (parts.size() != 3) {
      throw ConfigError("manifest: bad noise component " + std::to_string(i));
    }
    comps.push_back({parse_double(parts[0], "noise weight"),
                     parse_double(parts[1], "noise mean"),
                     parse_double(parts[2], "noise variance")});
  }
  if (!comps.empty()) cfg.noise = GaussianMixture(std::move(comps));

  if (kv.count("topology.nodes") != 0) {
    Topology t;
    t.size = parse_u64(need("topology.nodes"), "topology.nodes");
    for (const std::string& group : split(need("topology.neighborhoods"), ';')) {
      std::vector<std::size_t> nk;
      for (const std::string& s : split(group, ',')) {
        nk.push_back(parse_u64(s, "topology.neighborhoods"));
      }
      t.neighborhoods.push_back(std::move(nk));
    }
    cfg.topology = std::move(t);
  }

  const auto issues = config_violations(cfg);
  if (!issues.empty()) throw ConfigError(join_issues(issues));
  return cfg;
}

}  // namespace nlmf
