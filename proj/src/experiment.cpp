#include "nlmf/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "nlmf/errors.hpp"

namespace nlmf {

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Nlms: return "nlms";
    case Algorithm::SparseNlms: return "sparse_nlms";
    case Algorithm::Nlmf: return "nlmf";
    case Algorithm::SparseNlmf: return "sparse_nlmf";
    case Algorithm::DistributedSparseNlmf: return "distributed_sparse_nlmf";
  }
  return "unknown";
}

std::optional<Algorithm> algorithm_from_name(std::string_view name) {
  if (name == "nlms") return Algorithm::Nlms;
  if (name == "sparse_nlms") return Algorithm::SparseNlms;
  if (name == "nlmf") return Algorithm::Nlmf;
  if (name == "sparse_nlmf") return Algorithm::SparseNlmf;
  if (name == "distributed_sparse_nlmf") return Algorithm::DistributedSparseNlmf;
  return std::nullopt;
}

bool is_distributed(Algorithm a) {
  return a == Algorithm::DistributedSparseNlmf;
}

WeightVector default_true_weights() {
  return {0.0, 0.9, 0.03, 0.7, 0.01, 0.0, 0.09, 0.0, 0.0,
          0.01, 0.0, 0.0, 0.01, 0.0, 0.0, 0.015, 0.0};
}

GaussianMixture default_noise_mixture() {
  const double third = 1.0 / 3.0;
  return GaussianMixture({{third, -1.0, 0.01},
                          {third, 0.0, 0.01},
                          {third, 1.0, 0.01}});
}

std::vector<std::string> config_violations(const ExperimentConfig& cfg) {
  std::vector<std::string> issues;
  auto bad = [&issues](const std::string& msg) { issues.push_back(msg); };

  if (cfg.true_weights.empty()) {
    bad("experiment.true_weights: must not be empty");
  }
  for (double v : cfg.true_weights) {
    if (!std::isfinite(v)) {
      bad("experiment.true_weights: entries must be finite");
      break;
    }
  }
  if (cfg.iterations < 1) bad("experiment.iterations: must be >= 1");
  if (cfg.monte_carlo_runs < 1) bad("experiment.monte_carlo_runs: must be >= 1");
  if (!(cfg.input_variance > 0.0) || !std::isfinite(cfg.input_variance)) {
    bad("experiment.input_variance: must be > 0");
  }
  if (!(cfg.params.mu > 0.0) || !std::isfinite(cfg.params.mu)) {
    bad("filter.mu: must be > 0");
  }
  if (!(cfg.params.lambda >= 0.0) || !std::isfinite(cfg.params.lambda)) {
    bad("filter.lambda: must be >= 0");
  }
  if (!(cfg.params.beta > 0.0) || !std::isfinite(cfg.params.beta)) {
    bad("filter.beta: must be > 0");
  }
  if (is_distributed(cfg.algorithm) && !cfg.topology) {
    bad("topology: required when experiment.algorithm = distributed_sparse_nlmf");
  }
  if (cfg.topology) {
    for (const std::string& msg : topology_violations(*cfg.topology)) {
      bad(msg);
    }
  }
  return issues;
}

double msd_local(const WeightVector& w_true, const WeightVector& w) {
  if (w_true.size() != w.size()) {
    throw std::invalid_argument("msd_local: length mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double diff = w_true[i] - w[i];
    acc += diff * diff;
  }
  return acc;
}

double msd_total(const std::vector<double>& per_node_values) {
  if (per_node_values.empty()) {
    throw std::invalid_argument("msd_total: needs at least one node");
  }
  double acc = 0.0;
  for (double v : per_node_values) acc += v;
  return acc / static_cast<double>(per_node_values.size());
}

double generate_sample(const WeightVector& w_true, Regressor& window,
                       double input_variance, Rng& input_rng,
                       const GaussianMixture& noise, Rng& noise_rng) {
  window.push(std::sqrt(input_variance) * input_rng.gaussian());
  return predict(w_true, window) + noise.sample(noise_rng);
}

std::size_t steady_state_window(std::size_t iterations) {
  const std::size_t w = iterations / 10;
  return w == 0 ? 1 : w;
}

double steady_state_msd(const MsdTrace& trace) {
  const std::size_t w = steady_state_window(trace.iterations);
  double acc = 0.0;
  for (std::size_t n = trace.iterations - w; n < trace.iterations; ++n) {
    acc += trace.total[n];
  }
  return acc / static_cast<double>(w);
}

namespace {

WeightVector local_step(Algorithm a, const WeightVector& w, const Regressor& x,
                        double d, const FilterParams& p) {
  switch (a) {
    case Algorithm::Nlms: return nlms_step(w, x, d, p);
    case Algorithm::SparseNlms: return sparse_nlms_step(w, x, d, p);
    case Algorithm::Nlmf: return nlmf_step(w, x, d, p);
    case Algorithm::SparseNlmf: return sparse_nlmf_step(w, x, d, p);
    case Algorithm::DistributedSparseNlmf: break;
  }
  throw std::logic_error("local_step: not a local algorithm");
}

void fill_total_from_per_node(MsdTrace& trace) {
  std::vector<double> column(trace.nodes);
  for (std::size_t n = 0; n < trace.iterations; ++n) {
    for (std::size_t k = 0; k < trace.nodes; ++k) {
      column[k] = trace.per_node[k * trace.iterations + n];
    }
    trace.total[n] = msd_total(column);
  }
}

}  // namespace

MsdTrace run_single(const ExperimentConfig& cfg, std::uint64_t run_index) {
  const std::size_t order = cfg.true_weights.size();
  const bool distributed = is_distributed(cfg.algorithm);
  if (distributed && !cfg.topology) {
    throw ConfigError(
        "topology: required when experiment.algorithm = distributed_sparse_nlmf");
  }
  const std::size_t nodes = distributed ? cfg.topology->size : 1;
  const std::size_t iters = cfg.iterations;

  MsdTrace trace;
  trace.nodes = nodes;
  trace.iterations = iters;
  trace.runs_averaged = 1;
  trace.per_node.assign(nodes * iters, 0.0);
  trace.total.assign(iters, 0.0);

  std::vector<Regressor> windows(nodes, Regressor(order));
  std::vector<Rng> input_rngs;
  std::vector<Rng> noise_rngs;
  input_rngs.reserve(nodes);
  noise_rngs.reserve(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    input_rngs.emplace_back(derive_seed(cfg.seed, run_index, k, StreamTag::Input));
    noise_rngs.emplace_back(derive_seed(cfg.seed, run_index, k, StreamTag::Noise));
  }

  if (distributed) {
    const CombineMatrix c = uniform_combine_weights(*cfg.topology);
    NetworkState state = make_network_state(nodes, order);
    std::vector<double> observations(nodes, 0.0);
    for (std::size_t n = 0; n < iters; ++n) {
      for (std::size_t k = 0; k < nodes; ++k) {
        trace.per_node[k * iters + n] =
            msd_local(cfg.true_weights, state.weights[k]);
        observations[k] =
            generate_sample(cfg.true_weights, windows[k], cfg.input_variance,
                            input_rngs[k], cfg.noise, noise_rngs[k]);
      }
      state = distributed_step(state, c, windows, observations, cfg.params);
    }
  } else {
    WeightVector w(order, 0.0);
    for (std::size_t n = 0; n < iters; ++n) {
      trace.per_node[n] = msd_local(cfg.true_weights, w);
      const double d =
          generate_sample(cfg.true_weights, windows[0], cfg.input_variance,
                          input_rngs[0], cfg.noise, noise_rngs[0]);
      w = local_step(cfg.algorithm, w, windows[0], d, cfg.params);
    }
  }

  fill_total_from_per_node(trace);
  trace.steady_per_run = {steady_state_msd(trace)};
  return trace;
}

MsdTrace run_monte_carlo(const ExperimentConfig& cfg, unsigned threads) {
  const std::size_t runs = cfg.monte_carlo_runs;
  if (runs == 0) throw ConfigError("experiment.monte_carlo_runs: must be >= 1");

  unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (workers > runs) workers = static_cast<unsigned>(runs);

  MsdTrace acc;
  std::vector<double> steady;
  steady.reserve(runs);

  // Runs execute in batches; each batch is folded in ascending run order so
  // the average is bit-identical for any worker count.
  const std::size_t batch = std::min<std::size_t>(runs, std::size_t{workers} * 4);
  std::vector<MsdTrace> slots(batch);
  std::size_t done = 0;
  while (done < runs) {
    const std::size_t count = std::min(batch, runs - done);
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&]() {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= count) break;
        try {
          slots[i] = run_single(cfg, done + i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mu);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < count; ++i) {
      MsdTrace& run = slots[i];
      if (acc.per_node.empty()) {
        acc = run;
      } else {
        for (std::size_t j = 0; j < acc.per_node.size(); ++j) {
          acc.per_node[j] += run.per_node[j];
        }
      }
      steady.push_back(run.steady_per_run[0]);
      run = MsdTrace{};
    }
    done += count;
  }

  const double inv = 1.0 / static_cast<double>(runs);
  for (double& v : acc.per_node) v *= inv;
  fill_total_from_per_node(acc);
  acc.runs_averaged = runs;
  acc.steady_per_run = std::move(steady);
  return acc;
}

MeanCi mean_ci(const std::vector<double>& values) {
  MeanCi ci;
  if (values.empty()) return ci;
  double sum = 0.0;
  for (double v : values) sum += v;
  ci.mean = sum / static_cast<double>(values.size());
  if (values.size() < 2) {
    ci.lo = ci.hi = ci.mean;
    return ci;
  }
  double ss = 0.0;
  for (double v : values) {
    const double d = v - ci.mean;
    ss += d * d;
  }
  const double var = ss / static_cast<double>(values.size() - 1);
  const double se = std::sqrt(var / static_cast<double>(values.size()));
  const double half = 1.959963984540054 * se;  // normal 97.5% quantile
  ci.lo = ci.mean - half;
  ci.hi = ci.mean + half;
  return ci;
}

double to_db(double v) { return 10.0 * std::log10(v); }

}  // namespace nlmf
