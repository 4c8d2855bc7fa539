#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlmf/filters.hpp"
#include "nlmf/network.hpp"
#include "nlmf/noise.hpp"
#include "nlmf/random.hpp"

namespace nlmf {

enum class Algorithm {
  Nlms,
  SparseNlms,
  Nlmf,
  SparseNlmf,
  DistributedSparseNlmf,
};

const char* algorithm_name(Algorithm a);
std::optional<Algorithm> algorithm_from_name(std::string_view name);
bool is_distributed(Algorithm a);

// The 17-tap sparse identification target used by the shipped presets:
// two large taps (0.9, 0.7) among small and zero ones.
WeightVector default_true_weights();

// Trimodal mixture used by the shipped presets: means -1, 0, 1, variance 0.01
// each, uniform weights.
GaussianMixture default_noise_mixture();

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::SparseNlmf;
  WeightVector true_weights = default_true_weights();
  FilterParams params;
  GaussianMixture noise = default_noise_mixture();
  std::optional<Topology> topology;  // required for distributed algorithms
  std::size_t iterations = 2000;
  std::size_t monte_carlo_runs = 200;
  std::uint64_t seed = 1;
  double input_variance = 1.0;
};

// Semantic violations by field path; empty means the config can run.
std::vector<std::string> config_violations(const ExperimentConfig& cfg);

// Squared-deviation learning curves. per_node is node-major:
// per_node[k * iterations + n] is V_k(n); total[n] averages over nodes.
struct MsdTrace {
  std::size_t nodes = 0;
  std::size_t iterations = 0;
  std::size_t runs_averaged = 0;
  std::vector<double> per_node;
  std::vector<double> total;
  // Steady-state value of each averaged realization, in run order.
  std::vector<double> steady_per_run;

  double at(std::size_t node, std::size_t n) const {
    return per_node[node * iterations + n];
  }
};

// ||w_true - w||^2.
double msd_local(const WeightVector& w_true, const WeightVector& w);

// Arithmetic mean of per-node deviations at one iteration.
double msd_total(const std::vector<double>& per_node_values);

// Pushes a fresh input sample into the window and returns the observation
// d = X^T w_true + z. Input and noise come from separate streams so the same
// data can be replayed against different algorithms.
double generate_sample(const WeightVector& w_true, Regressor& window,
                       double input_variance, Rng& input_rng,
                       const GaussianMixture& noise, Rng& noise_rng);

// Final stretch of a trace treated as converged: last 10% of iterations,
// at least one.
std::size_t steady_state_window(std::size_t iterations);
double steady_state_msd(const MsdTrace& trace);

// One realization. Weights start at zero; V_k(n) is recorded before the
// update of iteration n, so every trace starts at ||w_true||^2. Data streams
// are derived from (seed, run_index, node), independent of the algorithm.
MsdTrace run_single(const ExperimentConfig& cfg, std::uint64_t run_index);

// Average of monte_carlo_runs independent realizations. Runs may execute on
// `threads` workers (0 = hardware default); accumulation is in ascending run
// order, so the result is bit-identical for any thread count.
MsdTrace run_monte_carlo(const ExperimentConfig& cfg, unsigned threads = 0);

// Normal-approximation 95% confidence interval of the sample mean.
struct MeanCi {
  double mean = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};
MeanCi mean_ci(const std::vector<double>& values);

double to_db(double v);  // 10 log10(v)

}  // namespace nlmf
