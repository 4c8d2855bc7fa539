#include <cmath>
#include <vector>

#include "doctest.h"
#include "nlmf/errors.hpp"
#include "nlmf/experiment.hpp"
#include "test_util.hpp"

using namespace nlmf;

namespace {

// Small config that runs in milliseconds.
ExperimentConfig mini_config(Algorithm alg) {
  ExperimentConfig cfg;
  cfg.algorithm = alg;
  cfg.iterations = 40;
  cfg.monte_carlo_runs = 2;
  cfg.seed = 99;
  if (is_distributed(alg)) cfg.topology = circulant_topology(4, {1});
  return cfg;
}

double sum_of_squares(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return acc;
}

}  // namespace

TEST_CASE("algorithm names round-trip") {
  for (Algorithm a : {Algorithm::Nlms, Algorithm::SparseNlms, Algorithm::Nlmf,
                      Algorithm::SparseNlmf, Algorithm::DistributedSparseNlmf}) {
    const auto back = algorithm_from_name(algorithm_name(a));
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  CHECK_FALSE(algorithm_from_name("lms").has_value());
  CHECK(is_distributed(Algorithm::DistributedSparseNlmf));
  CHECK_FALSE(is_distributed(Algorithm::SparseNlmf));
}

TEST_CASE("default target vector") {
  const WeightVector w = default_true_weights();
  REQUIRE(w.size() == 17);
  CHECK(w[1] == 0.9);
  CHECK(w[3] == 0.7);
  CHECK(sum_of_squares(w) == doctest::Approx(1.309525).epsilon(1e-9));
}

TEST_CASE("msd_local is the squared distance") {
  const WeightVector w_true = default_true_weights();
  CHECK(msd_local(w_true, w_true) == 0.0);
  CHECK(msd_local(w_true, WeightVector(17, 0.0)) ==
        doctest::Approx(1.309525).epsilon(1e-9));

  Rng rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    // Perturbation along a unit direction moves the MSD by epsilon^2.
    std::vector<double> u = testutil::random_vector(rng, 17, -1.0, 1.0);
    double norm = std::sqrt(sum_of_squares(u));
    for (double& v : u) v /= norm;
    const double eps = testutil::uniform(rng, 0.01, 0.5);
    WeightVector w = w_true;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += eps * u[i];
    CHECK(msd_local(w_true, w) == doctest::Approx(eps * eps).epsilon(1e-10));
  }
  CHECK_THROWS_AS(msd_local(w_true, WeightVector(3, 0.0)), std::invalid_argument);
}

TEST_CASE("msd_total is the arithmetic mean over nodes") {
  CHECK(msd_total({4.2}) == 4.2);
  CHECK(msd_total({7.0, 7.0, 7.0}) == 7.0);
  CHECK(msd_total({1.0, 2.0, 3.0}) == 2.0);
  CHECK_THROWS_AS(msd_total({}), std::invalid_argument);
}

TEST_CASE("generate_sample in the noiseless limit") {
  const WeightVector w_true = default_true_weights();
  const GaussianMixture tiny({{1.0, 0.0, 1e-18}});
  Regressor window(w_true.size());
  Rng input(derive_seed(5, 0, 0, StreamTag::Input));
  Rng noise(derive_seed(5, 0, 0, StreamTag::Noise));
  for (int n = 0; n < 100; ++n) {
    const double d = generate_sample(w_true, window, 1.0, input, tiny, noise);
    CHECK(d == doctest::Approx(predict(w_true, window)).epsilon(1e-7));
  }
}

TEST_CASE("generate_sample with a zero target reproduces the noise law") {
  const WeightVector zeros(8, 0.0);
  const GaussianMixture m = default_noise_mixture();
  Regressor window(8);
  Rng input(derive_seed(6, 0, 0, StreamTag::Input));
  Rng noise(derive_seed(6, 0, 0, StreamTag::Noise));
  const std::size_t n = 100000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = generate_sample(zeros, window, 1.0, input, m, noise);
    sum += d;
    sum_sq += d * d;
  }
  const auto expected = m.moments();
  const double mean = sum / static_cast<double>(n);
  const double var = sum_sq / static_cast<double>(n) - mean * mean;
  CHECK(std::abs(mean - expected.mean) < 0.008);
  CHECK(std::abs(var - expected.variance) < 0.005);
}

TEST_CASE("generate_sample is reproducible under a fixed seed") {
  const WeightVector w_true = default_true_weights();
  const GaussianMixture m = default_noise_mixture();
  std::vector<double> first;
  for (int rep = 0; rep < 2; ++rep) {
    Regressor window(w_true.size());
    Rng input(derive_seed(7, 3, 1, StreamTag::Input));
    Rng noise(derive_seed(7, 3, 1, StreamTag::Noise));
    for (int i = 0; i < 50; ++i) {
      const double d = generate_sample(w_true, window, 1.0, input, m, noise);
      if (rep == 0) {
        first.push_back(d);
      } else {
        CHECK(d == first[static_cast<std::size_t>(i)]);
      }
    }
  }
}

TEST_CASE("steady-state window covers the last tenth") {
  CHECK(steady_state_window(1) == 1);
  CHECK(steady_state_window(9) == 1);
  CHECK(steady_state_window(2000) == 200);
}

TEST_CASE("run_single starts every trace at the initial deviation") {
  for (Algorithm a : {Algorithm::Nlms, Algorithm::SparseNlms, Algorithm::Nlmf,
                      Algorithm::SparseNlmf, Algorithm::DistributedSparseNlmf}) {
    ExperimentConfig cfg = mini_config(a);
    cfg.iterations = 1;
    const MsdTrace t = run_single(cfg, 0);
    CHECK(t.iterations == 1);
    const double expected = sum_of_squares(cfg.true_weights);
    for (std::size_t k = 0; k < t.nodes; ++k) {
      CHECK(t.at(k, 0) == doctest::Approx(expected).epsilon(1e-15));
    }
  }
}

TEST_CASE("run_single is deterministic per (config, run index)") {
  const ExperimentConfig cfg = mini_config(Algorithm::SparseNlmf);
  const MsdTrace a = run_single(cfg, 4);
  const MsdTrace b = run_single(cfg, 4);
  CHECK(a.per_node == b.per_node);
  CHECK(a.total == b.total);
  const MsdTrace c = run_single(cfg, 5);
  CHECK(a.per_node != c.per_node);
}

TEST_CASE("single-node distributed run matches the local sparse run") {
  ExperimentConfig local = mini_config(Algorithm::SparseNlmf);
  ExperimentConfig dist = local;
  dist.algorithm = Algorithm::DistributedSparseNlmf;
  dist.topology = circulant_topology(1, {});
  const MsdTrace a = run_single(local, 2);
  const MsdTrace b = run_single(dist, 2);
  CHECK(a.per_node == b.per_node);
  CHECK(a.total == b.total);
}

TEST_CASE("distributed run without a topology is a configuration error") {
  ExperimentConfig cfg = mini_config(Algorithm::DistributedSparseNlmf);
  cfg.topology.reset();
  CHECK_THROWS_AS(run_single(cfg, 0), ConfigError);
  CHECK_FALSE(config_violations(cfg).empty());
}

TEST_CASE("config violations carry field paths") {
  ExperimentConfig cfg = mini_config(Algorithm::Nlms);
  cfg.params.mu = -1.0;
  cfg.iterations = 0;
  const auto issues = config_violations(cfg);
  REQUIRE(issues.size() == 2);
  CHECK(issues[0].find("experiment.iterations") != std::string::npos);
  CHECK(issues[1].find("filter.mu") != std::string::npos);
}

TEST_CASE("total trace is the node average at every iteration") {
  ExperimentConfig cfg = mini_config(Algorithm::DistributedSparseNlmf);
  const MsdTrace t = run_single(cfg, 1);
  for (std::size_t n = 0; n < t.iterations; ++n) {
    std::vector<double> col;
    for (std::size_t k = 0; k < t.nodes; ++k) col.push_back(t.at(k, n));
    CHECK(t.total[n] == msd_total(col));
    for (double v : col) CHECK(v >= 0.0);
  }
}

TEST_CASE("monte carlo with one run equals run_single") {
  ExperimentConfig cfg = mini_config(Algorithm::Nlmf);
  cfg.monte_carlo_runs = 1;
  const MsdTrace mc = run_monte_carlo(cfg, 1);
  const MsdTrace single = run_single(cfg, 0);
  CHECK(mc.per_node == single.per_node);
  CHECK(mc.total == single.total);
  CHECK(mc.runs_averaged == 1);
}

TEST_CASE("monte carlo averages traces in run order") {
  ExperimentConfig cfg = mini_config(Algorithm::SparseNlms);
  cfg.monte_carlo_runs = 2;
  const MsdTrace mc = run_monte_carlo(cfg, 1);
  const MsdTrace r0 = run_single(cfg, 0);
  const MsdTrace r1 = run_single(cfg, 1);
  REQUIRE(mc.per_node.size() == r0.per_node.size());
  for (std::size_t i = 0; i < mc.per_node.size(); ++i) {
    CHECK(mc.per_node[i] == (r0.per_node[i] + r1.per_node[i]) * (1.0 / 2.0));
  }
  CHECK(mc.steady_per_run.size() == 2);
  CHECK(mc.steady_per_run[0] == r0.steady_per_run[0]);
  CHECK(mc.steady_per_run[1] == r1.steady_per_run[0]);
}

TEST_CASE("doubling the run count replays the first half exactly") {
  ExperimentConfig cfg = mini_config(Algorithm::SparseNlmf);
  cfg.monte_carlo_runs = 3;
  const MsdTrace small = run_monte_carlo(cfg, 2);
  cfg.monte_carlo_runs = 6;
  const MsdTrace big = run_monte_carlo(cfg, 2);
  for (std::size_t r = 0; r < 3; ++r) {
    CHECK(big.steady_per_run[r] == small.steady_per_run[r]);
  }
}

TEST_CASE("monte carlo result is bit-identical across thread counts") {
  ExperimentConfig cfg = mini_config(Algorithm::DistributedSparseNlmf);
  cfg.monte_carlo_runs = 7;
  const MsdTrace serial = run_monte_carlo(cfg, 1);
  const MsdTrace threaded = run_monte_carlo(cfg, 3);
  CHECK(serial.per_node == threaded.per_node);
  CHECK(serial.total == threaded.total);
  CHECK(serial.steady_per_run == threaded.steady_per_run);
}

TEST_CASE("every algorithm converges below its starting deviation") {
  for (Algorithm a : {Algorithm::Nlms, Algorithm::SparseNlms, Algorithm::Nlmf,
                      Algorithm::SparseNlmf, Algorithm::DistributedSparseNlmf}) {
    ExperimentConfig cfg = mini_config(a);
    cfg.iterations = 400;
    cfg.monte_carlo_runs = 3;
    cfg.params.lambda = 5e-3;
    const MsdTrace t = run_monte_carlo(cfg, 2);
    CHECK(t.total.back() < t.total.front());
  }
}

TEST_CASE("preset parameters converge for all five algorithms") {
  // Shipped preset settings at a reduced run budget; the full budget runs in
  // the acceptance suite.
  ExperimentConfig base;
  base.params.lambda = 5e-3;
  base.iterations = 6000;
  base.monte_carlo_runs = 2;
  base.seed = 42;
  for (Algorithm a : {Algorithm::Nlms, Algorithm::SparseNlms, Algorithm::Nlmf,
                      Algorithm::SparseNlmf, Algorithm::DistributedSparseNlmf}) {
    ExperimentConfig cfg = base;
    cfg.algorithm = a;
    if (is_distributed(a)) cfg.topology = circulant_topology(10, {1, 5});
    const MsdTrace t = run_monte_carlo(cfg, 2);
    CHECK(t.total.back() < t.total.front());
    CHECK(steady_state_msd(t) < t.total.front());
  }
}

TEST_CASE("mean_ci basics") {
  const MeanCi constant = mean_ci({2.0, 2.0, 2.0, 2.0});
  CHECK(constant.mean == 2.0);
  CHECK(constant.lo == 2.0);
  CHECK(constant.hi == 2.0);

  const MeanCi ci = mean_ci({1.0, 2.0, 3.0});
  CHECK(ci.mean == 2.0);
  CHECK(ci.lo < 2.0);
  CHECK(ci.hi > 2.0);
  CHECK(ci.hi - ci.mean == doctest::Approx(1.959963984540054 / std::sqrt(3.0)));

  CHECK(to_db(1.0) == 0.0);
  CHECK(to_db(0.1) == doctest::Approx(-10.0).epsilon(1e-12));
}
