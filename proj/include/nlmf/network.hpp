#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nlmf/filters.hpp"

namespace nlmf {

// Node adjacency. neighborhoods[k] lists the nodes whose estimates node k may
// read, including k itself; entries are sorted and unique.
struct Topology {
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> neighborhoods;
};

// Ring of `nodes` nodes where node k is linked to (k +/- o) mod nodes for each
// offset o. A single-node network takes no offsets. Throws ConfigError on
// offsets outside [1, nodes-1].
Topology circulant_topology(std::size_t nodes,
                            const std::vector<std::size_t>& offsets);

// Structural problems (self-membership, index range), empty when valid.
std::vector<std::string> topology_violations(const Topology& t);

// Cooperation weights, entry at(l, k) = c_lk = weight node k puts on node l's
// estimate. Columns are convex combinations: nonnegative, summing to 1.
class CombineMatrix {
 public:
  // Row-major entries, c[l * size + k]. Validates column stochasticity
  // (sum within 1e-12) and nonnegativity.
  CombineMatrix(std::size_t size, std::vector<double> entries);

  static CombineMatrix identity(std::size_t size);

  double at(std::size_t l, std::size_t k) const { return c_[l * size_ + k]; }
  std::size_t size() const { return size_; }

  // True when every entry outside the topology's neighborhoods is zero.
  bool consistent_with(const Topology& t) const;

 private:
  std::size_t size_ = 0;
  std::vector<double> c_;
};

// c_lk = 1/|N_k| for l in N_k, else 0.
CombineMatrix uniform_combine_weights(const Topology& t);

// phi_k = sum_l c_lk W_l. Evaluated about W_k (the column sums to 1), so a
// consensus state is an exact fixed point and an identity column returns W_k
// bit-for-bit.
WeightVector combine(std::size_t k, const CombineMatrix& c,
                     const std::vector<WeightVector>& weights);

// d_k - phi_k^T X_k.
double local_error(double d_k, const WeightVector& phi_k, const Regressor& x_k);

struct NetworkState {
  std::vector<WeightVector> weights;       // W_k, current estimates
  std::vector<WeightVector> intermediate;  // phi_k from the last step
};

NetworkState make_network_state(std::size_t nodes, std::size_t order);

// One synchronous diffusion iteration: every phi_k is combined from the
// previous iteration's weights, then every node adapts from phi_k with its
// local data via sparse_nlmf_step. Two phases with a barrier between them, so
// node processing order cannot change the result.
NetworkState distributed_step(const NetworkState& state, const CombineMatrix& c,
                              const std::vector<Regressor>& inputs,
                              const std::vector<double>& observations,
                              const FilterParams& p);

}  // namespace nlmf
