#include "nlmf/network.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "nlmf/errors.hpp"

namespace nlmf {

namespace {
constexpr double kColumnSumTol = 1e-12;
}

Topology circulant_topology(std::size_t nodes,
                            const std::vector<std::size_t>& offsets) {
  if (nodes == 0) {
    throw ConfigError("topology: node count must be positive");
  }
  if (nodes == 1) {
    if (!offsets.empty()) {
      throw ConfigError("topology: a single-node network takes no offsets");
    }
    return Topology{1, {{0}}};
  }
  if (offsets.empty()) {
    throw ConfigError("topology: offsets must be nonempty");
  }
  for (std::size_t o : offsets) {
    if (o < 1 || o >= nodes) {
      throw ConfigError("topology: offset " + std::to_string(o) +
                        " outside [1, " + std::to_string(nodes - 1) + "]");
    }
  }
  Topology t;
  t.size = nodes;
  t.neighborhoods.resize(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    std::set<std::size_t> nbrs{k};
    for (std::size_t o : offsets) {
      nbrs.insert((k + o) % nodes);
      nbrs.insert((k + nodes - o) % nodes);
    }
    t.neighborhoods[k].assign(nbrs.begin(), nbrs.end());
  }
  return t;
}

std::vector<std::string> topology_violations(const Topology& t) {
  std::vector<std::string> issues;
  if (t.size == 0) {
    issues.push_back("topology: node count must be positive");
    return issues;
  }
  if (t.neighborhoods.size() != t.size) {
    issues.push_back("topology: expected " + std::to_string(t.size) +
                     " neighborhoods, got " +
                     std::to_string(t.neighborhoods.size()));
    return issues;
  }
  for (std::size_t k = 0; k < t.size; ++k) {
    const auto& nk = t.neighborhoods[k];
    if (std::find(nk.begin(), nk.end(), k) == nk.end()) {
      issues.push_back("topology.neighborhoods[" + std::to_string(k) +
                       "]: node " + std::to_string(k) +
                       " missing from its own neighborhood");
    }
    for (std::size_t l : nk) {
      if (l >= t.size) {
        issues.push_back("topology.neighborhoods[" + std::to_string(k) +
                         "]: node index " + std::to_string(l) +
                         " outside [0, " + std::to_string(t.size) + ")");
      }
    }
  }
  return issues;
}

CombineMatrix::CombineMatrix(std::size_t size, std::vector<double> entries)
    : size_(size), c_(std::move(entries)) {
  if (size_ == 0 || c_.size() != size_ * size_) {
    throw std::invalid_argument("CombineMatrix: bad dimensions");
  }
  for (std::size_t k = 0; k < size_; ++k) {
    double sum = 0.0;
    for (std::size_t l = 0; l < size_; ++l) {
      const double v = at(l, k);
      if (!(v >= 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument("CombineMatrix: entries must be >= 0");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > kColumnSumTol) {
      throw std::invalid_argument(
          "CombineMatrix: column " + std::to_string(k) +
          " must sum to 1 within 1e-12");
    }
  }
}

CombineMatrix CombineMatrix::identity(std::size_t size) {
  std::vector<double> c(size * size, 0.0);
  for (std::size_t k = 0; k < size; ++k) c[k * size + k] = 1.0;
  return CombineMatrix(size, std::move(c));
}

bool CombineMatrix::consistent_with(const Topology& t) const {
  if (t.size != size_) return false;
  for (std::size_t k = 0; k < size_; ++k) {
    const auto& nk = t.neighborhoods[k];
    for (std::size_t l = 0; l < size_; ++l) {
      const bool neighbor = std::find(nk.begin(), nk.end(), l) != nk.end();
      if (!neighbor && at(l, k) != 0.0) return false;
    }
  }
  return true;
}

CombineMatrix uniform_combine_weights(const Topology& t) {
  const auto issues = topology_violations(t);
  if (!issues.empty()) throw std::invalid_argument(issues.front());
  std::vector<double> c(t.size * t.size, 0.0);
  for (std::size_t k = 0; k < t.size; ++k) {
    const double w = 1.0 / static_cast<double>(t.neighborhoods[k].size());
    for (std::size_t l : t.neighborhoods[k]) c[l * t.size + k] = w;
  }
  return CombineMatrix(t.size, std::move(c));
}

WeightVector combine(std::size_t k, const CombineMatrix& c,
                     const std::vector<WeightVector>& weights) {
  if (k >= weights.size() || c.size() != weights.size()) {
    throw std::invalid_argument("combine: node count mismatch");
  }
  const WeightVector& self = weights[k];
  WeightVector phi = self;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    if (l == k) continue;
    const double w = c.at(l, k);
    if (w == 0.0) continue;
    const WeightVector& other = weights[l];
    if (other.size() != phi.size()) {
      throw std::invalid_argument("combine: weight length mismatch");
    }
    for (std::size_t i = 0; i < phi.size(); ++i) {
      phi[i] += w * (other[i] - self[i]);
    }
  }
  return phi;
}

double local_error(double d_k, const WeightVector& phi_k, const Regressor& x_k) {
  return error(d_k, predict(phi_k, x_k));
}

NetworkState make_network_state(std::size_t nodes, std::size_t order) {
  NetworkState s;
  s.weights.assign(nodes, WeightVector(order, 0.0));
  s.intermediate.assign(nodes, WeightVector(order, 0.0));
  return s;
}

NetworkState distributed_step(const NetworkState& state, const CombineMatrix& c,
                              const std::vector<Regressor>& inputs,
                              const std::vector<double>& observations,
                              const FilterParams& p) {
  const std::size_t nodes = state.weights.size();
  if (c.size() != nodes || inputs.size() != nodes ||
      observations.size() != nodes) {
    throw std::invalid_argument("distributed_step: node count mismatch");
  }
  NetworkState next;
  next.intermediate.reserve(nodes);
  next.weights.reserve(nodes);
  // Combine phase reads only the previous iteration's weights.
  for (std::size_t k = 0; k < nodes; ++k) {
    next.intermediate.push_back(combine(k, c, state.weights));
  }
  for (std::size_t k = 0; k < nodes; ++k) {
    next.weights.push_back(
        sparse_nlmf_step(next.intermediate[k], inputs[k], observations[k], p));
  }
  return next;
}

}  // namespace nlmf
