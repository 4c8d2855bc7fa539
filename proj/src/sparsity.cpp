#include "nlmf/sparsity.hpp"

#include <cmath>

namespace nlmf {

double sign(double v) { return static_cast<double>(v > 0.0) - (v < 0.0); }

double zero_norm_approx(const std::vector<double>& w, double beta) {
  double acc = 0.0;
  for (double v : w) acc += 1.0 - std::exp(-beta * std::abs(v));
  return acc;
}

std::vector<double> zero_norm_gradient(const std::vector<double>& w,
                                       double beta) {
  std::vector<double> g(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    g[i] = beta * std::exp(-beta * std::abs(w[i])) * sign(w[i]);
  }
  return g;
}

std::size_t exact_zero_norm(const std::vector<double>& w, double tol) {
  std::size_t count = 0;
  for (double v : w) {
    if (std::abs(v) > tol) ++count;
  }
  return count;
}

}  // namespace nlmf
