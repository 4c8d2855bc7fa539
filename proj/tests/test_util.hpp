#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "nlmf/filters.hpp"
#include "nlmf/random.hpp"

namespace testutil {

// Test-local uniform helpers on top of the library Rng.
inline double uniform(nlmf::Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.uniform01();
}

inline double nonzero_uniform(nlmf::Rng& rng, double lo, double hi) {
  const double mag = uniform(rng, lo, hi);
  return rng.uniform01() < 0.5 ? -mag : mag;
}

inline std::vector<double> random_vector(nlmf::Rng& rng, std::size_t n,
                                         double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) x = uniform(rng, lo, hi);
  return v;
}

// Regressor filled with the given samples, newest last in `samples`.
inline nlmf::Regressor make_regressor(const std::vector<double>& samples) {
  nlmf::Regressor x(samples.size());
  for (double s : samples) x.push(s);
  return x;
}

// Regressor with random entries bounded away from zero energy.
inline nlmf::Regressor random_regressor(nlmf::Rng& rng, std::size_t n) {
  std::vector<double> s(n);
  for (double& v : s) v = nonzero_uniform(rng, 0.2, 2.0);
  return make_regressor(s);
}

// Independent dot product oracle; iterates in reverse order on purpose.
inline double dot_oracle(const std::vector<double>& a,
                         const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = a.size(); i-- > 0;) acc += a[i] * b[i];
  return acc;
}

// Central finite differences of f at w, one column per coordinate.
inline std::vector<double> fd_gradient(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& w, double h) {
  std::vector<double> g(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::vector<double> hi = w;
    std::vector<double> lo = w;
    hi[i] += h;
    lo[i] -= h;
    g[i] = (f(hi) - f(lo)) / (2.0 * h);
  }
  return g;
}

inline double rel_diff(double a, double b) {
  const double denom = std::max(std::abs(a), std::abs(b));
  if (denom == 0.0) return 0.0;
  return std::abs(a - b) / denom;
}

// Composite Simpson quadrature on [lo, hi] with n panels (n even).
inline double simpson(const std::function<double(double)>& f, double lo,
                      double hi, std::size_t n) {
  const double h = (hi - lo) / static_cast<double>(n);
  double acc = f(lo) + f(hi);
  for (std::size_t i = 1; i < n; ++i) {
    acc += f(lo + h * static_cast<double>(i)) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return acc * h / 3.0;
}

}  // namespace testutil
