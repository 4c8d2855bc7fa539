#include "nlmf/filters.hpp"

#include <stdexcept>

#include "nlmf/sparsity.hpp"

namespace nlmf {

Regressor::Regressor(std::size_t order) : win_(order, 0.0) {
  if (order == 0) {
    throw std::invalid_argument("Regressor: order must be positive");
  }
}

void Regressor::push(double x) {
  for (std::size_t i = win_.size() - 1; i > 0; --i) win_[i] = win_[i - 1];
  win_[0] = x;
}

double Regressor::energy() const {
  double acc = 0.0;
  for (double v : win_) acc += v * v;
  return acc;
}

double predict(const WeightVector& w, const Regressor& x) {
  const std::vector<double>& win = x.window();
  if (w.size() != win.size()) {
    throw std::invalid_argument("predict: weight/regressor length mismatch");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) acc += win[i] * w[i];
  return acc;
}

double error(double desired, double predicted) { return desired - predicted; }

double cost_lmf(double e) {
  const double e2 = e * e;
  return 0.25 * e2 * e2;
}

double cost_sparse(double e, const WeightVector& w, const FilterParams& p) {
  return cost_lmf(e) + p.lambda * zero_norm_approx(w, p.beta);
}

WeightVector lmf_step(const WeightVector& w, const Regressor& x, double d,
                      const FilterParams& p) {
  const std::vector<double>& win = x.window();
  const double e = error(d, predict(w, x));
  const double e3 = e * e * e;
  WeightVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = w[i] + p.mu * e3 * win[i];
  }
  return out;
}

namespace {

// base + mu / (E (E + e^2)) * (e^3 X - lambda * g(base)), E = ||X||^2.
// lambda == 0 takes the plain path, so the sparse step with the penalty
// disabled is bit-identical to the plain one.
WeightVector nlmf_family(const WeightVector& base, const Regressor& x, double d,
                         double mu, double lambda, double beta) {
  const std::vector<double>& win = x.window();
  const double e = error(d, predict(base, x));
  const double energy = x.energy();
  if (energy == 0.0) return base;
  const double scale = mu / (energy * (energy + e * e));
  const double e3 = e * e * e;
  WeightVector out(base.size());
  if (lambda == 0.0) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      out[i] = base[i] + scale * (e3 * win[i]);
    }
  } else {
    const std::vector<double> g = zero_norm_gradient(base, beta);
    for (std::size_t i = 0; i < base.size(); ++i) {
      out[i] = base[i] + scale * (e3 * win[i] - lambda * g[i]);
    }
  }
  return out;
}

// base + mu e X / E - (mu lambda / E) * g(base).
WeightVector nlms_family(const WeightVector& base, const Regressor& x, double d,
                         double mu, double lambda, double beta) {
  const std::vector<double>& win = x.window();
  const double e = error(d, predict(base, x));
  const double energy = x.energy();
  if (energy == 0.0) return base;
  const double data_scale = mu * e / energy;
  WeightVector out(base.size());
  if (lambda == 0.0) {
    for (std::size_t i = 0; i < base.size(); ++i) {
      out[i] = base[i] + data_scale * win[i];
    }
  } else {
    const std::vector<double> g = zero_norm_gradient(base, beta);
    const double pen_scale = mu * lambda / energy;
    for (std::size_t i = 0; i < base.size(); ++i) {
      out[i] = base[i] + data_scale * win[i] - pen_scale * g[i];
    }
  }
  return out;
}

}  // namespace

WeightVector nlmf_step(const WeightVector& w, const Regressor& x, double d,
                       const FilterParams& p) {
  return nlmf_family(w, x, d, p.mu, 0.0, p.beta);
}

WeightVector nlmf_variable_step(const WeightVector& w, const Regressor& x,
                                double d, const FilterParams& p) {
  const std::vector<double>& win = x.window();
  const double e = error(d, predict(w, x));
  const double energy = x.energy();
  if (energy == 0.0) return w;
  const double mu_n = p.mu * e * e / (energy + e * e);  // bounded above by mu
  WeightVector out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = w[i] + mu_n * e * win[i] / energy;
  }
  return out;
}

WeightVector nlms_step(const WeightVector& w, const Regressor& x, double d,
                       const FilterParams& p) {
  return nlms_family(w, x, d, p.mu, 0.0, p.beta);
}

WeightVector sparse_nlmf_step(const WeightVector& w, const Regressor& x,
                              double d, const FilterParams& p) {
  return nlmf_family(w, x, d, p.mu, p.lambda, p.beta);
}

WeightVector sparse_nlms_step(const WeightVector& w, const Regressor& x,
                              double d, const FilterParams& p) {
  return nlms_family(w, x, d, p.mu, p.lambda, p.beta);
}

}  // namespace nlmf
