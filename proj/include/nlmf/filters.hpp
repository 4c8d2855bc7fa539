#pragma once

#include <cstddef>
#include <vector>

namespace nlmf {

using WeightVector = std::vector<double>;

// Sliding window over the input signal, newest sample first. A fresh window
// is zero-padded until `order` samples have been pushed.
class Regressor {
 public:
  explicit Regressor(std::size_t order);

  // Shifts the window by one and stores x at index 0.
  void push(double x);

  // Squared Euclidean norm of the window.
  double energy() const;

  const std::vector<double>& window() const { return win_; }
  std::size_t size() const { return win_.size(); }

 private:
  std::vector<double> win_;
};

struct FilterParams {
  double mu = 0.5;       // step size, > 0
  double lambda = 1e-4;  // zero-norm regularization weight, >= 0
  double beta = 5.0;     // surrogate sharpness, > 0
};

// Filter output x^T w. Throws std::invalid_argument on length mismatch.
double predict(const WeightVector& w, const Regressor& x);

// Instantaneous error d - y.
double error(double desired, double predicted);

// Fourth-order cost e^4 / 4.
double cost_lmf(double e);

// e^4 / 4 + lambda * zero_norm_approx(w, beta).
double cost_sparse(double e, const WeightVector& w, const FilterParams& p);

// LMF: w + mu e^3 X. Unnormalized; stability is the caller's concern.
WeightVector lmf_step(const WeightVector& w, const Regressor& x, double d,
                      const FilterParams& p);

// NLMF: w + mu e^3 X / (||X||^2 (||X||^2 + e^2)). A zero-energy window carries
// no information about w, so the update is skipped and w returned unchanged;
// the same guard applies to every normalized step below.
WeightVector nlmf_step(const WeightVector& w, const Regressor& x, double d,
                       const FilterParams& p);

// The same recursion factored as NLMS with variable step
// mu(n) = mu e^2 / (||X||^2 + e^2); agrees with nlmf_step to rounding error.
WeightVector nlmf_variable_step(const WeightVector& w, const Regressor& x,
                                double d, const FilterParams& p);

// NLMS baseline: w + mu e X / ||X||^2.
WeightVector nlms_step(const WeightVector& w, const Regressor& x, double d,
                       const FilterParams& p);

// Zero-norm regularized NLMF:
//   w + mu / (||X||^2 (||X||^2 + e^2)) * (e^3 X - lambda * g(w)),
// g = zero_norm_gradient(w, beta). The first argument is both the point the
// update starts from and the point the penalty is evaluated at; the diffusion
// recursion passes the combined estimate phi_k here.
WeightVector sparse_nlmf_step(const WeightVector& w, const Regressor& x,
                              double d, const FilterParams& p);

// Zero-norm regularized NLMS:
//   w + mu e X / ||X||^2 - (mu lambda / ||X||^2) * g(w).
WeightVector sparse_nlms_step(const WeightVector& w, const Regressor& x,
                              double d, const FilterParams& p);

}  // namespace nlmf
