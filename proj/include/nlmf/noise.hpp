#pragma once

#include <vector>

#include "nlmf/random.hpp"

namespace nlmf {

struct GaussianComponent {
  double weight = 1.0;    // >= 0, weights sum to 1
  double mean = 0.0;
  double variance = 1.0;  // > 0
};

// Finite Gaussian mixture. Immutable after construction; the constructor
// rejects weights not summing to 1 (tol 1e-12), negative weights and
// nonpositive variances.
class GaussianMixture {
 public:
  GaussianMixture();  // standard normal
  explicit GaussianMixture(std::vector<GaussianComponent> components);

  const std::vector<GaussianComponent>& components() const { return comps_; }

  // Mixture density at z.
  double pdf(double z) const;

  // Draws the component index with probability a_i, then N(mu_i, sigma_i^2).
  double sample(Rng& rng) const;

  struct Moments {
    double mean = 0.0;
    double variance = 0.0;
  };
  // mean = sum a_i mu_i; variance = sum a_i (sigma_i^2 + mu_i^2) - mean^2.
  Moments moments() const;

 private:
  std::vector<GaussianComponent> comps_;
};

}  // namespace nlmf
