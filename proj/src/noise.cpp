#include "nlmf/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nlmf {

namespace {
constexpr double kWeightSumTol = 1e-12;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

GaussianMixture::GaussianMixture() : comps_{GaussianComponent{}} {}

GaussianMixture::GaussianMixture(std::vector<GaussianComponent> components)
    : comps_(std::move(components)) {
  if (comps_.empty()) {
    throw std::invalid_argument("GaussianMixture: at least one component");
  }
  double sum = 0.0;
  for (const GaussianComponent& c : comps_) {
    if (!(c.weight >= 0.0)) {
      throw std::invalid_argument("GaussianMixture: weights must be >= 0");
    }
    if (!(c.variance > 0.0)) {
      throw std::invalid_argument("GaussianMixture: variances must be > 0");
    }
    sum += c.weight;
  }
  if (std::abs(sum - 1.0) > kWeightSumTol) {
    throw std::invalid_argument(
        "GaussianMixture: weights must sum to 1 within 1e-12 (got " +
        std::to_string(sum) + ")");
  }
}

double GaussianMixture::pdf(double z) const {
  double acc = 0.0;
  for (const GaussianComponent& c : comps_) {
    const double diff = z - c.mean;
    acc += c.weight * std::exp(-diff * diff / (2.0 * c.variance)) /
           std::sqrt(kTwoPi * c.variance);
  }
  return acc;
}

double GaussianMixture::sample(Rng& rng) const {
  const double u = rng.uniform01();
  double cum = 0.0;
  std::size_t idx = comps_.size() - 1;  // catches u landing past rounded sum
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    cum += comps_[i].weight;
    if (u < cum) {
      idx = i;
      break;
    }
  }
  const GaussianComponent& c = comps_[idx];
  return c.mean + std::sqrt(c.variance) * rng.gaussian();
}

GaussianMixture::Moments GaussianMixture::moments() const {
  double mean = 0.0;
  for (const GaussianComponent& c : comps_) mean += c.weight * c.mean;
  double second = 0.0;
  for (const GaussianComponent& c : comps_) {
    second += c.weight * (c.variance + c.mean * c.mean);
  }
  return Moments{mean, second - mean * mean};
}

}  // namespace nlmf
