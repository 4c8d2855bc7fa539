#pragma once

#include <cstddef>
#include <vector>

namespace nlmf {

// sign with sign(0) = 0, so exactly-zero entries are never pushed off zero.
double sign(double v);

// Smooth zero-norm surrogate sum_i (1 - exp(-beta |w_i|)). beta > 0.
double zero_norm_approx(const std::vector<double>& w, double beta);

// Componentwise gradient of the surrogate: beta exp(-beta |w_i|) sign(w_i).
std::vector<double> zero_norm_gradient(const std::vector<double>& w, double beta);

// Number of entries with |w_i| > tol.
std::size_t exact_zero_norm(const std::vector<double>& w, double tol);

}  // namespace nlmf
