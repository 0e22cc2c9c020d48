#ifndef GMA_FIT_HPP
#define GMA_FIT_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace gma {

// Least-squares line through (log x, log y); slope is the power-law
// exponent, intercept the log of the prefactor.
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  size_t points = 0;
};

// Pairs with a nonpositive coordinate are skipped; at least two must
// survive.
RateFit fit_loglog(std::span<const double> xs, std::span<const double> ys);

// Magnitudes sorted in decreasing order.
std::vector<double> decreasing_rearrangement(std::span<const double> vals);

// Power-law fit of sorted magnitudes against rank over [k_min, k_max]
// (1-based, inclusive).
RateFit decay_rate(const std::vector<double>& sorted_vals, size_t k_min, size_t k_max);

}  // namespace gma

#endif
