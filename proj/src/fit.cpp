#include "gma/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gma {

RateFit fit_loglog(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("fit_loglog: length mismatch");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  size_t m = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0) continue;
    double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
    ++m;
  }
  if (m < 2) throw std::invalid_argument("fit_loglog: fewer than two positive pairs");
  double denom = m * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("fit_loglog: degenerate abscissae");
  RateFit fit;
  fit.points = m;
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  double ss_tot = syy - sy * sy / m;
  double ss_res = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0) continue;
    double e = std::log(ys[i]) - (fit.intercept + fit.slope * std::log(xs[i]));
    ss_res += e * e;
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

std::vector<double> decreasing_rearrangement(std::span<const double> vals) {
  std::vector<double> out(vals.size());
  for (size_t i = 0; i < vals.size(); ++i) out[i] = std::abs(vals[i]);
  std::sort(out.begin(), out.end(), std::greater<double>());
  return out;
}

RateFit decay_rate(const std::vector<double>& sorted_vals, size_t k_min, size_t k_max) {
  if (k_min < 1 || k_max < k_min || k_max > sorted_vals.size())
    throw std::invalid_argument("decay_rate: bad rank range");
  std::vector<double> ks, vs;
  ks.reserve(k_max - k_min + 1);
  vs.reserve(k_max - k_min + 1);
  for (size_t k = k_min; k <= k_max; ++k) {
    ks.push_back(static_cast<double>(k));
    vs.push_back(sorted_vals[k - 1]);
  }
  return fit_loglog(ks, vs);
}

}  // namespace gma
