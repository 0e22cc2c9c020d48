#ifndef GMA_WINDOWS_HPP
#define GMA_WINDOWS_HPP

#include <vector>

#include "gma/errors.hpp"

namespace gma {

// Polynomial ramp profile: 0 below 0, 1 above 1, strictly increasing in
// between with two vanishing derivatives at both ends. Satisfies
// ramp_profile(t) + ramp_profile(1-t) = 1, which is what makes every
// sin/cos pair built from it square-sum to one exactly.
double ramp_profile(double t);

// Rising and falling halves of a smooth window edge.
double ramp_rise(double t);  // sin(pi/2 * ramp_profile(t))
double ramp_fall(double t);  // cos(pi/2 * ramp_profile(t))

// Symmetric angular bump: ramp_fall(|u|) for |u| <= 1, zero outside.
// Integer translates square-sum to one, and the profile integrates to
// one in square mean: int w^2 du = 1 over [-1, 1].
double angular_window(double u);

// Dyadic annular windows w_j supported on [2^(j-1), 2^(j+1)] together
// with a father window filling [0, 2^j_lo]. Squares sum to one for all
// radii (out to infinity when flat_top is set, otherwise up to the
// start of the last falling edge).
struct RadialBank {
  int j_lo = 0;
  int j_hi = 0;
  bool flat_top = true;

  double eval(int j, double r) const;
  double eval_father(double r) const;
  double square_sum(double r) const;
};

// nyquist_limit <= 0 disables the range check; otherwise the bank must
// fit inside the disk of that radius.
RadialBank make_radial_bank(int j_lo, int j_hi, bool flat_top, double nyquist_limit);

// Largest deviation of square_sum from 1 over a uniform radius sample.
double radial_partition_deviation(const RadialBank& bank, double r_max, int samples);

// Overlapping 1-D box windows on a periodic pixel grid of length n,
// box length `box` (must divide n), ramp half-width `overlap`. The
// squared windows tile the grid exactly. 2-D windows are tensor
// products via weight().
struct SpatialPartition {
  int n = 0;
  int box = 0;
  int overlap = 0;
  std::vector<double> rise;  // 2*overlap ramp samples at half-integer offsets

  int boxes() const { return n / box; }
  double weight1d(int k, int i) const;
  double weight(int k1, int k2, int x, int y) const { return weight1d(k1, x) * weight1d(k2, y); }
};

SpatialPartition make_partition(int n, int box, int overlap);

}  // namespace gma

#endif
