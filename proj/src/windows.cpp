#include "gma/windows.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gma {

namespace {
constexpr double kPi = 3.14159265358979323846;
double pow2d(int j) { return std::ldexp(1.0, j); }
}  // namespace

double ramp_profile(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  return t * t * t * t * (35.0 + t * (-84.0 + t * (70.0 - 20.0 * t)));
}

double ramp_rise(double t) { return std::sin(0.5 * kPi * ramp_profile(t)); }
double ramp_fall(double t) { return std::cos(0.5 * kPi * ramp_profile(t)); }

double angular_window(double u) {
  double a = std::abs(u);
  if (a >= 1.0) return 0.0;
  return ramp_fall(a);
}

double RadialBank::eval(int j, double r) const {
  if (j < j_lo || j > j_hi || r <= 0.0) return 0.0;
  double lo = pow2d(j - 1), mid = pow2d(j), hi = pow2d(j + 1);
  if (r < lo) return 0.0;
  if (r < mid) return ramp_rise(r / lo - 1.0);
  if (j == j_hi && flat_top) return 1.0;
  if (r < hi) return ramp_fall(r / mid - 1.0);
  return 0.0;
}

double RadialBank::eval_father(double r) const {
  double lo = pow2d(j_lo - 1);
  if (r <= lo) return 1.0;
  if (r < 2.0 * lo) return ramp_fall(r / lo - 1.0);
  return 0.0;
}

double RadialBank::square_sum(double r) const {
  double f = eval_father(r);
  double s = f * f;
  for (int j = j_lo; j <= j_hi; ++j) {
    double w = eval(j, r);
    s += w * w;
  }
  return s;
}

RadialBank make_radial_bank(int j_lo, int j_hi, bool flat_top, double nyquist_limit) {
  if (j_lo < 1 || j_hi < j_lo)
    throw sizing_error("radial bank needs 1 <= j_lo <= j_hi, got [" + std::to_string(j_lo) + ", " +
                       std::to_string(j_hi) + "]");
  if (nyquist_limit > 0.0) {
    double outer = flat_top ? pow2d(j_hi) : pow2d(j_hi + 1);
    if (outer > nyquist_limit)
      throw sizing_error("radial bank reaches " + std::to_string(outer) + " past the Nyquist ring " +
                         std::to_string(nyquist_limit));
  }
  return RadialBank{j_lo, j_hi, flat_top};
}

double radial_partition_deviation(const RadialBank& bank, double r_max, int samples) {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    double r = r_max * (i + 0.5) / samples;
    worst = std::max(worst, std::abs(bank.square_sum(r) - 1.0));
  }
  return worst;
}

double SpatialPartition::weight1d(int k, int i) const {
  int v = overlap;
  int u = i - k * box;
  u = ((u % n) + n) % n;
  if (u >= n - v) u -= n;  // periodic offset in [-v, n-v)
  if (u < v) return rise[u + v];
  if (u < box - v) return 1.0;
  if (u < box + v) return rise[2 * v - 1 - (u - (box - v))];
  return 0.0;
}

SpatialPartition make_partition(int n, int box, int overlap) {
  if (box < 1 || n % box != 0)
    throw sizing_error("box length " + std::to_string(box) + " must divide the grid length " +
                       std::to_string(n));
  if (overlap < 0 || (overlap != 0 && 2 * overlap >= box))
    throw sizing_error("overlap " + std::to_string(overlap) + " must satisfy 2*overlap < box");
  if (box == n) overlap = 0;  // a single box self-wraps; keep the window constant
  SpatialPartition part;
  part.n = n;
  part.box = box;
  part.overlap = overlap;
  part.rise.resize(static_cast<size_t>(2) * overlap);
  for (int i = 0; i < 2 * overlap; ++i)
    part.rise[i] = ramp_rise((i + 0.5) / (2.0 * overlap));
  return part;
}

}  // namespace gma
