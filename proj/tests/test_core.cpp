#include <doctest.h>

#include <cmath>
#include <numeric>

#include "gma/fft.hpp"
#include "gma/fit.hpp"
#include "gma/image.hpp"
#include "gma/reference.hpp"
#include "gma/rng.hpp"
#include "gma/windows.hpp"

using namespace gma;

TEST_CASE("image constructor rejects bad sides") {
  CHECK_THROWS_AS(Image(48), sizing_error);
  CHECK_THROWS_AS(Image(4), sizing_error);
  CHECK_THROWS_AS(Image(-16), sizing_error);
  CHECK_NOTHROW(Image(8));
}

TEST_CASE("frequency index maps round trip") {
  const int n = 32;
  for (int i = 0; i < n; ++i) {
    int f = freq_of_index(i, n);
    CHECK(f >= -n / 2);
    CHECK(f < n / 2);
    CHECK(index_of_freq(f, n) == i);
  }
}

TEST_CASE("fft matches the direct transform in one dimension") {
  const int n = 64;
  auto noise = gaussian_vector(2 * n, 7);
  std::vector<cplx> sig(n);
  for (int i = 0; i < n; ++i) sig[i] = cplx{noise[2 * i], noise[2 * i + 1]};

  auto want = reference::naive_dft(sig, false);
  auto got = sig;
  FftPlan plan(n);
  fft(plan, got, false);
  for (int i = 0; i < n; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-10);

  auto back = got;
  fft(plan, back, true);
  for (int i = 0; i < n; ++i) CHECK(std::abs(back[i] - sig[i]) < 1e-12);
}

TEST_CASE("fft2 matches the direct 2-D transform") {
  Image img = seeded_gaussian(16, 11);
  Spectrum want = reference::naive_dft2(img);
  Spectrum got = fft2(img);
  for (size_t i = 0; i < want.data.size(); ++i) CHECK(std::abs(got.data[i] - want.data[i]) < 1e-10);
}

TEST_CASE("fft2 matches the serial implementation") {
  Image img = seeded_gaussian(64, 3);
  Spectrum a = fft2(img);
  Spectrum b = reference::fft2_serial(img);
  for (size_t i = 0; i < a.data.size(); ++i) CHECK(std::abs(a.data[i] - b.data[i]) < 1e-11);
  Image ra = ifft2(a);
  Image rb = reference::ifft2_serial(b);
  CHECK(max_abs_diff(ra.data, rb.data) < 1e-11);
}

TEST_CASE("fft2 is unitary") {
  Image img = seeded_gaussian(64, 5);
  Spectrum spec = fft2(img);
  double es = 0.0;
  for (const auto& z : spec.data) es += std::norm(z);
  CHECK(std::sqrt(es) == doctest::Approx(l2_norm(img)).epsilon(1e-12));
  Image back = ifft2(spec);
  CHECK(max_abs_diff(back.data, img.data) < 1e-12);
}

TEST_CASE("constant and delta images transform as expected") {
  const int n = 32;
  Image c(n);
  for (double& v : c.data) v = 0.7;
  Spectrum sc = fft2(c);
  CHECK(std::abs(sc.at(0, 0) - cplx{0.7 * n, 0.0}) < 1e-12);
  double off = 0.0;
  for (size_t i = 1; i < sc.data.size(); ++i) off = std::max(off, std::abs(sc.data[i]));
  CHECK(off < 1e-12);

  Image d(n);
  d.at(0, 0) = 1.0;
  Spectrum sd = fft2(d);
  for (const auto& z : sd.data) CHECK(std::abs(z - cplx{1.0 / n, 0.0}) < 1e-13);
}

TEST_CASE("fft rejects non power-of-two lengths") {
  CHECK_THROWS_AS(FftPlan(12), sizing_error);
  CHECK_THROWS_AS(FftPlan(0), sizing_error);
}

TEST_CASE("ramp profile is a smooth step with the mirror identity") {
  CHECK(ramp_profile(-0.5) == 0.0);
  CHECK(ramp_profile(0.0) == 0.0);
  CHECK(ramp_profile(1.0) == 1.0);
  CHECK(ramp_profile(2.0) == 1.0);
  double prev = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    double t = i / 1000.0;
    double v = ramp_profile(t);
    CHECK(v >= prev);
    prev = v;
    CHECK(std::abs(ramp_profile(t) + ramp_profile(1.0 - t) - 1.0) < 1e-14);
    double r = ramp_rise(t), f = ramp_fall(t);
    CHECK(std::abs(r * r + f * f - 1.0) < 1e-14);
  }
  // near-flat entry and exit (two vanishing derivatives)
  CHECK(ramp_profile(0.01) < 1e-6);
  CHECK(1.0 - ramp_profile(0.99) < 1e-6);
}

TEST_CASE("radial bank squares sum to one across the plane") {
  RadialBank bank = make_radial_bank(3, 8, true, 256.0);
  // includes radii beyond the last peak, where the flat top takes over
  CHECK(radial_partition_deviation(bank, 400.0, 10000) < 1e-12);

  RadialBank closed = make_radial_bank(2, 4, false, 32.0);
  // partition holds up to the start of the final falling edge at 2^4
  CHECK(radial_partition_deviation(closed, 16.0, 10000) < 1e-12);
}

TEST_CASE("radial bank windows overlap only adjacent scales") {
  RadialBank bank = make_radial_bank(3, 8, true, 0.0);
  CHECK(bank.eval(4, 7.9) == 0.0);
  CHECK(bank.eval(4, 8.1) > 0.0);
  CHECK(bank.eval(4, 31.9) > 0.0);
  CHECK(bank.eval(4, 32.1) == 0.0);
  CHECK(bank.eval(8, 1000.0) == 1.0);
  CHECK(bank.eval_father(3.9) == 1.0);
  CHECK(bank.eval_father(8.1) == 0.0);
}

TEST_CASE("radial bank rejects a reach past the Nyquist ring") {
  CHECK_THROWS_AS(make_radial_bank(3, 9, true, 256.0), sizing_error);
  CHECK_THROWS_AS(make_radial_bank(3, 8, false, 256.0), sizing_error);
  CHECK_NOTHROW(make_radial_bank(3, 8, true, 256.0));
  CHECK_THROWS_AS(make_radial_bank(0, 4, true, 0.0), sizing_error);
  CHECK_THROWS_AS(make_radial_bank(5, 4, true, 0.0), sizing_error);
}

TEST_CASE("angular window translates square-sum to one") {
  for (int i = 0; i <= 500; ++i) {
    double u = -1.0 + 2.0 * i / 500.0;
    double s = 0.0;
    for (int k = -2; k <= 2; ++k) {
      double w = angular_window(u - k);
      s += w * w;
    }
    CHECK(std::abs(s - 1.0) < 1e-14);
  }
  // unit square mean over the support, trapezoid on a fine grid
  const int m = 1 << 16;
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    double u = -1.0 + 2.0 * (i + 0.5) / m;
    double w = angular_window(u);
    acc += w * w * (2.0 / m);
  }
  CHECK(acc == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("spatial partition tiles the grid") {
  const int n = 64;
  SpatialPartition part = make_partition(n, 16, 4);
  CHECK(part.boxes() == 4);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = 0; k < part.boxes(); ++k) {
      double w = part.weight1d(k, i);
      s += w * w;
    }
    CHECK(std::abs(s - 1.0) < 1e-14);
  }
}

TEST_CASE("spatial partition with no overlap is an indicator") {
  SpatialPartition part = make_partition(64, 8, 0);
  for (int i = 0; i < 64; ++i)
    for (int k = 0; k < 8; ++k) CHECK(part.weight1d(k, i) == (i / 8 == k ? 1.0 : 0.0));
}

TEST_CASE("single box partition is the constant window") {
  SpatialPartition part = make_partition(64, 64, 8);
  for (int i = 0; i < 64; ++i) CHECK(part.weight1d(0, i) == 1.0);
}

TEST_CASE("spatial partition rejects bad geometry") {
  CHECK_THROWS_AS(make_partition(64, 24, 0), sizing_error);
  CHECK_THROWS_AS(make_partition(64, 16, 8), sizing_error);
  CHECK_THROWS_AS(make_partition(64, 16, -1), sizing_error);
}

TEST_CASE("seeded gaussian fields are reproducible") {
  Image a = seeded_gaussian(32, 1234);
  Image b = seeded_gaussian(32, 1234);
  Image c = seeded_gaussian(32, 1235);
  CHECK(a.data == b.data);
  CHECK(max_abs_diff(a.data, c.data) > 0.1);

  double mean = std::accumulate(a.data.begin(), a.data.end(), 0.0) / a.data.size();
  double var = 0.0;
  for (double v : a.data) var += (v - mean) * (v - mean);
  var /= a.data.size();
  CHECK(std::abs(mean) < 5.0 / 32.0);
  CHECK(var == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("mixed seeds decorrelate replicate streams") {
  CHECK(mix_seed(99, 0) != mix_seed(99, 1));
  CHECK(mix_seed(99, 0) != mix_seed(100, 0));
  CHECK(mix_seed(99, 3) == mix_seed(99, 3));
}

TEST_CASE("log-log fit recovers an exact power law") {
  std::vector<double> ks, vs;
  for (int k = 1; k <= 200; ++k) {
    ks.push_back(k);
    vs.push_back(3.0 * std::pow(k, -1.5));
  }
  RateFit fit = fit_loglog(ks, vs);
  CHECK(fit.slope == doctest::Approx(-1.5).epsilon(1e-12));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("decreasing rearrangement sorts magnitudes") {
  std::vector<double> vals = {0.5, -3.0, 1.0, -0.25, 2.0};
  auto sorted = decreasing_rearrangement(vals);
  CHECK(sorted == std::vector<double>{3.0, 2.0, 1.0, 0.5, 0.25});
  RateFit fit = decay_rate(sorted, 1, 5);
  CHECK(fit.slope < 0.0);
  CHECK_THROWS(decay_rate(sorted, 0, 5));
  CHECK_THROWS(decay_rate(sorted, 2, 9));
}
