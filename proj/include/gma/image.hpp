#ifndef GMA_IMAGE_HPP
#define GMA_IMAGE_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "gma/errors.hpp"

namespace gma {

using cplx = std::complex<double>;

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// log2 of a power of two; callers must check is_pow2 first.
inline int log2_int(int n) {
  int j = 0;
  while ((1 << j) < n) ++j;
  return j;
}

// Real pixel grid, n x n with n = 2^J, row-major: data[y*n + x].
// Pixel (x, y) is the sample at ((x + 1/2)/n, (y + 1/2)/n) when the
// grid is identified with the unit square.
struct Image {
  int n = 0;
  std::vector<double> data;

  Image() = default;
  explicit Image(int side) : n(side), data(static_cast<size_t>(side) * side, 0.0) {
    if (!is_pow2(side) || side < 8)
      throw sizing_error("image side must be a power of two >= 8, got " + std::to_string(side));
  }

  double& at(int x, int y) { return data[static_cast<size_t>(y) * n + x]; }
  double at(int x, int y) const { return data[static_cast<size_t>(y) * n + x]; }
  size_t size() const { return data.size(); }
};

// Complex Fourier grid in FFT index order: entry (ix, iy) holds the
// coefficient of integer frequency (fx, fy) with f = i for i < n/2 and
// f = i - n otherwise, so frequencies run over [-n/2, n/2)^2.
struct Spectrum {
  int n = 0;
  std::vector<cplx> data;

  Spectrum() = default;
  explicit Spectrum(int side) : n(side), data(static_cast<size_t>(side) * side, cplx{0.0, 0.0}) {}

  cplx& at(int ix, int iy) { return data[static_cast<size_t>(iy) * n + ix]; }
  cplx at(int ix, int iy) const { return data[static_cast<size_t>(iy) * n + ix]; }
};

inline int freq_of_index(int i, int n) { return i < n / 2 ? i : i - n; }
inline int index_of_freq(int f, int n) { return (f % n + n) % n; }

double l2_norm(const std::vector<double>& v);
double l2_norm(const Image& img);
double l2_dist(const std::vector<double>& a, const std::vector<double>& b);
double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace gma

#endif
