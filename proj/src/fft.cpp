#include "gma/fft.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gma {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

FftPlan::FftPlan(int len) : n(len), w(len > 1 ? len / 2 : 1) {
  if (!is_pow2(len)) throw sizing_error("fft length must be a power of two, got " + std::to_string(len));
  for (int k = 0; k < n / 2; ++k) {
    double ang = -2.0 * kPi * k / n;
    w[k] = cplx{std::cos(ang), std::sin(ang)};
  }
}

void fft(const FftPlan& plan, cplx* a, bool inverse) {
  const int n = plan.n;
  if (n == 1) return;
  // bit-reversal permutation
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    int step = n / len;
    for (int i = 0; i < n; i += len) {
      for (int k = 0; k < len / 2; ++k) {
        cplx tw = plan.w[static_cast<size_t>(k) * step];
        if (inverse) tw = std::conj(tw);
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * tw;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
  double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i) a[i] *= s;
}

void fft2_complex(cplx* a, int w, int h, bool inverse) {
  FftPlan row_plan(w);
  FftPlan col_plan(h);
#pragma omp parallel for
  for (int y = 0; y < h; ++y) fft(row_plan, a + static_cast<size_t>(y) * w, inverse);
#pragma omp parallel for
  for (int x = 0; x < w; ++x) {
    std::vector<cplx> col(h);
    for (int y = 0; y < h; ++y) col[y] = a[static_cast<size_t>(y) * w + x];
    fft(col_plan, col.data(), inverse);
    for (int y = 0; y < h; ++y) a[static_cast<size_t>(y) * w + x] = col[y];
  }
}

Spectrum fft2(const Image& img) {
  Spectrum spec(img.n);
  for (size_t i = 0; i < img.data.size(); ++i) spec.data[i] = cplx{img.data[i], 0.0};
  fft2_complex(spec.data.data(), img.n, img.n, false);
  return spec;
}

Image ifft2(const Spectrum& spec) {
  if (!is_pow2(spec.n) || spec.n < 8)
    throw sizing_error("spectrum side must be a power of two >= 8, got " + std::to_string(spec.n));
  std::vector<cplx> buf = spec.data;
  fft2_complex(buf.data(), spec.n, spec.n, true);
  Image img(spec.n);
  for (size_t i = 0; i < buf.size(); ++i) img.data[i] = buf[i].real();
  return img;
}

double l2_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double l2_norm(const Image& img) { return l2_norm(img.data); }

double l2_dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace gma
