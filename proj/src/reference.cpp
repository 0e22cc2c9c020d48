#include "gma/reference.hpp"

#include <cmath>
#include <limits>

#include "gma/fft.hpp"

namespace gma::reference {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;
}

std::vector<cplx> naive_dft(std::span<const cplx> in, bool inverse) {
  const size_t n = in.size();
  const double sgn = inverse ? 1.0 : -1.0;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  std::vector<cplx> out(n);
  for (size_t k = 0; k < n; ++k) {
    cplx acc{0.0, 0.0};
    for (size_t t = 0; t < n; ++t) {
      double ang = sgn * kTwoPi * static_cast<double>(k * t % n) / n;
      acc += in[t] * cplx{std::cos(ang), std::sin(ang)};
    }
    out[k] = acc * scale;
  }
  return out;
}

Spectrum naive_dft2(const Image& img) {
  const int n = img.n;
  Spectrum spec(n);
  for (int ky = 0; ky < n; ++ky)
    for (int kx = 0; kx < n; ++kx) {
      cplx acc{0.0, 0.0};
      for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
          double ang = -kTwoPi * (static_cast<double>(kx) * x + static_cast<double>(ky) * y) / n;
          acc += img.at(x, y) * cplx{std::cos(ang), std::sin(ang)};
        }
      spec.at(kx, ky) = acc / static_cast<double>(n);
    }
  return spec;
}

namespace {

void fft_recursive(std::vector<cplx>& a) {
  const size_t n = a.size();
  if (n == 1) return;
  std::vector<cplx> even(n / 2), odd(n / 2);
  for (size_t i = 0; i < n / 2; ++i) {
    even[i] = a[2 * i];
    odd[i] = a[2 * i + 1];
  }
  fft_recursive(even);
  fft_recursive(odd);
  for (size_t k = 0; k < n / 2; ++k) {
    double ang = -kTwoPi * k / n;
    cplx t = cplx{std::cos(ang), std::sin(ang)} * odd[k];
    a[k] = even[k] + t;
    a[k + n / 2] = even[k] - t;
  }
}

void fft2_serial_inplace(std::vector<cplx>& buf, int n, bool inverse) {
  if (inverse)
    for (auto& z : buf) z = std::conj(z);
  std::vector<cplx> line(n);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) line[x] = buf[static_cast<size_t>(y) * n + x];
    fft_recursive(line);
    for (int x = 0; x < n; ++x) buf[static_cast<size_t>(y) * n + x] = line[x];
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) line[y] = buf[static_cast<size_t>(y) * n + x];
    fft_recursive(line);
    for (int y = 0; y < n; ++y) buf[static_cast<size_t>(y) * n + x] = line[y];
  }
  double s = 1.0 / n;
  if (inverse)
    for (auto& z : buf) z = std::conj(z) * s;
  else
    for (auto& z : buf) z *= s;
}

}  // namespace

Spectrum fft2_serial(const Image& img) {
  Spectrum spec(img.n);
  for (size_t i = 0; i < img.data.size(); ++i) spec.data[i] = cplx{img.data[i], 0.0};
  fft2_serial_inplace(spec.data, img.n, false);
  return spec;
}

Image ifft2_serial(const Spectrum& spec) {
  std::vector<cplx> buf = spec.data;
  fft2_serial_inplace(buf, spec.n, true);
  Image img(spec.n);
  for (size_t i = 0; i < buf.size(); ++i) img.data[i] = buf[i].real();
  return img;
}

double strip_width_bruteforce(std::span<const std::array<double, 2>> pts, int dirs) {
  if (pts.size() <= 2) {
    // 0-2 points always fit in a degenerate strip; 2 points lie on a line.
    return 0.0;
  }
  double best = std::numeric_limits<double>::infinity();
  constexpr double kPi = 3.14159265358979323846;
  for (int d = 0; d < dirs; ++d) {
    double ang = kPi * d / dirs;
    double nx = std::cos(ang), ny = std::sin(ang);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto& p : pts) {
      double s = nx * p[0] + ny * p[1];
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
    best = std::min(best, hi - lo);
  }
  return best;
}

}  // namespace gma::reference
