#include "gma/ridgelet.hpp"

#include <cmath>
#include <stdexcept>

#include "gma/fft.hpp"
#include "gma/rng.hpp"
#include "gma/windows.hpp"

namespace gma {

namespace {
constexpr double kPi = 3.14159265358979323846;

double window_high(double r, double r0, double r1) {
  if (r <= r0) return 0.0;
  if (r >= r1) return 1.0;
  return ramp_rise((r - r0) / (r1 - r0));
}

double window_low(double r, double r0, double r1) {
  if (r <= r0) return 1.0;
  if (r >= r1) return 0.0;
  return ramp_fall((r - r0) / (r1 - r0));
}
}  // namespace

double RadonSlices::angle(int t) const { return kPi * t / n_angles; }

Image image_rot90(const Image& img) {
  const int n = img.n;
  Image out(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) out.at(x, y) = img.at(y, (n - x) % n);
  return out;
}

RadonSlices radon_fourier_slice(const Image& img) {
  const int n = img.n;
  Spectrum spec = fft2(img);
  RadonSlices out;
  out.n = n;
  out.n_angles = 2 * n;
  out.slice_len = 2 * n;
  out.data.assign(static_cast<size_t>(out.n_angles) * out.slice_len, 0.0);
  FftPlan plan(out.slice_len);
#pragma omp parallel for
  for (int t = 0; t < out.n_angles; ++t) {
    double ux = std::cos(out.angle(t)), uy = std::sin(out.angle(t));
    std::vector<cplx> line(out.slice_len, cplx{0.0, 0.0});
    // k = m - n is the radial frequency index; the unpaired k = -n
    // sample stays zero so the inverse transform is real.
    for (int m = 1; m < out.slice_len; ++m) {
      double rho = 0.5 * (m - n);
      double x = rho * ux, y = rho * uy;
      int x0 = static_cast<int>(std::floor(x)), y0 = static_cast<int>(std::floor(y));
      double fx = x - x0, fy = y - y0;
      cplx v{0.0, 0.0};
      for (int dy = 0; dy <= 1; ++dy)
        for (int dx = 0; dx <= 1; ++dx) {
          double w = (dx ? fx : 1.0 - fx) * (dy ? fy : 1.0 - fy);
          v += w * spec.at(index_of_freq(x0 + dx, n), index_of_freq(y0 + dy, n));
        }
      line[(m - n + out.slice_len) % out.slice_len] = v;
    }
    fft(plan, line, true);
    for (int m = 0; m < out.slice_len; ++m)
      out.at(t, m) = line[m].real();
  }
  return out;
}

RidgeletFrame::RidgeletFrame(int side, double r1_hint)
    : n(side),
      n_dir(2 * side),
      slice_len(2 * side),
      slice_filter(make_filter("db8")),
      coarse_filter(make_filter("db4")) {
  if (!is_pow2(n) || n < 16)
    throw sizing_error("ridgelet frame needs a power-of-two side >= 16, got " + std::to_string(n));
  r1 = r1_hint > 0.0 ? std::max(4.0, std::min(r1_hint, 3.0 * n / 16.0))
                     : std::max(4.0, 3.0 * n / 16.0);
  r0 = 0.5 * r1;
  nc = 16;
  while (nc < 2 * static_cast<int>(r1)) nc *= 2;
  if (nc > n) nc = n;

  deap.assign(static_cast<size_t>(n) * n, 1.0);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      double ax = 3.0 / (2.0 + std::cos(2.0 * kPi * x / n));
      double ay = 3.0 / (2.0 + std::cos(2.0 * kPi * y / n));
      deap[static_cast<size_t>(y) * n + x] = std::sqrt(ax * ay);
    }

  for (int cy = 0; cy < nc; ++cy)
    for (int cx = 0; cx < nc; ++cx) {
      int fx = freq_of_index(cx, nc), fy = freq_of_index(cy, nc);
      double w = window_low(std::hypot(static_cast<double>(fx), static_cast<double>(fy)), r0, r1);
      if (w == 0.0) continue;
      coarse_taps.push_back({cy * nc + cx, index_of_freq(fy, n) * n + index_of_freq(fx, n), w});
    }

  gather.assign(n_dir, {});
  std::vector<std::vector<BackTap>> back(static_cast<size_t>(n) * n);
  const double dtheta = kPi / n_dir;
  for (int t = 0; t < n_dir; ++t) {
    const double ux = std::cos(direction(t)), uy = std::sin(direction(t));
    // m = 0 would sit at rho = -drho*n, outside the frequency square
    // for every direction, so the loop starts at 1.
    for (int m = 1; m < slice_len; ++m) {
      const double rho = drho * (m - n);
      const double h = window_high(std::abs(rho), r0, r1);
      if (h == 0.0) continue;
      const double w0 = h * std::sqrt(std::max(std::abs(rho), 0.25 * drho) * drho * dtheta);
      const double px = rho * ux, py = rho * uy;
      const int x0 = static_cast<int>(std::floor(px));
      const int y0 = static_cast<int>(std::floor(py));
      const double fx = px - x0, fy = py - y0;
      for (int dy = 0; dy <= 1; ++dy)
        for (int dx = 0; dx <= 1; ++dx) {
          const int gx = x0 + dx, gy = y0 + dy;
          // stencil corners beyond the closed square are dropped; the
          // +n/2 edge is the -n/2 row of the periodic lattice
          if (gx < -n / 2 || gx > n / 2 || gy < -n / 2 || gy > n / 2) continue;
          const double w = (dx ? fx : 1.0 - fx) * (dy ? fy : 1.0 - fy) * w0;
          if (w == 0.0) continue;
          const int ix = index_of_freq(gx == n / 2 ? -n / 2 : gx, n);
          const int iy = index_of_freq(gy == n / 2 ? -n / 2 : gy, n);
          const int idx = iy * n + ix;
          gather[t].push_back({m, idx, w});
          back[idx].push_back({t, m, w});
        }
    }
  }
  // every frequency cell must be visible to at least one channel or
  // least-squares inversion cannot reach it
  std::vector<double> diag(static_cast<size_t>(n) * n, 0.0);
  for (const auto& ct : coarse_taps) diag[ct.idx] += ct.w * ct.w;
  for (size_t idx = 0; idx < back.size(); ++idx)
    for (const auto& bt : back[idx]) diag[idx] += bt.w * bt.w;
  for (double d : diag)
    if (d <= 0.0) throw std::logic_error("ridgelet frame leaves a frequency cell uncovered");

  back_offset.assign(static_cast<size_t>(n) * n + 1, 0);
  for (size_t i = 0; i < back.size(); ++i)
    back_offset[i + 1] = back_offset[i] + static_cast<uint32_t>(back[i].size());
  back_taps.reserve(back_offset.back());
  for (const auto& lst : back)
    back_taps.insert(back_taps.end(), lst.begin(), lst.end());
}

double RidgeletFrame::direction(int t) const { return kPi * t / n_dir; }

RidgeletCoeffs ridgelet_analysis(const Image& img, const RidgeletFrame& frame) {
  if (img.n != frame.n) throw sizing_error("image side does not match the ridgelet frame");
  const int n = frame.n, len = frame.slice_len, nc = frame.nc;
  RidgeletCoeffs out;
  out.n = n;
  out.nc = nc;
  out.n_dir = frame.n_dir;
  out.per_dir = len;
  out.values.assign(frame.coeff_count(), 0.0);

  Spectrum plain = fft2(img);
  std::vector<cplx> cspec(static_cast<size_t>(nc) * nc, cplx{0.0, 0.0});
  for (const auto& ct : frame.coarse_taps) cspec[ct.cidx] = ct.w * plain.data[ct.idx];
  fft2_complex(cspec.data(), nc, nc, true);
  Image cimg(nc);
  for (size_t i = 0; i < cspec.size(); ++i) cimg.data[i] = cspec[i].real();
  auto cflat = flatten(dwt2(cimg, frame.coarse_filter, frame.j_coarse));
  std::copy(cflat.begin(), cflat.end(), out.values.begin());

  Image apod(n);
  for (size_t i = 0; i < apod.data.size(); ++i) apod.data[i] = img.data[i] * frame.deap[i];
  Spectrum spec = fft2(apod);
  FftPlan plan(len);
#pragma omp parallel for
  for (int t = 0; t < frame.n_dir; ++t) {
    std::vector<cplx> line(len, cplx{0.0, 0.0});
    for (const auto& tap : frame.gather[t])
      line[(tap.m - n + len) % len] += tap.w * spec.data[tap.idx];
    fft(plan, line, true);
    std::vector<double> prof(len);
    for (int i = 0; i < len; ++i) prof[i] = line[i].real();
    auto flat = flatten(dwt1(prof, frame.slice_filter, frame.j_slice));
    std::copy(flat.begin(), flat.end(),
              out.values.begin() + frame.coarse_count() + static_cast<size_t>(t) * len);
  }
  return out;
}

Image ridgelet_synthesis_adjoint(const RidgeletCoeffs& coeffs, const RidgeletFrame& frame) {
  if (coeffs.n != frame.n || coeffs.nc != frame.nc || coeffs.n_dir != frame.n_dir ||
      coeffs.per_dir != frame.slice_len || coeffs.values.size() != frame.coeff_count())
    throw sizing_error("coefficient block does not match the ridgelet frame");
  const int n = frame.n, len = frame.slice_len, nc = frame.nc;

  std::vector<double> cflat(coeffs.values.begin(), coeffs.values.begin() + frame.coarse_count());
  Image cimg = idwt2(unflatten2(cflat, nc, frame.j_coarse), frame.coarse_filter);
  std::vector<cplx> cspec(static_cast<size_t>(nc) * nc);
  for (size_t i = 0; i < cspec.size(); ++i) cspec[i] = cplx{cimg.data[i], 0.0};
  fft2_complex(cspec.data(), nc, nc, false);
  Spectrum lowpart(n);
  for (const auto& ct : frame.coarse_taps) lowpart.data[ct.idx] += ct.w * cspec[ct.cidx];
  Image out = ifft2(lowpart);

  FftPlan plan(len);
  std::vector<std::vector<cplx>> lines(frame.n_dir);
#pragma omp parallel for
  for (int t = 0; t < frame.n_dir; ++t) {
    std::vector<double> flat(
        coeffs.values.begin() + frame.coarse_count() + static_cast<size_t>(t) * len,
        coeffs.values.begin() + frame.coarse_count() + static_cast<size_t>(t + 1) * len);
    auto prof = idwt1(unflatten1(flat, len, frame.j_slice), frame.slice_filter);
    std::vector<cplx> line(len);
    for (int i = 0; i < len; ++i) line[i] = cplx{prof[i], 0.0};
    fft(plan, line, false);
    lines[t] = std::move(line);
  }
  Spectrum spec(n);
  // each lattice index sums its own taps, so these writes never race
#pragma omp parallel for
  for (int idx = 0; idx < n * n; ++idx) {
    cplx acc{0.0, 0.0};
    for (uint32_t k = frame.back_offset[idx]; k < frame.back_offset[idx + 1]; ++k) {
      const auto& bt = frame.back_taps[k];
      acc += bt.w * lines[bt.t][(bt.m - n + len) % len];
    }
    spec.data[idx] = acc;
  }
  Image dir = ifft2(spec);
  for (size_t i = 0; i < out.data.size(); ++i) out.data[i] += dir.data[i] * frame.deap[i];
  return out;
}

Image ridgelet_synthesis(const RidgeletCoeffs& coeffs, const RidgeletFrame& frame,
                         const CgOptions& opts, CgReport* report) {
  Image rhs = ridgelet_synthesis_adjoint(coeffs, frame);
  auto apply_normal = [&](const std::vector<double>& x) {
    Image xi(frame.n);
    xi.data = x;
    return ridgelet_synthesis_adjoint(ridgelet_analysis(xi, frame), frame).data;
  };
  Image out(frame.n);
  out.data = cg_solve(apply_normal, rhs.data, opts, report);
  return out;
}

Image halfplane_image(int n, double angle, double offset) {
  constexpr double kEdgeWidth = 0.7;  // px
  Image img(n);
  double ux = std::cos(angle), uy = std::sin(angle);
  double s = kEdgeWidth * std::sqrt(2.0);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      double px = (x + 0.5) / n - 0.5;
      double py = (y + 0.5) / n - 0.5;
      double d = (px * ux + py * uy - offset) * n;
      img.at(x, y) = 0.5 * (1.0 + std::erf(d / s));
    }
  return img;
}

std::pair<double, double> ridgelet_frame_bounds(const RidgeletFrame& frame, int iters,
                                                uint64_t seed) {
  auto apply_normal = [&](const Image& x) {
    return ridgelet_synthesis_adjoint(ridgelet_analysis(x, frame), frame);
  };
  auto power = [&](const std::function<Image(const Image&)>& op, uint64_t s) {
    Image v = seeded_gaussian(frame.n, s);
    double lambda = 0.0;
    for (int it = 0; it < iters; ++it) {
      double nv = l2_norm(v);
      for (double& x : v.data) x /= nv;
      Image w = op(v);
      lambda = 0.0;
      for (size_t i = 0; i < w.data.size(); ++i) lambda += v.data[i] * w.data[i];
      v = w;
    }
    return lambda;
  };
  double upper = power(apply_normal, seed);
  double shift = upper + 0.1;
  auto shifted = [&](const Image& x) {
    Image w = apply_normal(x);
    for (size_t i = 0; i < w.data.size(); ++i) w.data[i] = shift * x.data[i] - w.data[i];
    return w;
  };
  double lower = shift - power(shifted, mix_seed(seed, 1));
  return {lower, upper};
}

}  // namespace gma
