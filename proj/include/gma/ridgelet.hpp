#ifndef GMA_RIDGELET_HPP
#define GMA_RIDGELET_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gma/image.hpp"
#include "gma/solve.hpp"
#include "gma/wavelet.hpp"

namespace gma {

// Radon projections obtained through the Fourier-slice route: the 2-D
// spectrum is read along 2n uniformly spaced directions in [0, pi)
// with bilinear interpolation at radial positions (m - n)/2, and each
// line is brought back by a unitary 1-D inverse transform. The signed
// radial index makes slice(theta, -rho) redundant with the antipodal
// direction; the unpaired most-negative sample is zeroed so slices
// stay real.
struct RadonSlices {
  int n = 0;
  int n_angles = 0;   // 2n
  int slice_len = 0;  // 2n
  std::vector<double> data;  // angle-major

  double& at(int t, int m) { return data[static_cast<size_t>(t) * slice_len + m]; }
  double at(int t, int m) const { return data[static_cast<size_t>(t) * slice_len + m]; }
  double angle(int t) const;
};

RadonSlices radon_fourier_slice(const Image& img);

// Rotate pixels a quarter turn about the grid origin (periodic).
Image image_rot90(const Image& img);

// Ridgelet frame over a pseudopolar frequency grid, split into a
// directional channel and a coarse channel.
//
// Directional channel: the spectrum of the deapodized image is read
// along 2n uniform directions in [0, pi) at signed radial positions
// drho*(m - n) through bilinear interpolation. Each sample carries the
// highpass window H times the polar area factor sqrt(|rho| drho dtheta),
// the line is brought to the spatial side, and the resulting profile is
// expanded in periodized Daubechies-8 wavelets, so a straight edge
// condenses into a few coefficients of the direction normal to it.
//
// Coarse channel: the complementary lowpass L (L^2 + H^2 = 1 across the
// crossover band [r0, r1]) is decimated onto an nc x nc grid, returned
// to pixels, and expanded in a 2-D Daubechies-4 basis. Without this
// channel the 2n through-origin lines would duplicate the frequency
// ball near the origin across every direction.
//
// The combination is a frame with bounds near one; analysis energies
// stay within a few percent of the image energy, the exact adjoint is
// available, and least-squares inversion converges in a few dozen
// conjugate-gradient steps.
struct RidgeletFrame {
  int n = 0;
  int n_dir = 0;      // 2n directions over [0, pi)
  int slice_len = 0;  // 2n signed radial samples per direction
  int nc = 0;         // coarse channel grid side
  int j_slice = 3;    // coarsest dyadic level of the per-direction expansion
  int j_coarse = 2;   // coarsest dyadic level of the coarse-channel expansion
  double drho = 0.75; // radial sampling step
  double r0 = 0.0;    // lowpass flat region ends here
  double r1 = 0.0;    // highpass flat region starts here
  WaveletFilter slice_filter;   // db8
  WaveletFilter coarse_filter;  // db4

  // Bilinear interpolation in frequency attenuates pixels by
  // (2 + cos(2 pi x / n))/3 per axis; the directional branch divides
  // that out so analysis energy stays flat across image classes.
  std::vector<double> deap;

  struct Tap {
    int m;     // radial sample index
    int idx;   // lattice index into the n x n spectrum
    double w;  // bilinear weight times window and area factors
  };
  std::vector<std::vector<Tap>> gather;  // per direction

  struct BackTap {
    int t;
    int m;
    double w;
  };
  std::vector<uint32_t> back_offset;  // n*n + 1 prefix offsets into back_taps
  std::vector<BackTap> back_taps;

  struct CoarseTap {
    int cidx;  // index into the nc x nc spectrum
    int idx;   // index into the n x n spectrum
    double w;  // lowpass window value
  };
  std::vector<CoarseTap> coarse_taps;

  // r1_hint moves the lowpass/highpass crossover; zero keeps the
  // default 3n/16, sized for images with full-spectrum content. Callers
  // feeding band-limited content (the curvelet boxes) lower it to the
  // bottom of their band so the whole band is analysed directionally.
  explicit RidgeletFrame(int n, double r1_hint = 0.0);

  size_t coarse_count() const { return static_cast<size_t>(nc) * nc; }
  size_t coeff_count() const {
    return coarse_count() + static_cast<size_t>(n_dir) * slice_len;
  }
  double direction(int t) const;
};

// Coefficient layout: the nc^2 coarse-channel values first (flat 2-D
// wavelet order), then slice_len wavelet coefficients per direction.
struct RidgeletCoeffs {
  int n = 0;
  int nc = 0;
  int n_dir = 0;
  int per_dir = 0;
  std::vector<double> values;

  size_t coarse_count() const { return static_cast<size_t>(nc) * nc; }
  double slice_value(int t, int k) const {
    return values[coarse_count() + static_cast<size_t>(t) * per_dir + k];
  }
};

RidgeletCoeffs ridgelet_analysis(const Image& img, const RidgeletFrame& frame);

// True adjoint of the analysis map.
Image ridgelet_synthesis_adjoint(const RidgeletCoeffs& coeffs, const RidgeletFrame& frame);

// Least-squares reconstruction through conjugate gradients on the
// normal equations in the image domain.
Image ridgelet_synthesis(const RidgeletCoeffs& coeffs, const RidgeletFrame& frame,
                         const CgOptions& opts = {}, CgReport* report = nullptr);

// Smallest and largest eigenvalue estimates of the frame operator by
// power iteration (the lower end through a spectral shift).
std::pair<double, double> ridgelet_frame_bounds(const RidgeletFrame& frame, int iters,
                                                uint64_t seed);

// Periodic half-plane test image: the indicator of u'x >= offset on the
// unit torus (pixel x maps to (x + 0.5)/n - 1/2 per axis), rasterized
// with an erf edge profile about 0.7 px wide. Smoothing the jump at the
// pixel scale keeps the spectrum of the raster close to that of the
// continuous object; a binary raster would fold staircase energy across
// all directions and none of it compresses.
Image halfplane_image(int n, double angle, double offset);

}  // namespace gma

#endif
