#ifndef GMA_CURVELET_HPP
#define GMA_CURVELET_HPP

#include <memory>
#include <vector>

#include "gma/image.hpp"
#include "gma/ridgelet.hpp"
#include "gma/solve.hpp"
#include "gma/windows.hpp"

namespace gma {

// Dyadic bandpass split of an image. Each band carries the radial
// window w_j applied once, so recomposition applies it a second time
// and the squared partition of unity makes the round trip exact and
// the band energies add up to the image energy.
struct SubbandStack {
  int n = 0;
  int j_lo = 0;
  int j_hi = 0;
  std::vector<Image> band;  // band[i] holds subband j_lo + i
  Image coarse;
};

SubbandStack subband_decompose(const Image& img);
Image subband_recompose(const SubbandStack& stack);

// One dyadic scale of the curvelet frame: the subband lives on its own
// nj x nj grid (the band is band-limited, so nothing is lost), the grid
// is tiled by overlapping square boxes, and every windowed box is
// expanded by the ridgelet frame of side `patch`.
struct CurveletBand {
  int j = 0;        // dyadic scale
  int nj = 0;       // grid side the subband is carried on
  int box = 0;      // box spacing on that grid
  int patch = 0;    // ridgelet grid side (box plus overlap margins)
  bool clamped = false;  // box side hit the floor instead of n*2^(-ceil(j/2))
  double scale = 1.0;    // calibration factor on the box coefficients
  SpatialPartition part;
  size_t offset = 0;     // first coefficient of this band
  size_t per_box = 0;    // ridgelet coefficients per box
};

// The frame recipe: bandpass split, smooth spatial partition into boxes
// whose side shrinks like 2^(-j/2) while the band wavelength shrinks
// like 2^(-j), ridgelet analysis of every box. A coefficient therefore
// responds to a piece of the image that is one wavelength wide and one
// box long, and an edge through a box meets only the few coefficients
// of the direction it is locally aligned with.
//
// The per-box ridgelet is a frame rather than a basis, so coefficient
// energy is only approximately the image energy. Each band carries a
// calibration factor measured at construction on bandpass noise, and
// the residual spread left after calibration is recorded in
// parseval_spread rather than assumed away.
struct CurveletFrame {
  int n = 0;
  int j_lo = 2;
  int j_hi = 0;
  int n_coarse = 16;
  RadialBank bank;
  std::vector<CurveletBand> bands;
  double parseval_spread = 0.0;
  size_t total = 0;

  explicit CurveletFrame(int n);

  const RidgeletFrame& frame_for(int patch) const;
  size_t coarse_count() const { return static_cast<size_t>(n_coarse) * n_coarse; }
  size_t coeff_count() const { return total; }

 private:
  std::vector<std::unique_ptr<RidgeletFrame>> patch_frames_;
};

// Layout: n_coarse^2 coarse pixels, then per band the boxes in row-major
// box order, each contributing frame_for(patch).coeff_count() values.
struct CurveletCoeffs {
  int n = 0;
  std::vector<double> values;
};

CurveletCoeffs curvelet_analysis(const Image& img, const CurveletFrame& frame);

// True adjoint of the analysis map.
Image curvelet_synthesis_adjoint(const CurveletCoeffs& coeffs, const CurveletFrame& frame);

// Reconstruction: every stage of the analysis is inverted exactly except
// the per-box ridgelets, which are solved by conjugate gradients, so the
// round-trip error is the per-box solver tolerance.
Image curvelet_synthesis(const CurveletCoeffs& coeffs, const CurveletFrame& frame,
                         const CgOptions& opts = {});

enum class EdgeKind { disk, curve_cut };

// Deterministic test objects with a discontinuity across a curve of
// bounded curvature: the indicator of the centered disk of radius 1/4,
// and a Gaussian bump cut along a sine curve.
Image edge_image(EdgeKind kind, int n);

}  // namespace gma

#endif
