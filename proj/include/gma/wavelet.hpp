#ifndef GMA_WAVELET_HPP
#define GMA_WAVELET_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gma/image.hpp"

namespace gma {

// Orthonormal two-channel filter pair. The highpass is the quadrature
// mirror g[k] = (-1)^k h[taps-1-k].
struct WaveletFilter {
  std::string name;
  std::vector<double> lowpass;
  std::vector<double> highpass;
  int vanishing_moments = 0;

  int taps() const { return static_cast<int>(lowpass.size()); }
};

// Supported names: "haar", "db4", "db8" (Daubechies, tap count).
WaveletFilter make_filter(const std::string& name);

// Periodized multiresolution coefficients of a length-n signal,
// n = 2^J. The coarse block holds 2^j_coarse scaling coefficients;
// detail[l] holds the 2^(j_coarse+l) wavelet coefficients of level
// j_coarse + l, ordered coarse to fine.
struct WaveletCoeffs1D {
  int n = 0;
  int j_coarse = 0;
  std::vector<double> coarse;
  std::vector<std::vector<double>> detail;

  int levels() const { return static_cast<int>(detail.size()); }
  int level_j(int l) const { return j_coarse + l; }
  size_t total() const;
};

WaveletCoeffs1D dwt1(const std::vector<double>& signal, const WaveletFilter& f, int j_coarse);
std::vector<double> idwt1(const WaveletCoeffs1D& c, const WaveletFilter& f);

// 2-D separable version. Per level, hl is high in x / low in y, lh the
// transpose orientation, hh high in both; each holds (2^j)^2 values.
struct Band2 {
  std::vector<double> hl, lh, hh;
};

struct WaveletCoeffs2D {
  int n = 0;
  int j_coarse = 0;
  std::vector<double> coarse;
  std::vector<Band2> detail;

  int levels() const { return static_cast<int>(detail.size()); }
  int level_j(int l) const { return j_coarse + l; }
  size_t total() const;
};

WaveletCoeffs2D dwt2(const Image& img, const WaveletFilter& f, int j_coarse);
Image idwt2(const WaveletCoeffs2D& c, const WaveletFilter& f);

// Canonical flat layout: coarse first, then levels coarse to fine (2-D:
// hl, lh, hh within each level). Used by the operator matrices, the
// estimators and the coefficient files.
std::vector<double> flatten(const WaveletCoeffs1D& c);
WaveletCoeffs1D unflatten1(const std::vector<double>& vals, int n, int j_coarse);
std::vector<double> flatten(const WaveletCoeffs2D& c);
WaveletCoeffs2D unflatten2(const std::vector<double>& vals, int n, int j_coarse);

// A scale-tagged view of coefficient groups; norms below consume it.
// Scaling coefficients are conventionally tagged with the coarsest
// level. Several spans may share one j (2-D orientations).
struct LevelSpan {
  int j = 0;
  std::span<const double> vals;
};

std::vector<LevelSpan> levels_of(const WaveletCoeffs1D& c);
std::vector<LevelSpan> levels_of(const WaveletCoeffs2D& c);

// Sequence norm
//   ( sum_j 2^{j q (s - shift (1/p - 1/2))} ( sum_k |a_jk|^p )^{q/p} )^{1/q}
// with sup replacing the sum when p or q is infinite. The shift is the
// scaling dimension of the family: 1 for wavelets in one dimension, 2
// in two, 3/2 for parabolic directional families. At (p,q,s) = (2,2,0)
// every choice reduces to the plain l2 norm.
double besov_seqnorm(const std::vector<LevelSpan>& levels, double p, double q, double s,
                     double shift);

// Same aggregate through pointwise square-function form: the L^p norm
// of ( sum_jk (2^{j(s - shift(1/p-1/2))} |a_jk| chi_jk(x))^q )^{1/q},
// with chi_jk the L2-normalized indicator of the dyadic cell of (j,k).
// Evaluated exactly on the finest dyadic grid.
double triebel_seqnorm(const WaveletCoeffs1D& c, double p, double q, double s, double shift);
double triebel_seqnorm(const WaveletCoeffs2D& c, double p, double q, double s, double shift);

// Zero every entry with |v| < lambda.
std::vector<double> hard_threshold(std::vector<double> vals, double lambda);

// Keep the n_terms largest magnitudes (ties resolved toward the lower
// index); l2_error is the norm of what was dropped.
struct NTermApprox {
  std::vector<double> kept;
  size_t terms = 0;
  double l2_error = 0.0;
};

NTermApprox nterm_approx(const std::vector<double>& vals, size_t n_terms);

// Uniform scalar quantizer a = floor(v / quantum) applied to the keep
// largest magnitudes; dequantize maps a back to a * quantum.
struct QuantizedCode {
  double quantum = 0.0;
  uint64_t total = 0;              // length of the original vector
  std::vector<uint64_t> index;     // positions of retained coefficients
  std::vector<int64_t> level;      // quantizer bins
};

QuantizedCode quantize(const std::vector<double>& vals, double quantum, size_t keep);
std::vector<double> dequantize(const QuantizedCode& code);

// Storage cost in bits: per retained coefficient a fixed-width index
// (ceil log2 total), one sign bit and an Elias gamma code of |bin|+1.
uint64_t code_bits(const QuantizedCode& code);

// Singular integral kernels expressed as Fourier multipliers on the
// periodic grid: sign(k) (phase flip), |k|^(-1/2) (half-order
// smoothing), or the identity.
enum class CzoKernel { Identity, Hilbert, HalfIntegration };

std::vector<double> apply_kernel(CzoKernel kernel, const std::vector<double>& signal);

// Dense dim x dim matrix, row-major.
struct DenseOperator {
  size_t dim = 0;
  std::vector<double> a;

  double at(size_t r, size_t c) const { return a[r * dim + c]; }
};

// The kernel conjugated into the wavelet domain: column c is the
// transform of the kernel applied to the c-th basis function, in the
// flat layout above.
DenseOperator czo_matrix(CzoKernel kernel, int n, const WaveletFilter& f, int j_coarse);

std::vector<double> dense_apply(const DenseOperator& op, const std::vector<double>& x);

// Multiply after dropping entries with |m_rc| < eps / dim. The dropped
// mass obeys ||Mx - y|| <= eps ||x||; with eps = 0 the result is
// bit-identical to dense_apply.
struct SparseApply {
  std::vector<double> y;
  size_t kept = 0;
};

SparseApply band_truncate_apply(const DenseOperator& op, double eps, const std::vector<double>& x);

}  // namespace gma

#endif
