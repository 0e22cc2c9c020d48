#ifndef GMA_FFT_HPP
#define GMA_FFT_HPP

#include <vector>

#include "gma/image.hpp"

namespace gma {

// Precomputed twiddle table for a radix-2 transform of length n.
// Build one per batch of same-length transforms; the table is read-only
// afterwards and safe to share across threads.
struct FftPlan {
  int n = 0;
  std::vector<cplx> w;  // w[k] = exp(-2*pi*i*k/n), k < n/2

  explicit FftPlan(int n);
};

// In-place unitary transform of length plan.n (scale 1/sqrt(n) in each
// direction, so fft followed by ifft is the identity and both preserve
// the l2 norm).
void fft(const FftPlan& plan, cplx* a, bool inverse);
inline void fft(const FftPlan& plan, std::vector<cplx>& a, bool inverse) {
  fft(plan, a.data(), inverse);
}

// Unitary 2-D transform of a w x h complex grid stored row-major
// (rows of length w). Scale is 1/sqrt(w*h) in each direction.
void fft2_complex(cplx* a, int w, int h, bool inverse);

Spectrum fft2(const Image& img);
// Inverse of fft2; imaginary parts are discarded, so the input should
// be (numerically) Hermitian.
Image ifft2(const Spectrum& spec);

}  // namespace gma

#endif
