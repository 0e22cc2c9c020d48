#ifndef GMA_REFERENCE_HPP
#define GMA_REFERENCE_HPP

#include <array>
#include <span>
#include <vector>

#include "gma/image.hpp"

// Plain serial implementations kept as oracles for the parallel
// kernels. They favour being obviously correct over being fast; tests
// and the benchmark tool compare against them.
namespace gma::reference {

// Direct O(n^2) unitary discrete Fourier transform.
std::vector<cplx> naive_dft(std::span<const cplx> in, bool inverse);

// Direct O(n^4) unitary 2-D transform.
Spectrum naive_dft2(const Image& img);

// Same as fft2 but single-threaded, loop-free of any pragma.
Spectrum fft2_serial(const Image& img);
Image ifft2_serial(const Spectrum& spec);

// Minimal width over all directions of a strip containing the points,
// scanned by brute force over `dirs` evenly spaced normals. Slow but
// independent of the convex-hull machinery.
double strip_width_bruteforce(std::span<const std::array<double, 2>> pts, int dirs);

}  // namespace gma::reference

#endif
