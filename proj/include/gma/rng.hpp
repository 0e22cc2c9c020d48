#ifndef GMA_RNG_HPP
#define GMA_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "gma/image.hpp"

namespace gma {

// Gaussian source with a fixed sampling recipe. The standard library
// distributions are implementation-defined, so a Box-Muller transform
// on explicit 53-bit uniforms keeps streams identical across compilers
// and reproducible from the seed alone.
class GaussianSource {
 public:
  explicit GaussianSource(uint64_t seed) : eng_(seed) {}

  double next();

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Stable seed derivation for replicate streams.
uint64_t mix_seed(uint64_t seed, uint64_t stream);

std::vector<double> gaussian_vector(size_t count, uint64_t seed);
Image seeded_gaussian(int n, uint64_t seed);

}  // namespace gma

#endif
