#include "gma/rng.hpp"

#include <cmath>

namespace gma {

namespace {
constexpr double kTwoPi = 6.28318530717958647692;

double uniform53(std::mt19937_64& eng) {
  // (0, 1]: never zero, so the logarithm below is always finite.
  return (static_cast<double>(eng() >> 11) + 1.0) * 0x1p-53;
}
}  // namespace

double GaussianSource::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform53(eng_);
  double u2 = uniform53(eng_);
  double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  have_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  // splitmix64 finalizer over the combined state
  uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<double> gaussian_vector(size_t count, uint64_t seed) {
  GaussianSource src(seed);
  std::vector<double> out(count);
  for (double& x : out) x = src.next();
  return out;
}

Image seeded_gaussian(int n, uint64_t seed) {
  Image img(n);
  img.data = gaussian_vector(static_cast<size_t>(n) * n, seed);
  return img;
}

}  // namespace gma
