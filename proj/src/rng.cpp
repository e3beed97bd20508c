#include "qct/rng.hpp"

#include <cmath>
#include <numbers>

namespace qct {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

RngStream RngStream::child(std::uint64_t parent_seed, std::uint64_t stream_index) {
  return RngStream(splitmix64(splitmix64(parent_seed) ^ splitmix64(stream_index + 1)));
}

double RngStream::uniform() {
  // 53-bit mantissa, shifted into (0, 1].
  return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53;
}

std::complex<double> RngStream::complex_gaussian() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

} // namespace qct
