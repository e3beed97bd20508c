#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qct {

// Reproducible random stream. mt19937_64 has a fully specified output
// sequence, and the Gaussian transform below is explicit Box-Muller, so a
// (seed, stream id) pair yields the same draws on every platform.
//
// Draw-order contract used by the state samplers: one complex Gaussian per
// matrix/vector entry, entries visited row-major, each draw consuming
// exactly two uniforms (radius first, angle second).
class RngStream {
public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  // Independent child stream: two SplitMix64 rounds over (parent seed, index).
  static RngStream child(std::uint64_t parent_seed, std::uint64_t stream_index);

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on (0, 1]: never 0, so log() below is safe.
  double uniform();

  // Standard complex Gaussian (real and imaginary parts each N(0,1); the
  // overall scale cancels in every normalized construction downstream).
  std::complex<double> complex_gaussian();

private:
  std::mt19937_64 eng_;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace qct
