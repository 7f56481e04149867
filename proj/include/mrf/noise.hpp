#pragma once

#include "mrf/spin_image.hpp"

#include <cstdint>

namespace mrf {

/// Bernoulli sign-flip channel.
struct NoiseSpec {
  double flip_probability = 0.1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct CorruptResult {
  SpinImage image;
  std::int64_t flips = 0;
};

/// Negates each pixel independently with probability `flip_probability`.
///
/// Randomness comes from std::mt19937_64 seeded with `spec.seed`; exactly
/// one 64-bit draw is consumed per pixel in row-major order and pixel i
/// flips iff unit_uniform(draw) < flip_probability. Both the engine and
/// the draw-to-real mapping are fully specified, so a seed reproduces the
/// same image on every platform.
CorruptResult corrupt_counted(const SpinImage& clean, const NoiseSpec& spec);

inline SpinImage corrupt(const SpinImage& clean, const NoiseSpec& spec) {
  return corrupt_counted(clean, spec).image;
}

/// Maps a 64-bit draw to [0, 1) using its top 53 bits.
inline double unit_uniform(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace mrf
