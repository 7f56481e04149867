#pragma once

// Test-only reference routines. These deliberately avoid the library's
// energy, neighbour and delta code paths.

#include "mrf/spin_image.hpp"

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

namespace mrf::testing {

struct RefParams {
  double h, beta, eta;
};

/// E(x, y) by enumerating every unordered pixel pair and testing adjacency.
inline double brute_force_energy(const SpinImage& x, const SpinImage& y, const RefParams& p) {
  const Index n = x.size();
  const Index w = x.width();
  double field = 0, coupling = 0, data = 0;
  for (Index i = 0; i < n; ++i) {
    field += x[i];
    data += x[i] * y[i];
    for (Index j = i + 1; j < n; ++j) {
      const auto dr = std::abs(i / w - j / w);
      const auto dc = std::abs(i % w - j % w);
      if (dr + dc == 1) coupling += x[i] * x[j];
    }
  }
  return p.h * field - p.beta * coupling - p.eta * data;
}

inline std::int64_t brute_force_pair_count(Index width, Index height) {
  std::int64_t count = 0;
  const Index n = width * height;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (std::abs(i / width - j / width) + std::abs(i % width - j % width) == 1) ++count;
    }
  }
  return count;
}

inline SpinImage random_image(std::mt19937_64& rng, Index width, Index height) {
  std::vector<int> spins(static_cast<std::size_t>(width * height));
  for (auto& s : spins) s = (rng() & 1u) ? 1 : -1;
  return SpinImage(width, height, spins);
}

/// Random spins with random dimensions in [min_side, max_width] x [min_side, max_height].
inline SpinImage random_sized_image(std::mt19937_64& rng, Index max_width, Index max_height,
                                    Index min_side = 1) {
  std::uniform_int_distribution<Index> wd(min_side, max_width), hd(min_side, max_height);
  const Index w = wd(rng);
  const Index h = hd(rng);
  return random_image(rng, w, h);
}

/// Global minimum by direct enumeration with full re-evaluation.
inline double brute_force_min_energy(const SpinImage& y, const RefParams& p) {
  const Index n = y.size();
  double best = 1e300;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> spins(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) spins[static_cast<std::size_t>(i)] = (mask >> i) & 1u ? -1 : 1;
    const double e = brute_force_energy(SpinImage(y.width(), y.height(), spins), y, p);
    if (e < best) best = e;
  }
  return best;
}

}  // namespace mrf::testing
