#pragma once

#include "mrf/energy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mrf {

template <typename Scalar = double>
struct OracleResult {
  Scalar global_min_energy{0};
  /// Every minimiser, ordered by the bitmask that encodes it (bit i set = pixel i is -1).
  std::vector<SpinImage> argmin_images;
  std::uint64_t states_enumerated = 0;
};

enum class Enumeration {
  GrayCode,  ///< one flip and one local delta per state
  Naive,     ///< full energy re-evaluation per state; for cross-checking
};

inline constexpr Index kDefaultOracleCap = 20;

namespace detail {

inline SpinImage image_from_mask(Index width, Index height, std::uint64_t mask) {
  SpinImage x(width, height, 1);
  for (Index i = 0; i < x.size(); ++i) {
    if ((mask >> i) & 1u) x.flip(i);
  }
  return x;
}

}  // namespace detail

/// Exact minimiser of E(., y) by enumerating all 2^(width*height) states.
///
/// Candidates within a small window of the running minimum are kept and
/// re-scored with the full energy at the end, so the Gray-code bookkeeping
/// never decides a tie on its own.
template <typename Scalar>
OracleResult<Scalar> exhaustive_minimize(const SpinImage& y, const EnergyParams<Scalar>& params,
                                         Index max_pixels = kDefaultOracleCap,
                                         Enumeration mode = Enumeration::GrayCode) {
  params.validate();
  const Index n = y.size();
  if (max_pixels > 62) max_pixels = 62;
  if (n > max_pixels) {
    throw std::invalid_argument("exhaustive_minimize: image has " + std::to_string(n) +
                                " pixels, above the cap of " + std::to_string(max_pixels));
  }
  using std::abs;
  const std::uint64_t states = std::uint64_t{1} << n;
  const auto window = [](Scalar e) { return Scalar(1e-9) * (Scalar(1) + abs(e)); };

  SpinImage x(y.width(), y.height(), 1);
  Scalar e = energy(x, y, params);
  Scalar running_min = e;
  std::vector<std::pair<std::uint64_t, Scalar>> candidates{{0, e}};
  std::uint64_t mask = 0;

  for (std::uint64_t k = 1; k < states; ++k) {
    const auto bit = static_cast<Index>(std::countr_zero(k));
    if (mode == Enumeration::GrayCode) {
      e += detail::flip_delta_unchecked(x, y, bit, params);
      x.flip(bit);
    } else {
      x.flip(bit);
      e = energy(x, y, params);
    }
    mask ^= std::uint64_t{1} << bit;

    if (e < running_min) {
      running_min = e;
      const Scalar cutoff = running_min + window(running_min);
      std::erase_if(candidates, [cutoff](const auto& c) { return c.second > cutoff; });
    }
    if (e <= running_min + window(running_min)) candidates.emplace_back(mask, e);
  }

  // Re-score survivors exactly and keep the true minimisers.
  std::vector<std::pair<std::uint64_t, Scalar>> scored;
  scored.reserve(candidates.size());
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (const auto& candidate : candidates) {
    const std::uint64_t m = candidate.first;
    const Scalar exact = energy(detail::image_from_mask(y.width(), y.height(), m), y, params);
    scored.emplace_back(m, exact);
    if (exact < best) best = exact;
  }
  std::sort(scored.begin(), scored.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  OracleResult<Scalar> result;
  result.global_min_energy = best;
  result.states_enumerated = states;
  for (const auto& [m, exact] : scored) {
    if (exact <= best + Scalar(1e-12) * (Scalar(1) + abs(best))) {
      result.argmin_images.push_back(detail::image_from_mask(y.width(), y.height(), m));
    }
  }
  return result;
}

/// True iff no single-pixel flip strictly lowers E(x, y).
template <typename Scalar>
bool is_local_minimum(const SpinImage& x, const SpinImage& y, const EnergyParams<Scalar>& params) {
  require_same_shape(x, y, "is_local_minimum");
  for (Index i = 0; i < x.size(); ++i) {
    if (detail::flip_delta_unchecked(x, y, i, params) < Scalar(0)) return false;
  }
  return true;
}

}  // namespace mrf
