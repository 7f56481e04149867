#pragma once

#include "mrf/spin_image.hpp"

#include <cstdint>

namespace mrf {

/// Hamming distance between two equally sized spin images.
std::int64_t disagreement_count(const SpinImage& a, const SpinImage& b);

/// Percentage of pixels where `a` matches the reference `b`, in [0, 100].
double agreement_percent(const SpinImage& a, const SpinImage& b);

}  // namespace mrf
