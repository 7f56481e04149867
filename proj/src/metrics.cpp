#include "mrf/metrics.hpp"

namespace mrf {

std::int64_t disagreement_count(const SpinImage& a, const SpinImage& b) {
  require_same_shape(a, b, "disagreement_count");
  return (a.spins().array() != b.spins().array()).count();
}

double agreement_percent(const SpinImage& a, const SpinImage& b) {
  const auto differing = disagreement_count(a, b);
  const auto total = static_cast<double>(a.size());
  return 100.0 * (total - static_cast<double>(differing)) / total;
}

}  // namespace mrf
