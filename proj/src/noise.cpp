#include "mrf/noise.hpp"

#include <random>
#include <stdexcept>

namespace mrf {

void NoiseSpec::validate() const {
  if (!(flip_probability >= 0.0 && flip_probability <= 1.0)) {
    throw std::invalid_argument("NoiseSpec: flip probability must lie in [0, 1]");
  }
}

CorruptResult corrupt_counted(const SpinImage& clean, const NoiseSpec& spec) {
  spec.validate();
  std::mt19937_64 engine(spec.seed);
  CorruptResult out{clean, 0};
  for (Index i = 0; i < clean.size(); ++i) {
    if (unit_uniform(engine()) < spec.flip_probability) {
      out.image.flip(i);
      ++out.flips;
    }
  }
  return out;
}

}  // namespace mrf
