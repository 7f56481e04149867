#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mrf {

template <typename Scalar = double>
struct TraceSample {
  std::int64_t sweep = 0;
  Scalar energy{0};

  friend bool operator==(const TraceSample&, const TraceSample&) = default;
};

/// Energy after each sweep; sample 0 is the starting energy.
template <typename Scalar = double>
class EnergyTrace {
 public:
  using Sample = TraceSample<Scalar>;

  /// Sweep indices must start at 0 and strictly increase.
  void push(std::int64_t sweep, Scalar energy) {
    const std::int64_t floor = samples_.empty() ? 0 : samples_.back().sweep + 1;
    if (sweep < floor || (samples_.empty() && sweep != 0)) {
      throw std::invalid_argument("EnergyTrace: sweep index " + std::to_string(sweep) +
                                  " breaks the strictly increasing order");
    }
    samples_.push_back({sweep, energy});
  }

  const std::vector<Sample>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }
  bool empty() const noexcept { return samples_.empty(); }
  const Sample& operator[](std::size_t k) const { return samples_[k]; }
  const Sample& back() const { return samples_.back(); }

  auto begin() const noexcept { return samples_.begin(); }
  auto end() const noexcept { return samples_.end(); }

  friend bool operator==(const EnergyTrace&, const EnergyTrace&) = default;

 private:
  std::vector<Sample> samples_;
};

}  // namespace mrf
