#include "mrf/spin_image.hpp"

#include <stdexcept>

namespace mrf {

namespace {

void check_dimensions(Index width, Index height) {
  if (width < 1 || height < 1) {
    throw std::invalid_argument("SpinImage: dimensions must be positive, got " +
                                std::to_string(width) + "x" + std::to_string(height));
  }
}

bool is_spin(int v) { return v == 1 || v == -1; }

}  // namespace

SpinImage::SpinImage(Index width, Index height, Spin fill) {
  check_dimensions(width, height);
  if (!is_spin(fill)) throw std::invalid_argument("SpinImage: fill value must be -1 or +1");
  spins_ = Storage::Constant(height, width, fill);
}

SpinImage::SpinImage(Index width, Index height, const std::vector<int>& spins) {
  check_dimensions(width, height);
  if (static_cast<Index>(spins.size()) != width * height) {
    throw std::invalid_argument("SpinImage: expected " + std::to_string(width * height) +
                                " spins, got " + std::to_string(spins.size()));
  }
  spins_.resize(height, width);
  for (Index i = 0; i < width * height; ++i) {
    const int v = spins[static_cast<std::size_t>(i)];
    if (!is_spin(v)) {
      throw std::invalid_argument("SpinImage: value " + std::to_string(v) + " at index " +
                                  std::to_string(i) + " is not a spin");
    }
    spins_.data()[i] = static_cast<Spin>(v);
  }
}

SpinImage::SpinImage(Storage spins) : spins_(std::move(spins)) {
  check_dimensions(spins_.cols(), spins_.rows());
  for (Index i = 0; i < spins_.size(); ++i) {
    if (!is_spin(spins_.data()[i])) {
      throw std::invalid_argument("SpinImage: value at index " + std::to_string(i) +
                                  " is not a spin");
    }
  }
}

SpinImage::Spin SpinImage::at(Index i) const {
  require_pixel(*this, i);
  return spins_.data()[i];
}

void SpinImage::flip(Index i) {
  require_pixel(*this, i);
  spins_.data()[i] = static_cast<Spin>(-spins_.data()[i]);
}

void SpinImage::set(Index i, Spin value) {
  require_pixel(*this, i);
  if (!is_spin(value)) throw std::invalid_argument("SpinImage::set: value must be -1 or +1");
  spins_.data()[i] = value;
}

SpinImage SpinImage::negated() const { return SpinImage(Storage(-spins_)); }

std::string SpinImage::shape_string() const {
  return std::to_string(width()) + "x" + std::to_string(height());
}

void require_same_shape(const SpinImage& a, const SpinImage& b, const char* what) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + a.shape_string() +
                                " vs " + b.shape_string() + ")");
  }
}

void require_pixel(const SpinImage& image, Index i) {
  if (i < 0 || i >= image.size()) {
    throw std::out_of_range("pixel index " + std::to_string(i) + " out of range for " +
                            image.shape_string() + " image");
  }
}

}  // namespace mrf
