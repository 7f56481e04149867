#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace mrf {

using Index = Eigen::Index;

/// Rectangular grid of Ising spins, each exactly -1 or +1.
///
/// Storage is a row-major Eigen matrix with `height()` rows and `width()`
/// columns, so the linear pixel index `i = row * width + col` addresses
/// `data()[i]` directly. White pixels are +1 and black pixels are -1
/// throughout the library.
class SpinImage {
 public:
  using Spin = std::int8_t;
  using Storage = Eigen::Matrix<Spin, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  /// Builds a width x height image with every spin set to `fill`.
  SpinImage(Index width, Index height, Spin fill = 1);

  /// Takes a row-major spin sequence; throws std::invalid_argument unless
  /// it holds exactly width*height values drawn from {-1, +1}.
  SpinImage(Index width, Index height, const std::vector<int>& spins);

  /// Wraps an existing matrix (rows = height). Values are validated.
  explicit SpinImage(Storage spins);

  Index width() const noexcept { return spins_.cols(); }
  Index height() const noexcept { return spins_.rows(); }
  Index size() const noexcept { return spins_.size(); }

  Spin operator[](Index i) const { return spins_.data()[i]; }
  Spin operator()(Index row, Index col) const { return spins_(row, col); }

  /// Bounds-checked access by linear index.
  Spin at(Index i) const;

  /// Negates pixel i in place. Throws std::out_of_range for a bad index.
  void flip(Index i);

  /// Sets pixel i; `value` must be -1 or +1.
  void set(Index i, Spin value);

  /// Global spin flip.
  SpinImage negated() const;

  const Storage& spins() const noexcept { return spins_; }
  const Spin* data() const noexcept { return spins_.data(); }

  bool same_shape(const SpinImage& other) const noexcept {
    return width() == other.width() && height() == other.height();
  }

  std::string shape_string() const;

  friend bool operator==(const SpinImage& a, const SpinImage& b) {
    return a.same_shape(b) && a.spins_ == b.spins_;
  }

 private:
  Storage spins_;
};

/// Throws std::invalid_argument naming both shapes when they differ.
void require_same_shape(const SpinImage& a, const SpinImage& b, const char* what);

/// Throws std::out_of_range when i is not a pixel of `image`.
void require_pixel(const SpinImage& image, Index i);

}  // namespace mrf
