#pragma once

#include "mrf/spin_image.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mrf {

/// Coefficients of the Ising energy
///
///   E(x, y) = h * sum_i x_i - beta * sum_{i~j} x_i x_j - eta * sum_i x_i y_i
///
/// where i~j runs over unordered 4-adjacent pixel pairs.
template <typename Scalar = double>
struct EnergyParams {
  Scalar h{0};
  Scalar beta{0};
  Scalar eta{0};

  /// Throws std::invalid_argument for non-finite values or negative beta/eta.
  void validate() const {
    using std::isfinite;
    if (!isfinite(h) || !isfinite(beta) || !isfinite(eta)) {
      throw std::invalid_argument("EnergyParams: coefficients must be finite");
    }
    if (beta < Scalar(0) || eta < Scalar(0)) {
      throw std::invalid_argument("EnergyParams: beta and eta must be non-negative");
    }
  }
};

/// Up to four 4-adjacent pixel indices in the order up, down, left, right.
class NeighborList {
 public:
  void push(Index i) { items_[count_++] = i; }
  std::size_t size() const noexcept { return count_; }
  Index operator[](std::size_t k) const { return items_[k]; }
  const Index* begin() const noexcept { return items_.data(); }
  const Index* end() const noexcept { return items_.data() + count_; }

 private:
  std::array<Index, 4> items_{};
  std::size_t count_ = 0;
};

/// 4-adjacent neighbours of pixel i on a width x height grid, no wraparound.
inline NeighborList neighbors(Index i, Index width, Index height) {
  if (width < 1 || height < 1 || i < 0 || i >= width * height) {
    throw std::out_of_range("neighbors: index " + std::to_string(i) + " out of range for " +
                            std::to_string(width) + "x" + std::to_string(height) + " grid");
  }
  const Index row = i / width;
  const Index col = i % width;
  NeighborList out;
  if (row > 0) out.push(i - width);
  if (row + 1 < height) out.push(i + width);
  if (col > 0) out.push(i - 1);
  if (col + 1 < width) out.push(i + 1);
  return out;
}

/// Number of unordered 4-adjacent pairs: W(H-1) + H(W-1).
inline std::int64_t pair_count(Index width, Index height) {
  return static_cast<std::int64_t>(width) * (height - 1) +
         static_cast<std::int64_t>(height) * (width - 1);
}

/// Integer sufficient statistics of a configuration. The energy is an exact
/// linear function of these three sums.
struct SpinSums {
  std::int64_t field = 0;     // sum_i x_i
  std::int64_t coupling = 0;  // sum_{i~j} x_i x_j, each pair once
  std::int64_t data = 0;      // sum_i x_i y_i
};

inline SpinSums spin_sums(const SpinImage& x, const SpinImage& y) {
  require_same_shape(x, y, "energy");
  using Wide = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Wide xs = x.spins().cast<std::int64_t>();
  const Wide ys = y.spins().cast<std::int64_t>();
  const Index h = xs.rows();
  const Index w = xs.cols();

  SpinSums s;
  s.field = xs.sum();
  s.data = xs.cwiseProduct(ys).sum();
  // Vertical pairs pair row r with row r+1, horizontal pairs col c with col c+1.
  s.coupling = xs.topRows(h - 1).cwiseProduct(xs.bottomRows(h - 1)).sum() +
               xs.leftCols(w - 1).cwiseProduct(xs.rightCols(w - 1)).sum();
  return s;
}

/// Full energy E(x, y). Throws std::invalid_argument on a shape mismatch.
template <typename Scalar>
Scalar energy(const SpinImage& x, const SpinImage& y, const EnergyParams<Scalar>& params) {
  const SpinSums s = spin_sums(x, y);
  return params.h * Scalar(s.field) - params.beta * Scalar(s.coupling) -
         params.eta * Scalar(s.data);
}

/// Sum of the 4-neighbour spins of pixel i; no bounds checking.
inline int neighbor_spin_sum(const SpinImage& x, Index i) {
  const Index w = x.width();
  const Index row = i / w;
  const Index col = i % w;
  const SpinImage::Spin* d = x.data();
  int sum = 0;
  if (row > 0) sum += d[i - w];
  if (row + 1 < x.height()) sum += d[i + w];
  if (col > 0) sum += d[i - 1];
  if (col + 1 < w) sum += d[i + 1];
  return sum;
}

namespace detail {

template <typename Scalar>
Scalar flip_delta_unchecked(const SpinImage& x, const SpinImage& y, Index i,
                            const EnergyParams<Scalar>& params) {
  const Scalar xi = Scalar(x[i]);
  const Scalar local = params.h - params.beta * Scalar(neighbor_spin_sum(x, i)) -
                       params.eta * Scalar(y[i]);
  return Scalar(-2) * xi * local;
}

}  // namespace detail

/// Energy change from negating pixel i, computed from its 4-neighbourhood:
///   dE = -2 x_i (h - beta * sum_{j in N(i)} x_j - eta * y_i)
template <typename Scalar>
Scalar flip_delta(const SpinImage& x, const SpinImage& y, Index i,
                  const EnergyParams<Scalar>& params) {
  require_same_shape(x, y, "flip_delta");
  require_pixel(x, i);
  return detail::flip_delta_unchecked(x, y, i, params);
}

}  // namespace mrf
