#include "mrf/glyphs.hpp"

#include <Eigen/Core>

namespace mrf {

namespace {

using Point = Eigen::Vector2d;

double cross(const Point& a, const Point& b) { return a.x() * b.y() - a.y() * b.x(); }

bool inside_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  const double d1 = cross(b - a, p - a);
  const double d2 = cross(c - b, p - b);
  const double d3 = cross(a - c, p - c);
  const bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(has_neg && has_pos);
}

bool is_ink(const Point& p) {
  const Point disk_center(0.27, 0.27);
  if ((p - disk_center).norm() <= 0.17) return true;

  if (p.x() >= 0.55 && p.x() <= 0.88 && p.y() >= 0.12 && p.y() <= 0.40) return true;

  const double ring_r = (p - Point(0.28, 0.72)).norm();
  if (ring_r <= 0.18 && ring_r >= 0.09) return true;

  return inside_triangle(p, Point(0.54, 0.90), Point(0.90, 0.90), Point(0.72, 0.55));
}

}  // namespace

SpinImage make_glyph_image(Index width, Index height) {
  SpinImage::Storage spins(height, width);
  for (Index r = 0; r < height; ++r) {
    for (Index c = 0; c < width; ++c) {
      const Point p((static_cast<double>(c) + 0.5) / static_cast<double>(width),
                    (static_cast<double>(r) + 0.5) / static_cast<double>(height));
      spins(r, c) = is_ink(p) ? SpinImage::Spin(-1) : SpinImage::Spin(1);
    }
  }
  return SpinImage(std::move(spins));
}

}  // namespace mrf
