#include "equadhull/geometry.hpp"

#include <algorithm>

namespace equadhull {
namespace detail {

namespace {

bool in_exact_tier(double v) {
  return std::nearbyint(v) == v && std::fabs(v) <= kExactIntegerBound;
}

Orientation from_sign(double v) {
  if (v > 0.0) return Orientation::CCW;
  if (v < 0.0) return Orientation::CW;
  return Orientation::Collinear;
}

}  // namespace

Orientation orient_slow(Point a, Point b, Point c) {
  if (in_exact_tier(a.x) && in_exact_tier(a.y) && in_exact_tier(b.x) &&
      in_exact_tier(b.y) && in_exact_tier(c.x) && in_exact_tier(c.y)) {
    // Differences fit 27 bits, products 54 bits: int64 arithmetic is exact.
    const std::int64_t det =
        static_cast<std::int64_t>(b.x - a.x) * static_cast<std::int64_t>(c.y - a.y) -
        static_cast<std::int64_t>(b.y - a.y) * static_cast<std::int64_t>(c.x - a.x);
    if (det > 0) return Orientation::CCW;
    if (det < 0) return Orientation::CW;
    return Orientation::Collinear;
  }
  const long double det =
      static_cast<long double>(b.x - a.x) * static_cast<long double>(c.y - a.y) -
      static_cast<long double>(b.y - a.y) * static_cast<long double>(c.x - a.x);
  return from_sign(static_cast<double>(det));
}

}  // namespace detail

Aabb compute_aabb(std::span<const Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("compute_aabb: empty point set");
  }
  Aabb box{points[0], points[0]};
  for (const Point& p : points) {
    box.lo.x = std::min(box.lo.x, p.x);
    box.lo.y = std::min(box.lo.y, p.y);
    box.hi.x = std::max(box.hi.x, p.x);
    box.hi.y = std::max(box.hi.y, p.y);
  }
  return box;
}

}  // namespace equadhull
