#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>

namespace equadhull {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend constexpr bool operator!=(const Point& a, const Point& b) {
    return !(a == b);
  }
};

enum class Orientation : int { CW = -1, Collinear = 0, CCW = 1 };

/// Axis-aligned bounding box; lo/hi are componentwise min/max.
struct Aabb {
  Point lo;
  Point hi;
};

inline bool is_finite(Point p) {
  return std::isfinite(p.x) && std::isfinite(p.y);
}

/// Ascending (x, then y).
inline bool lex_xy_less(Point a, Point b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

/// Ascending (y, then x).
inline bool lex_yx_less(Point a, Point b) {
  return a.y < b.y || (a.y == b.y && a.x < b.x);
}

/// Integer coordinates with magnitude <= 2^26 are decided exactly by orient().
inline constexpr double kExactIntegerBound = 67108864.0;  // 2^26

namespace detail {
// Resolves sign when the floating-point filter cannot certify it.
Orientation orient_slow(Point a, Point b, Point c);

// (3 + 16*eps)*eps with eps = 2^-53; static filter bound for the 2x2 det.
inline constexpr double kOrientFilterEps = 3.3306690738754716e-16;
}  // namespace detail

/// Sign of (b-a) x (c-a). Exact for integer coordinates within the
/// exactness tier; best-effort extended evaluation otherwise. Inputs
/// must be finite (enforced at ingestion).
inline Orientation orient(Point a, Point b, Point c) {
  const double detl = (b.x - a.x) * (c.y - a.y);
  const double detr = (b.y - a.y) * (c.x - a.x);
  const double det = detl - detr;
  const double mag = std::fabs(detl) + std::fabs(detr);
  if (std::fabs(det) > detail::kOrientFilterEps * mag) {
    return det > 0.0 ? Orientation::CCW : Orientation::CW;
  }
  if (det == 0.0 && mag == 0.0) return Orientation::Collinear;
  return detail::orient_slow(a, b, c);
}

/// Componentwise min/max of a non-empty sequence.
Aabb compute_aabb(std::span<const Point> points);

}  // namespace equadhull
