#pragma once

#include <span>
#include <vector>

#include "equadhull/geometry.hpp"

namespace equadhull {

/// Canonical convex hull: strictly convex CCW vertex cycle starting at the
/// lexicographically smallest (y, then x) vertex. Degenerate sets collapse
/// to 1 vertex (all coincident) or 2 vertices (all collinear, the two
/// extreme endpoints).
struct Hull {
  std::vector<Point> vertices;

  friend bool operator==(const Hull& a, const Hull& b) {
    return a.vertices == b.vertices;
  }
};

/// Rotates a strictly convex CCW cycle to the canonical start vertex.
Hull canonicalize_ccw_cycle(std::vector<Point> ccw_cycle);

/// Canonical hull of a point set known to be collinear (or coincident):
/// the distinct segment endpoints, canonical order. Input must be non-empty.
Hull collinear_hull(std::span<const Point> points);

}  // namespace equadhull
