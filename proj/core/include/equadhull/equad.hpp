#pragma once

#include <array>
#include <cstdint>

#include "equadhull/geometry.hpp"

namespace equadhull {

/// Quadrilateral of the four directional extremes of an active point set.
/// The vertex cycle xmin -> ymin -> xmax -> ymax is convex and CCW (possibly
/// degenerate down to a segment or a single point when extremes coincide).
struct EQuad {
  Point xmin, ymin, xmax, ymax;
  std::int32_t generation = 0;

  // Cycle with consecutive coordinate-duplicates removed (wrap included).
  std::array<Point, 4> cycle{};
  std::int32_t cycle_size = 0;
};

/// Builds an EQuad from the four extreme points and derives the distinct cycle.
EQuad make_equad(Point xmin, Point ymin, Point xmax, Point ymax,
                 std::int32_t generation = 0);

/// True iff p is strictly inside q's distinct-vertex cycle (CCW of every
/// edge). Degenerate cycles with fewer than 3 distinct vertices have no
/// interior, so the answer is false; quad vertices themselves are never
/// strictly inside.
bool strictly_inside_quad(Point p, const EQuad& q);

}  // namespace equadhull
