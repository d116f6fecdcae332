#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "equadhull/equad.hpp"
#include "equadhull/geometry.hpp"

namespace equadhull {

/// Indices of the four directional extremes. Ties are broken by the second
/// coordinate (lexicographic), so the quadruple is unique and invariant
/// under input permutation. Indices need not be distinct.
struct ExtremeQuadruple {
  std::uint32_t xmin_idx = 0;
  std::uint32_t ymin_idx = 0;
  std::uint32_t xmax_idx = 0;
  std::uint32_t ymax_idx = 0;
};

enum class PointState : std::uint8_t {
  Active,
  ConsumedAsVertex,
  DiscardedInterior,
};

/// Dual sorted index views over one point array plus per-point consumption
/// state. by_x ascends in (x, then y), by_y in (y, then x). Mutated only by
/// the e-Quad peeling loop; single writer at a time.
struct SortedPointSet {
  std::vector<Point> points;
  std::vector<std::uint32_t> by_x;
  std::vector<std::uint32_t> by_y;
  std::vector<PointState> state;

  std::size_t size() const { return points.size(); }
};

/// Corner sub-regions of the AABB outside the first e-Quad. R1 is the
/// leftmost/bottommost corner; numbering proceeds CCW. None means inside
/// or on the first e-Quad.
enum class SubRegion : std::int8_t { R1 = 0, R2 = 1, R3 = 2, R4 = 3, None = -1 };

ExtremeQuadruple find_extremes(std::span<const Point> points);

/// e-Quad of the directional extremes of `points` (generation as given).
EQuad equad_of_extremes(std::span<const Point> points,
                        const ExtremeQuadruple& quad,
                        std::int32_t generation = 0);

struct DiscardResult {
  std::vector<std::uint32_t> survivors;  // input order preserved
  std::size_t discarded = 0;
};

/// Step 1 discard: drops every point strictly inside the quadrilateral of
/// the four extremes. Points on the boundary are retained.
DiscardResult discard_interior(std::span<const Point> points,
                               const ExtremeQuadruple& quad);

/// Step 2: builds the dual sorted views; all points start Active.
SortedPointSet sort_dual(std::vector<Point> points);

/// Classifies p against the first e-Quad's edges: strictly outside edge
/// xmin->ymin is R1, ymin->xmax is R2, xmax->ymax is R3, ymax->xmin is R4,
/// anything else None. A point is strictly outside at most one edge, so
/// the region is unique. Degenerate edges (coincident extremes) never fire.
SubRegion classify_subregion(const EQuad& first_quad, Point p);

}  // namespace equadhull
