#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "equadhull/equad.hpp"
#include "equadhull/preprocess.hpp"

namespace equadhull {

/// Monotone vertex sequence built per sub-region. Global anchor extremes are
/// excluded; duplicates are dropped. Sort keys per region:
///   R1 (x asc, y desc), R2 (x asc, y asc), R3 (x desc, y asc),
///   R4 (x desc, y desc).
struct EdgeChain {
  SubRegion region = SubRegion::None;
  std::vector<Point> vertices;
};

/// Non-self-intersecting CCW vertex cycle (degenerates to fewer than 3
/// vertices only for collinear or coincident input).
struct SimplePolygon {
  std::vector<Point> vertices;
};

/// Chain-building instrumentation. A distinct e-Quad vertex is examined
/// once per candidate region rule; Remark-2 slot duplicates are folded into
/// a single examination, so the per-vertex maximum is 2.
struct AssemblyStats {
  std::uint32_t max_vertex_examinations = 0;
  std::size_t total_examinations = 0;
  std::size_t emitted = 0;
};

/// Applies Table I to one e-Quad: each vertex slot may feed only its two
/// assigned sub-regions (R1: X_min+Y_min, R2: Y_min+X_max, R3: X_max+Y_max,
/// R4: Y_max+X_min), and is emitted only when it classifies into that
/// region. Slot-duplicated points are considered once.
std::vector<std::pair<SubRegion, Point>> select_proper_vertices(
    const EQuad& q, const EQuad& first, AssemblyStats* stats = nullptr);

/// Folds every e-Quad's proper vertices into the four region chains,
/// sorted by the region keys with exact duplicates dropped.
std::array<EdgeChain, 4> build_chains(std::span<const EQuad> equads,
                                      const EQuad& first,
                                      AssemblyStats* stats = nullptr);

/// Connects anchors and chains into one cycle: leftmost, R1, bottommost,
/// R2, rightmost, R3, topmost, R4. Coincident consecutive vertices (anchor
/// degeneracies) collapse to a single occurrence.
SimplePolygon assemble_polygon(const std::array<EdgeChain, 4>& chains,
                               const EQuad& first);

}  // namespace equadhull
