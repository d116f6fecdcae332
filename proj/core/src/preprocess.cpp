#include "equadhull/preprocess.hpp"

#include <algorithm>
#include <stdexcept>

namespace equadhull {

ExtremeQuadruple find_extremes(std::span<const Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("find_extremes: empty point set");
  }
  ExtremeQuadruple q;
  for (std::uint32_t i = 1; i < points.size(); ++i) {
    const Point& p = points[i];
    if (lex_xy_less(p, points[q.xmin_idx])) q.xmin_idx = i;
    if (lex_xy_less(points[q.xmax_idx], p)) q.xmax_idx = i;
    if (lex_yx_less(p, points[q.ymin_idx])) q.ymin_idx = i;
    if (lex_yx_less(points[q.ymax_idx], p)) q.ymax_idx = i;
  }
  return q;
}

EQuad equad_of_extremes(std::span<const Point> points,
                        const ExtremeQuadruple& quad,
                        std::int32_t generation) {
  return make_equad(points[quad.xmin_idx], points[quad.ymin_idx],
                    points[quad.xmax_idx], points[quad.ymax_idx], generation);
}

DiscardResult discard_interior(std::span<const Point> points,
                               const ExtremeQuadruple& quad) {
  const EQuad q = equad_of_extremes(points, quad);
  DiscardResult result;
  result.survivors.reserve(points.size());
  for (std::uint32_t i = 0; i < points.size(); ++i) {
    if (strictly_inside_quad(points[i], q)) {
      ++result.discarded;
    } else {
      result.survivors.push_back(i);
    }
  }
  return result;
}

SortedPointSet sort_dual(std::vector<Point> points) {
  SortedPointSet set;
  const std::size_t n = points.size();
  set.points = std::move(points);
  set.by_x.resize(n);
  set.by_y.resize(n);
  set.state.assign(n, PointState::Active);
  for (std::uint32_t i = 0; i < n; ++i) {
    set.by_x[i] = i;
    set.by_y[i] = i;
  }
  std::sort(set.by_x.begin(), set.by_x.end(), [&](std::uint32_t a, std::uint32_t b) {
    return lex_xy_less(set.points[a], set.points[b]);
  });
  std::sort(set.by_y.begin(), set.by_y.end(), [&](std::uint32_t a, std::uint32_t b) {
    return lex_yx_less(set.points[a], set.points[b]);
  });
  return set;
}

SubRegion classify_subregion(const EQuad& q, Point p) {
  if (orient(q.xmin, q.ymin, p) == Orientation::CW) return SubRegion::R1;
  if (orient(q.ymin, q.xmax, p) == Orientation::CW) return SubRegion::R2;
  if (orient(q.xmax, q.ymax, p) == Orientation::CW) return SubRegion::R3;
  if (orient(q.ymax, q.xmin, p) == Orientation::CW) return SubRegion::R4;
  return SubRegion::None;
}

}  // namespace equadhull
