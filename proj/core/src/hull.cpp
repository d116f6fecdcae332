#include "equadhull/hull.hpp"

#include <algorithm>
#include <stdexcept>

namespace equadhull {

Hull canonicalize_ccw_cycle(std::vector<Point> ccw_cycle) {
  if (!ccw_cycle.empty()) {
    auto start = std::min_element(ccw_cycle.begin(), ccw_cycle.end(), lex_yx_less);
    std::rotate(ccw_cycle.begin(), start, ccw_cycle.end());
  }
  return Hull{std::move(ccw_cycle)};
}

Hull collinear_hull(std::span<const Point> points) {
  if (points.empty()) {
    throw std::invalid_argument("collinear_hull: empty point set");
  }
  Point lo = points[0];
  Point hi = points[0];
  for (const Point& p : points) {
    if (lex_xy_less(p, lo)) lo = p;
    if (lex_xy_less(hi, p)) hi = p;
  }
  if (lo == hi) return Hull{{lo}};
  if (lex_yx_less(hi, lo)) std::swap(lo, hi);
  return Hull{{lo, hi}};
}

}  // namespace equadhull
