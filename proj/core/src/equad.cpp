#include "equadhull/equad.hpp"

namespace equadhull {

EQuad make_equad(Point xmin, Point ymin, Point xmax, Point ymax,
                 std::int32_t generation) {
  EQuad q;
  q.xmin = xmin;
  q.ymin = ymin;
  q.xmax = xmax;
  q.ymax = ymax;
  q.generation = generation;
  const std::array<Point, 4> raw{xmin, ymin, xmax, ymax};
  for (const Point& v : raw) {
    if (q.cycle_size == 0 || v != q.cycle[q.cycle_size - 1]) {
      q.cycle[q.cycle_size++] = v;
    }
  }
  if (q.cycle_size > 1 && q.cycle[q.cycle_size - 1] == q.cycle[0]) {
    --q.cycle_size;
  }
  return q;
}

bool strictly_inside_quad(Point p, const EQuad& q) {
  if (q.cycle_size < 3) return false;
  for (std::int32_t i = 0; i < q.cycle_size; ++i) {
    const Point& a = q.cycle[i];
    const Point& b = q.cycle[(i + 1) % q.cycle_size];
    if (orient(a, b, p) != Orientation::CCW) return false;
  }
  return true;
}

}  // namespace equadhull
