#include "equadhull/equad_builder.hpp"

namespace equadhull {

EQuadPeeler::EQuadPeeler(SortedPointSet& set)
    : set_(set),
      xf_(0),
      xb_(static_cast<std::int64_t>(set.size()) - 1),
      yf_(0),
      yb_(static_cast<std::int64_t>(set.size()) - 1) {}

std::int64_t EQuadPeeler::scan(const std::vector<std::uint32_t>& order,
                               std::int64_t& cursor, std::int64_t step,
                               std::size_t& steps) {
  const std::int64_t n = static_cast<std::int64_t>(order.size());
  while (cursor >= 0 && cursor < n) {
    const std::uint32_t idx = order[cursor];
    if (set_.state[idx] == PointState::Active) {
      if (last_ && strictly_inside_quad(set_.points[idx], *last_)) {
        set_.state[idx] = PointState::DiscardedInterior;
        ++last_discards_;
      } else {
        return idx;  // cursor stays here; the winner is consumed afterwards
      }
    }
    cursor += step;
    ++steps;
  }
  return kNone;
}

std::optional<EQuad> EQuadPeeler::next() {
  last_discards_ = 0;
  const std::int64_t ix_min = scan(set_.by_x, xf_, +1, x_steps_);
  if (ix_min == kNone) return std::nullopt;
  const std::int64_t ix_max = scan(set_.by_x, xb_, -1, x_steps_);
  const std::int64_t iy_min = scan(set_.by_y, yf_, +1, y_steps_);
  const std::int64_t iy_max = scan(set_.by_y, yb_, -1, y_steps_);

  // The X_min winner stayed Active through every scan, so none may exhaust.
  if (ix_max == kNone || iy_min == kNone || iy_max == kNone) {
    return std::nullopt;  // unreachable for consistent state
  }

  set_.state[ix_min] = PointState::ConsumedAsVertex;
  set_.state[ix_max] = PointState::ConsumedAsVertex;
  set_.state[iy_min] = PointState::ConsumedAsVertex;
  set_.state[iy_max] = PointState::ConsumedAsVertex;

  EQuad q = make_equad(set_.points[ix_min], set_.points[iy_min],
                       set_.points[ix_max], set_.points[iy_max], generation_++);
  last_ = q;
  return q;
}

std::vector<EQuad> build_all_equads(SortedPointSet& set,
                                    std::vector<GenerationRecord>* trace) {
  std::vector<EQuad> quads;
  EQuadPeeler peeler(set);
  while (auto q = peeler.next()) {
    quads.push_back(*q);
    if (trace) {
      trace->push_back(GenerationRecord{*q, peeler.last_generation_discards()});
    }
  }
  // Points rejected by the final, exhausting scan were tested against the
  // last e-Quad; attribute them to its record.
  if (trace && !trace->empty()) {
    trace->back().discarded += peeler.last_generation_discards();
  }
  return quads;
}

}  // namespace equadhull
