#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "equadhull/equad.hpp"
#include "equadhull/preprocess.hpp"

namespace equadhull {

/// One generation of the peeling loop: the e-Quad plus the number of points
/// discarded while scanning for its vertices.
struct GenerationRecord {
  EQuad quad;
  std::uint32_t discarded = 0;
};

/// Peels e-Quads off a SortedPointSet, one generation per next() call.
///
/// Each generation scans by_x from the front for the first Active point not
/// strictly inside the previous e-Quad (Active points failing that test are
/// tagged DiscardedInterior as encountered); that point is the new X_min.
/// The other three scans are symmetric: by_x back -> X_max, by_y front ->
/// Y_min, by_y back -> Y_max, in that fixed order. The four winners (which
/// may coincide) are tagged ConsumedAsVertex only after all four scans, so
/// one point can fill several slots. Cursors persist across generations;
/// each list position is passed at most once, keeping total scan work
/// linear.
class EQuadPeeler {
 public:
  explicit EQuadPeeler(SortedPointSet& set);

  /// Next e-Quad, or nullopt once no Active point survives scanning.
  std::optional<EQuad> next();

  std::uint32_t last_generation_discards() const { return last_discards_; }

  /// Total cursor advancement so far (x lists + y lists); bounded by 2n per
  /// sorted list.
  std::size_t x_cursor_steps() const { return x_steps_; }
  std::size_t y_cursor_steps() const { return y_steps_; }

 private:
  static constexpr std::int64_t kNone = -1;

  std::int64_t scan(const std::vector<std::uint32_t>& order, std::int64_t& cursor,
                    std::int64_t step, std::size_t& steps);

  SortedPointSet& set_;
  std::optional<EQuad> last_;
  std::int64_t xf_, xb_, yf_, yb_;
  std::int32_t generation_ = 0;
  std::uint32_t last_discards_ = 0;
  std::size_t x_steps_ = 0;
  std::size_t y_steps_ = 0;
};

/// Runs the peeling loop to exhaustion. Afterwards no point is Active.
/// When trace is given, one GenerationRecord is appended per e-Quad.
std::vector<EQuad> build_all_equads(SortedPointSet& set,
                                    std::vector<GenerationRecord>* trace = nullptr);

}  // namespace equadhull
