#pragma once

// Dense bottom-up kernels behind solve_window.

#include <cstdint>
#include <vector>

#include "latgame/engine.hpp"

namespace latgame::detail {

inline constexpr std::uint8_t kStateOpen = 0;
inline constexpr std::uint8_t kStateP = 1;
inline constexpr std::uint8_t kStateN = 2;
inline constexpr std::uint8_t kStateDefeated = 3;
inline constexpr std::uint8_t kStateCapped = 4;

/// Every position the window can reach through options: the box [0,U] cut by
/// phi . p <= phi . hi. Coordinates no move can raise keep U_k = hi_k.
class DenseRegion {
 public:
  static constexpr std::size_t kMaxCells = std::size_t{1} << 28;

  DenseRegion(const GameSpec& game, const IntVec& phi, const IntVec& hi);

  int dim() const { return upper_.dim(); }
  const IntVec& upper() const { return upper_; }
  const IntVec& phi() const { return phi_; }
  std::int64_t cap() const { return cap_; }
  std::size_t size() const { return size_; }

  std::size_t index_of(const IntVec& p) const;
  IntVec point_of(std::size_t idx) const;
  bool in_region(const IntVec& p) const { return p.nonnegative() && p.leq(upper_) && dot(phi_, p) <= cap_; }

  /// Cell indices grouped by phi-level, increasing; capped cells excluded.
  const std::vector<std::size_t>& level_start() const { return level_start_; }
  const std::vector<std::size_t>& by_level() const { return by_level_; }

 private:
  IntVec phi_;
  IntVec upper_;
  std::int64_t cap_ = 0;
  std::size_t size_ = 0;
  std::array<std::size_t, IntVec::kMaxDim> stride_{};
  std::vector<std::size_t> level_start_;
  std::vector<std::size_t> by_level_;
};

/// Pulls from options, one cell at a time in phi order.
std::vector<std::uint8_t> solve_dense_serial(const GameSpec& game, const DenseRegion& region);

/// Level-synchronous push: every P cell marks its parents N.
std::vector<std::uint8_t> solve_dense_parallel(const GameSpec& game, const DenseRegion& region);

}  // namespace latgame::detail
