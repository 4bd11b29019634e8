#include "kernels.hpp"

#include <atomic>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latgame::detail {

DenseRegion::DenseRegion(const GameSpec& game, const IntVec& phi, const IntVec& hi) : phi_(phi), upper_(hi) {
  const int d = hi.dim();
  cap_ = dot(phi, hi);
  for (int k = 0; k < d; ++k) {
    bool raises = false;
    for (const auto& g : game.ruleset().moves())
      if (g[k] < 0) raises = true;
    if (raises) upper_[k] = cap_ / phi[k];
  }
  size_ = 1;
  for (int k = d - 1; k >= 0; --k) {
    stride_[static_cast<std::size_t>(k)] = size_;
    const auto extent = static_cast<std::size_t>(upper_[k] + 1);
    if (size_ > kMaxCells / extent) throw std::length_error("solve region " + upper_.str() + " is too large");
    size_ *= extent;
  }

  std::vector<std::size_t> count(static_cast<std::size_t>(cap_) + 2, 0);
  for (std::size_t i = 0; i < size_; ++i) {
    const std::int64_t lv = dot(phi_, point_of(i));
    if (lv <= cap_) ++count[static_cast<std::size_t>(lv) + 1];
  }
  for (std::size_t l = 1; l < count.size(); ++l) count[l] += count[l - 1];
  level_start_ = count;
  by_level_.resize(count.back());
  for (std::size_t i = 0; i < size_; ++i) {
    const std::int64_t lv = dot(phi_, point_of(i));
    if (lv <= cap_) by_level_[count[static_cast<std::size_t>(lv)]++] = i;
  }
}

std::size_t DenseRegion::index_of(const IntVec& p) const {
  std::size_t idx = 0;
  for (int k = 0; k < dim(); ++k) idx += static_cast<std::size_t>(p[k]) * stride_[static_cast<std::size_t>(k)];
  return idx;
}

IntVec DenseRegion::point_of(std::size_t idx) const {
  IntVec p = IntVec::zero(dim());
  for (int k = 0; k < dim(); ++k) {
    const auto s = stride_[static_cast<std::size_t>(k)];
    p[k] = static_cast<std::int64_t>(idx / s);
    idx %= s;
  }
  return p;
}

namespace {

std::vector<std::uint8_t> initial_states(const GameSpec& game, const DenseRegion& region) {
  std::vector<std::uint8_t> state(region.size(), kStateCapped);
  const auto& cells = region.by_level();
  const auto n = static_cast<std::int64_t>(cells.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    const std::size_t c = cells[static_cast<std::size_t>(i)];
    state[c] = game.is_defeated(region.point_of(c)) ? kStateDefeated : kStateOpen;
  }
  return state;
}

}  // namespace

std::vector<std::uint8_t> solve_dense_serial(const GameSpec& game, const DenseRegion& region) {
  std::vector<std::uint8_t> state(region.size(), kStateCapped);
  const auto& moves = game.ruleset().moves();
  for (std::size_t c : region.by_level()) {
    const IntVec p = region.point_of(c);
    if (game.is_defeated(p)) {
      state[c] = kStateDefeated;
      continue;
    }
    bool any_p = false;
    for (const auto& g : moves) {
      const IntVec q = p - g;
      if (!q.nonnegative()) continue;
      if (state[region.index_of(q)] == kStateP) {
        any_p = true;
        break;
      }
    }
    state[c] = any_p ? kStateN : kStateP;
  }
  return state;
}

std::vector<std::uint8_t> solve_dense_parallel(const GameSpec& game, const DenseRegion& region) {
  std::vector<std::uint8_t> state = initial_states(game, region);
  const auto& moves = game.ruleset().moves();
  const auto& cells = region.by_level();
  const auto& start = region.level_start();
  for (std::size_t lv = 0; lv + 1 < start.size(); ++lv) {
    const auto lo = static_cast<std::int64_t>(start[lv]);
    const auto hi = static_cast<std::int64_t>(start[lv + 1]);
#pragma omp parallel for schedule(dynamic, 256)
    for (std::int64_t i = lo; i < hi; ++i) {
      const std::size_t c = cells[static_cast<std::size_t>(i)];
      std::atomic_ref<std::uint8_t> self(state[c]);
      if (self.load(std::memory_order_relaxed) != kStateOpen) continue;
      self.store(kStateP, std::memory_order_relaxed);
      const IntVec p = region.point_of(c);
      for (const auto& g : moves) {
        const IntVec q = p + g;
        if (!region.in_region(q)) continue;
        std::atomic_ref<std::uint8_t> target(state[region.index_of(q)]);
        if (target.load(std::memory_order_relaxed) == kStateOpen) target.store(kStateN, std::memory_order_relaxed);
      }
    }
  }
  return state;
}

}  // namespace latgame::detail
