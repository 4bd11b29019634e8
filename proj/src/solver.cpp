#include <stdexcept>
#include <vector>

#include "kernels.hpp"
#include "latgame/engine.hpp"

namespace latgame {

Solver::Solver(const GameSpec& game, IntVec witness) : game_(game), witness_(std::move(witness)) {
  if (!certifies(witness_, game_.ruleset())) {
    throw std::invalid_argument("functional " + witness_.str() + " does not certify pointedness of the ruleset");
  }
}

Outcome Solver::outcome(const IntVec& p) {
  require_dim(p, game_.dim(), "outcome query");
  if (!game_.is_position(p)) throw std::domain_error(p.str() + " is not a position (outside N^d or defeated)");
  if (auto it = memo_.find(p); it != memo_.end()) return it->second;

  const auto& moves = game_.ruleset().moves();
  std::vector<IntVec> stack{p};
  std::vector<IntVec> pending;
  while (!stack.empty()) {
    const IntVec q = stack.back();
    if (memo_.contains(q)) {
      stack.pop_back();
      continue;
    }
    bool any_p = false;
    pending.clear();
    for (const auto& g : moves) {
      const IntVec r = q - g;
      if (!game_.is_position(r)) continue;
      auto it = memo_.find(r);
      if (it == memo_.end()) {
        pending.push_back(r);
      } else if (it->second == Outcome::P) {
        any_p = true;
        break;
      }
    }
    if (any_p || pending.empty()) {
      memo_.emplace(q, nor_of(any_p));
      stack.pop_back();
    } else {
      stack.insert(stack.end(), pending.begin(), pending.end());
    }
  }
  return memo_.at(p);
}

Outcome outcome(const GameSpec& game, const IntVec& p, const IntVec& witness) {
  Solver s(game, witness);
  return s.outcome(p);
}

// ---------------------------------------------------------------- OutcomeGrid

OutcomeGrid::OutcomeGrid(IntVec hi) : hi_(std::move(hi)) {
  std::size_t n = 1;
  for (int k = 0; k < hi_.dim(); ++k) {
    if (hi_[k] < 0) {
      n = 0;
      break;
    }
    n *= static_cast<std::size_t>(hi_[k] + 1);
  }
  cells_.assign(n, Cell::Unsolved);
}

bool OutcomeGrid::in_window(const IntVec& p) const {
  if (cells_.empty() || p.dim() != hi_.dim()) return false;
  return p.nonnegative() && p.leq(hi_);
}

std::size_t OutcomeGrid::index(const IntVec& p) const {
  if (!in_window(p)) throw std::out_of_range(p.str() + " is outside the solved window");
  std::size_t idx = 0;
  for (int k = 0; k < hi_.dim(); ++k) idx = idx * static_cast<std::size_t>(hi_[k] + 1) + static_cast<std::size_t>(p[k]);
  return idx;
}

void OutcomeGrid::for_each(const std::function<void(const IntVec&, Cell)>& fn) const {
  if (cells_.empty()) return;
  Box::from_origin(hi_).for_each([&](const IntVec& p) { fn(p, cells_[index(p)]); });
}

// ---------------------------------------------------------------- solve_window

OutcomeGrid solve_window(const GameSpec& game, const IntVec& hi) { return solve_window(game, hi, SolveMode::kParallel); }

OutcomeGrid solve_window(const GameSpec& game, const IntVec& hi, SolveMode mode) {
  PointednessReport rep = check_pointedness(game.ruleset());
  if (!rep.feasible()) throw std::domain_error("ruleset is not pointed; refusing to solve");
  return solve_window(game, hi, *rep.witness, mode);
}

OutcomeGrid solve_window(const GameSpec& game, const IntVec& hi, const IntVec& witness, SolveMode mode) {
  require_dim(hi, game.dim(), "solve window");
  if (!certifies(witness, game.ruleset())) throw std::invalid_argument("witness does not certify the ruleset");
  OutcomeGrid grid(hi);
  if (grid.empty()) return grid;

  if (mode == SolveMode::kTopDown) {
    Solver solver(game, witness);
    Box::from_origin(hi).for_each([&](const IntVec& p) {
      if (game.is_defeated(p)) {
        grid.set(p, Cell::Defeated);
      } else {
        grid.set(p, solver.outcome(p) == Outcome::P ? Cell::P : Cell::N);
      }
    });
    return grid;
  }

  detail::DenseRegion region(game, witness, hi);
  std::vector<std::uint8_t> state =
      mode == SolveMode::kSerial ? detail::solve_dense_serial(game, region) : detail::solve_dense_parallel(game, region);
  Box::from_origin(hi).for_each([&](const IntVec& p) {
    switch (state[region.index_of(p)]) {
      case detail::kStateP: grid.set(p, Cell::P); break;
      case detail::kStateN: grid.set(p, Cell::N); break;
      case detail::kStateDefeated: grid.set(p, Cell::Defeated); break;
      default: throw std::logic_error("dense solve left a window cell unsolved at " + p.str());
    }
  });
  return grid;
}

}  // namespace latgame
