#pragma once

// Lattice-game outcome engine: normal play on N^d minus a defeated set, with
// moves given by subtracting ruleset vectors.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "latgame/lattice.hpp"
#include "latgame/lattice_set.hpp"

namespace latgame {

/// P is identified with boolean true when outcomes feed circuits.
enum class Outcome : std::uint8_t { P, N };

inline char to_char(Outcome o) { return o == Outcome::P ? 'P' : 'N'; }
inline Outcome nor_of(bool any_p) { return any_p ? Outcome::N : Outcome::P; }

/// Finite set of nonzero move vectors of one dimension, kept sorted.
class Ruleset {
 public:
  Ruleset(int dim, std::vector<IntVec> moves);

  int dim() const { return dim_; }
  const std::vector<IntVec>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }
  bool contains(const IntVec& move) const;

  Ruleset with(const IntVec& move) const;
  Ruleset without(const IntVec& move) const;

  friend bool operator==(const Ruleset&, const Ruleset&) = default;

 private:
  int dim_;
  std::vector<IntVec> moves_;
};

/// A ruleset plus the defeated set D; positions are N^d \ D.
class GameSpec {
 public:
  explicit GameSpec(Ruleset ruleset, LatticeSet defeated = LatticeSet::empty());

  const Ruleset& ruleset() const { return ruleset_; }
  const LatticeSet& defeated() const { return defeated_; }
  int dim() const { return ruleset_.dim(); }

  bool is_defeated(const IntVec& p) const { return !defeated_.is_empty_literal() && defeated_.contains(p); }
  /// p in N^d and not defeated.
  bool is_position(const IntVec& p) const { return p.nonnegative() && !is_defeated(p); }

 private:
  Ruleset ruleset_;
  LatticeSet defeated_;
};

// ---------------------------------------------------------------- axioms

struct PointednessReport {
  /// phi with phi_k >= 1 and phi . gamma >= 1 for all moves.
  std::optional<IntVec> witness;
  /// When infeasible: weights over moves then unit vectors summing to zero.
  std::vector<std::int64_t> certificate;
  bool feasible() const { return witness.has_value(); }
};

PointednessReport check_pointedness(const Ruleset& rs);

/// True iff phi certifies rs: every phi_k >= 1 and phi . gamma >= 1.
bool certifies(const IntVec& phi, const Ruleset& rs);

/// Per-axis surrogate for the tangent cone axiom: some move is positive on
/// the axis and nonpositive on every other coordinate. Axis-aligned moves
/// are preferred as witnesses, then the lexicographically first.
struct TangentAxisReport {
  int axis = 0;
  bool pass = false;
  std::optional<IntVec> witness;
};

std::vector<TangentAxisReport> check_tangent_cone(const Ruleset& rs);

// ---------------------------------------------------------------- solving

/// Memoized top-down evaluator: the sequential reference. Uses an explicit
/// work stack, so depth is bounded by memory, not the call stack.
class Solver {
 public:
  /// Throws std::invalid_argument if `witness` does not certify the ruleset.
  Solver(const GameSpec& game, IntVec witness);

  /// Throws std::domain_error when p is not a position.
  Outcome outcome(const IntVec& p);

  const std::unordered_map<IntVec, Outcome, IntVecHash>& memo() const { return memo_; }

 private:
  const GameSpec& game_;
  IntVec witness_;
  std::unordered_map<IntVec, Outcome, IntVecHash> memo_;
};

/// One-off query; see Solver.
Outcome outcome(const GameSpec& game, const IntVec& p, const IntVec& witness);

enum class Cell : std::uint8_t { P, N, Defeated, Unsolved };

inline char to_char(Cell c) {
  switch (c) {
    case Cell::P: return 'P';
    case Cell::N: return 'N';
    case Cell::Defeated: return 'D';
    case Cell::Unsolved: return '?';
  }
  return '?';
}

/// Dense outcomes over a box anchored at the origin.
class OutcomeGrid {
 public:
  OutcomeGrid() = default;
  explicit OutcomeGrid(IntVec hi);

  const IntVec& hi() const { return hi_; }
  int dim() const { return hi_.dim(); }
  bool empty() const { return cells_.empty(); }
  std::size_t size() const { return cells_.size(); }
  bool in_window(const IntVec& p) const;

  Cell at(const IntVec& p) const { return cells_[index(p)]; }
  void set(const IntVec& p, Cell c) { cells_[index(p)] = c; }

  /// Lexicographically ordered positions of the window.
  void for_each(const std::function<void(const IntVec&, Cell)>& fn) const;

  friend bool operator==(const OutcomeGrid&, const OutcomeGrid&) = default;

 private:
  std::size_t index(const IntVec& p) const;

  IntVec hi_;
  std::vector<Cell> cells_;
};

enum class SolveMode {
  kTopDown,         // Solver per position; reference
  kSerial,          // bottom-up in increasing phi order, pulling from options
  kParallel,        // bottom-up wavefront over phi levels, OpenMP
};

/// Solves every position of [0,hi]. An empty window (some hi_k < 0) gives an
/// empty grid. Throws std::domain_error if the ruleset is not pointed.
OutcomeGrid solve_window(const GameSpec& game, const IntVec& hi, SolveMode mode = SolveMode::kParallel);

/// Same, with an explicit certified witness.
OutcomeGrid solve_window(const GameSpec& game, const IntVec& hi, const IntVec& witness, SolveMode mode);

// ---------------------------------------------------------------- analysis

struct EquivalenceReport {
  bool equal = true;
  std::optional<IntVec> first_difference;
  Cell first = Cell::Unsolved;
  Cell second = Cell::Unsolved;
};

/// Compares the P-position sets of two games on [0,hi], reporting the
/// lexicographically first position where they differ.
EquivalenceReport equivalence_in_window(const GameSpec& g1, const GameSpec& g2, const IntVec& hi);

struct ProbeResult {
  bool periodic = true;
  std::optional<IntVec> violation;  // p with o(p) != o(p - period)
};

/// Tests o(p) == o(p - period) for every p of the slice with p and
/// p - period both in the window, in the cone spanned by `ray1`, `ray2`, and
/// both non-defeated. For a 3-D grid `slice` fixes the last coordinate.
ProbeResult periodicity_probe(const OutcomeGrid& grid, std::optional<std::int64_t> slice, const IntVec& ray1,
                              const IntVec& ray2, const IntVec& period);

enum class ImageFormat { kText, kPbm, kSvg };

ImageFormat parse_image_format(const std::string& name);

/// Renders a 2-D view of the grid (the `slice` of a 3-D grid). Text uses
/// '#' for P, '.' for N and 'x' for defeated, with y increasing upward.
/// With highlight m > 0, text and PBM keep only points with both
/// coordinates divisible by m; SVG draws everything and outlines them.
std::string render_grid(const OutcomeGrid& grid, std::optional<std::int64_t> slice, ImageFormat format,
                        std::int64_t highlight = 0);

}  // namespace latgame
