#pragma once

// Minimal-generator enumeration for L+-modules by bounded-box brute force.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "latgame/lattice.hpp"
#include "latgame/lattice_set.hpp"

namespace latgame {

/// Raised when a minimal element touches the upper face of the search box,
/// i.e. the box could be hiding further generators.
class IncompleteBox : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Elements x of `set` within `box` such that no other y in the set has
/// x - y in L+ (L = `order`). Output is sorted lexicographically.
///
/// `box.lo` must bound the set from below. Completeness is certified by
/// requiring every minimal element to sit strictly inside the upper faces
/// of the box; otherwise IncompleteBox is thrown.
std::vector<IntVec> minimal_elements(const LatticeSet& set, const Sublattice& order, const Box& box);

/// Minimal generators of L+ \ {0}.
std::vector<IntVec> positive_generators(const Sublattice& lattice);

/// Minimal L+-generators of the intersection of the translates beta_i + L+.
std::vector<IntVec> translate_intersection_generators(const Sublattice& lattice, const std::vector<IntVec>& betas);

/// Points of N^2 not above any nonzero element of mL+, i.e. the complement
/// of the ideal of N^2 generated by mL+ \ {0}. Sorted. Contains a
/// representative of every class of Z^2 / mL.
std::vector<IntVec> enumerate_F(const Sublattice& lattice, std::int64_t m);

/// L+ as a set expression.
LatticeSet positive_part_set(const Sublattice& lattice);

/// The module as a set expression: union over generators g of g + L+.
LatticeSet module_set(const ModuleIdeal& module);

}  // namespace latgame
