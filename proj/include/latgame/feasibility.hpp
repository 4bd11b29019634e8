#pragma once

// Exact linear feasibility for "find phi > 0 with phi . a > 0 for every a"
// by Fourier-Motzkin elimination over the rationals.

#include <cstdint>
#include <optional>
#include <vector>

#include "latgame/lattice.hpp"

namespace latgame {

struct FunctionalResult {
  /// Integer phi with phi_k >= 1 and phi . a >= 1 for every input a.
  std::optional<IntVec> functional;
  /// When infeasible: nonnegative integer weights, one per input vector
  /// followed by one per unit vector e_0..e_{d-1}, not all zero, whose
  /// weighted sum is the zero vector.
  std::vector<std::int64_t> certificate;

  bool feasible() const { return functional.has_value(); }
};

/// Searches for a strictly positive integer functional that pairs to >= 1
/// with every vector. Vectors must all have dimension `dim` (1..3).
FunctionalResult positive_functional(const std::vector<IntVec>& vectors, int dim);

/// Checks a certificate as produced above: weights >= 0, some weight > 0,
/// and sum of weight * vector is zero.
bool check_infeasibility_certificate(const std::vector<IntVec>& vectors, int dim,
                                     const std::vector<std::int64_t>& weights);

}  // namespace latgame
