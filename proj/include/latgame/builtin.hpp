#pragma once

// Golden rulesets for the xor (Sierpinski) game, transcribed verbatim.

#include <string>
#include <vector>

#include "latgame/engine.hpp"

namespace latgame::builtin {

/// Wire moves shared by both rulesets.
std::vector<IntVec> gamma_wires();
/// Slice-0 moves of the long ruleset (20).
std::vector<IntVec> gamma_slice0();
/// The two translates and the 32 offsets whose Minkowski sum is the slice-1 line.
std::vector<IntVec> gamma_slice1_translates();
std::vector<IntVec> gamma_slice1_offsets();

/// Long ruleset: wires, slice 0 and the Minkowski-sum slice 1.
Ruleset paper_gamma();
/// The 28-move ruleset.
Ruleset paper_gamma_prime();

/// Builtin ruleset names accepted in place of a ruleset file.
std::vector<std::string> names();
/// Throws std::invalid_argument for an unknown name.
Ruleset by_name(const std::string& name);
bool is_name(const std::string& name);

}  // namespace latgame::builtin
