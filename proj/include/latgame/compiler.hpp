#pragma once

// Circuit placement in Z^2, the placement conditions, ruleset emission and
// verification of compiled games against the recurrence.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "latgame/engine.hpp"
#include "latgame/recurrence.hpp"

namespace latgame {

struct Placement {
  std::vector<IntVec> pos;  // indexed by circuit vertex
  std::int64_t m = 1;
  std::vector<IntVec> I;
  IntVec nu;

  /// Throws std::invalid_argument for m <= 0, an empty or non-downward-closed
  /// I, or a bad normal.
  void validate(std::size_t vertex_count) const;
};

struct ConditionResult {
  char name = '?';
  bool applicable = true;
  bool pass = true;
  std::string witness;
};

/// Conditions 'a'..'i' in order; `strong_c` is the search-time form of (c).
struct ConditionReport {
  std::vector<ConditionResult> items;
  ConditionResult strong_c;

  const ConditionResult& operator[](char name) const;
  /// All applicable conditions pass; with `strong`, also strong_c.
  bool ok(bool strong = false) const;
  std::string summary() const;
};

ConditionReport check_conditions(const Placement& pl, const NorCircuit& g, const RecurrenceSpec& spec, Variant variant);

struct SearchOptions {
  std::uint64_t seed = 0;
  int attempts = 10000;
  std::optional<Placement> hint;
};

class SearchFailed : public std::runtime_error {
 public:
  SearchFailed(const std::string& what, ConditionReport last) : std::runtime_error(what), last_(std::move(last)) {}
  const ConditionReport& last_report() const { return last_; }

 private:
  ConditionReport last_;
};

/// Seeded randomized search; the result passes every applicable condition
/// including the strengthened (c). Throws SearchFailed.
Placement search_placement(const NorCircuit& g, const RecurrenceSpec& spec, Variant variant, const SearchOptions& opts);

// ---------------------------------------------------------------- emission

struct RulesetLine {
  std::string label;
  std::vector<IntVec> moves;  // sorted, unique
};

struct CompiledGame {
  GameSpec game;
  Placement placement;
  NorCircuit circuit;
  Variant variant = Variant::C;
  std::vector<RulesetLine> lines;
};

/// Line labels in emission order.
inline const std::vector<std::string>& line_labels() {
  static const std::vector<std::string> labels{"wires", "slice0", "slice1", "in-prime", "in-double-prime", "tangent",
                                               "initial"};
  return labels;
}

/// Throws std::invalid_argument when a condition fails (strengthened (c)
/// is not required). With `core_only` only wires, slice0 and slice1.
CompiledGame emit_ruleset(const Placement& pl, const NorCircuit& g, const RecurrenceSpec& spec, const Encoding& enc,
                          Variant variant, bool core_only = false);

/// kPublished seeds slice 0 with m (M \ gens M), like slice 1. kRecursion
/// seeds it so that in' is P exactly where some l - beta_i leaves M.
enum class DefeatedForm { kRecursion, kPublished };

/// Variant-A defeated set in N^2 x {0,1}. kRecursion throws
/// std::invalid_argument when no slice-0 seed set exists for the module.
LatticeSet emit_defeated(const Placement& pl, const NorCircuit& g, const RecurrenceSpec& spec, const Encoding& enc,
                         Variant variant = Variant::A, DefeatedForm form = DefeatedForm::kRecursion);

// ---------------------------------------------------------------- verification

struct VerifyCheck {
  std::string name;
  bool applicable = true;
  bool pass = true;
  std::size_t checked = 0;
  std::string failure;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;  // slice0, outputs, in-prime, in-double-prime
  bool ok() const;
  std::string summary() const;
};

struct VerifyOptions {
  /// Window: every l in L+ with nu . (m l) <= bound.
  std::int64_t bound = 0;
  bool check_slice0 = true;
  bool check_outputs = true;
  bool check_in_prime = true;
  bool check_in_double_prime = true;
};

VerifyReport verify_construction(const CompiledGame& cg, const RecurrenceSpec& spec, const Encoding& enc,
                                 const VerifyOptions& opts);

// ---------------------------------------------------------------- golden placement

/// The seven-gate xor circuit placed with m = 6 and the four-point I.
Placement paper_placement();

}  // namespace latgame
