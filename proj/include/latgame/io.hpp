#pragma once

// JSON files: rulesets, recurrence specs and placement sidecars. Output has
// sorted keys and sorted move lists so identical inputs give identical bytes.
//
// Ruleset:   {"defeated": "<set>", "dim": 3, "moves": [[x,y,z], ...]}
// Spec:      {"alphabet", "betas", "encoding", "f0", "g", "lattice",
//             "module", "sigma0", "variant"}, or {"ca": {"rule", "word",
//             "steps"}, "variant"} for an elementary CA.
// Sidecar:   {"I", "circuit", "lines", "m", "nu", "seed", "variant"}.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "latgame/compiler.hpp"
#include "latgame/engine.hpp"
#include "latgame/recurrence.hpp"

namespace latgame::io {

/// Parse and schema errors.
class FormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unreadable or unwritable files.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// ---------------------------------------------------------------- rulesets

std::string write_ruleset(const GameSpec& game);
GameSpec read_ruleset(const std::string& text);
/// A builtin name or a path to a ruleset file.
GameSpec load_ruleset(const std::string& name_or_path);

// ---------------------------------------------------------------- specs

struct SpecFile {
  RecurrenceSpec spec;
  Encoding enc;
  Variant variant = Variant::C;
  std::optional<CaSpec> ca;
};

SpecFile read_spec(const std::string& text);
SpecFile load_spec(const std::string& path);
/// Always the explicit form, even for a CA.
std::string write_spec(const SpecFile& sf);

/// The synthesized circuit for the encoded spec, extended for `variant`.
NorCircuit build_circuit(const SpecFile& sf, Variant variant);

// ---------------------------------------------------------------- sidecars

struct Sidecar {
  Placement placement;
  NorCircuit circuit{1, 1};
  Variant variant = Variant::C;
  std::uint64_t seed = 0;
  std::vector<RulesetLine> lines;
};

std::string write_sidecar(const CompiledGame& cg, std::uint64_t seed);
Sidecar read_sidecar(const std::string& text);

/// "out.json" -> "out.placement.json"; other names get the suffix appended.
std::string sidecar_path(const std::string& ruleset_path);

}  // namespace latgame::io
