#pragma once

// Recurrences over an L+-module, their boolean encodings, nor circuits, and
// the cellular-automaton adapter.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "latgame/engine.hpp"
#include "latgame/lattice.hpp"

namespace latgame {

/// A symbol is an index into the alphabet.
using Symbol = int;

enum class Variant { A, B, C };

char to_char(Variant v);
Variant parse_variant(const std::string& text);

struct RecurrenceSpec {
  Sublattice lattice = Sublattice::integer();
  ModuleIdeal module = ModuleIdeal::positive_part(Sublattice::integer());
  std::vector<IntVec> betas;
  std::vector<std::string> alphabet;
  /// g over alphabet^r, row-major with the last argument varying fastest.
  std::vector<Symbol> g;
  Symbol sigma0 = 0;
  std::map<IntVec, Symbol> f0;

  int r() const { return static_cast<int>(betas.size()); }
  int alphabet_size() const { return static_cast<int>(alphabet.size()); }
  Symbol apply_g(const std::vector<Symbol>& args) const;
  Symbol symbol(const std::string& name) const;

  /// Throws std::invalid_argument naming the first broken invariant.
  /// Returns a positive functional on the betas.
  IntVec validate() const;
};

/// Memoized evaluator of the recurrence; explicit work stack.
class RecurrenceEvaluator {
 public:
  explicit RecurrenceEvaluator(RecurrenceSpec spec) : spec_(std::move(spec)) {}
  /// Throws std::domain_error when l is not in M.
  Symbol operator()(const IntVec& l);

 private:
  RecurrenceSpec spec_;
  std::unordered_map<IntVec, Symbol, IntVecHash> memo_;
};

Symbol eval_recurrence(const RecurrenceSpec& spec, const IntVec& l);

/// P iff C(i+j, i) is odd.
Outcome binom_parity_oracle(std::int64_t i, std::int64_t j);

/// f(i,j) = f(i-1,j) xor f(i,j-1) on N^2 with P on the axes; alphabet {P,N}.
RecurrenceSpec xor_spec();

// ---------------------------------------------------------------- encodings

struct Encoding {
  int s = 1;
  /// table[symbol] is the s-bit code.
  std::vector<std::vector<Outcome>> table;

  const std::vector<Outcome>& operator()(Symbol sym) const { return table.at(static_cast<std::size_t>(sym)); }
  std::optional<Symbol> decode(const std::vector<Outcome>& bits) const;
};

Encoding identity_encoding();  // P->P, N->N over {P,N}
Encoding swapped_encoding();   // P->N, N->P over {P,N}

struct EncodingReport {
  bool ok = true;
  std::string failed_clause;
};

EncodingReport validate_encoding(const RecurrenceSpec& spec, const Encoding& enc);

// ---------------------------------------------------------------- circuits

/// Truth table over k inputs; row x sets input a to P iff bit a of x is set.
struct TruthTable {
  int k = 0;
  int s = 1;
  std::vector<std::vector<Outcome>> rows;
};

/// g pushed through the encoding: inputs in_{ij} at index i*s + j. Inputs
/// that are not codes map to all-N.
TruthTable encoded_table(const RecurrenceSpec& spec, const Encoding& enc);

enum class Role { kInput, kInternal, kOutput, kInPrime, kInDoublePrime };

struct Vertex {
  Role role = Role::kInternal;
  int i = -1;  // input argument index
  int j = -1;  // input/output bit index
  std::string name;
};

/// DAG of nor gates. Inputs in_{ij} (0-based i < r, j < s), outputs out_j.
class NorCircuit {
 public:
  NorCircuit(int r, int s) : r_(r), s_(s) {}

  int r() const { return r_; }
  int s() const { return s_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int add_vertex(Vertex v);
  void add_edge(int tail, int head);
  bool has_edge(int tail, int head) const;

  std::vector<int> preds(int v) const;
  std::vector<int> succs(int v) const;

  int input(int i, int j) const;
  int output(int j) const;
  std::optional<int> in_prime() const;
  std::optional<int> in_double_prime() const;

  /// Throws std::logic_error on a cycle.
  std::vector<int> topological_order() const;

  /// Throws std::invalid_argument naming the first broken invariant.
  void validate() const;

 private:
  int r_;
  int s_;
  std::vector<Vertex> vertices_;
  std::vector<std::pair<int, int>> edges_;
};

/// Every vertex value. `inputs` is indexed i*s + j.
std::vector<Outcome> eval_circuit_all(const NorCircuit& c, const std::vector<Outcome>& inputs,
                                      std::optional<Outcome> in_prime = std::nullopt,
                                      std::optional<Outcome> in_double_prime = std::nullopt);

/// Output values out_1..out_s.
std::vector<Outcome> eval_circuit(const NorCircuit& c, const std::vector<Outcome>& inputs,
                                  std::optional<Outcome> in_prime = std::nullopt,
                                  std::optional<Outcome> in_double_prime = std::nullopt);

/// Two-level nor-of-nors with shared inverters. Inputs are split into
/// k/s arguments of s bits. Throws std::length_error past `max_inputs`.
NorCircuit synthesize_nor_circuit(const TruthTable& table, int max_inputs = 12);

/// Adds in' (and in'' for variant B). Throws if in' is already present.
NorCircuit extend_circuit(const NorCircuit& base, Variant variant);

/// Seven-gate xor circuit v0..v6: v0 = in_11, v1 = in_21, v6 = out_1.
NorCircuit xor_circuit();

// ---------------------------------------------------------------- cellular automata

struct CaSpec {
  int rule = 90;
  std::string word = "1";
  int steps = 8;
};

/// Cell (x,t) lives at (t+x+n+1, t-x+n+1) on the even-sum lattice.
IntVec ca_cell(const CaSpec& ca, std::int64_t x, std::int64_t t);

/// Binary CA as a recurrence over the even-sum lattice with betas
/// (2,0),(1,1),(0,2). The generators are the t = 0 cells with |x| <= n+1,
/// carrying the word on a zero background.
RecurrenceSpec ca_to_recurrence(const CaSpec& ca);

/// Quiescent symbol to N, the other symbol to P.
Encoding ca_encoding();

}  // namespace latgame
