#pragma once

// Closed algebra of position sets with exact membership.
//
// Text form (whitespace is ignored):
//
//   set    := "empty"
//           | "orthant(" ints ")"                       v + N^d
//           | "coset(" ints ";" ints ";" ints ";" int ")"  v + m*L, L spanned by the two rows (2-D)
//           | "finite{" [ "(" ints ")" { "," "(" ints ")" } ] "}"
//           | "union(" set { "," set } ")"
//           | "inter(" set { "," set } ")"
//           | "diff(" set "," set ")"
//           | "layer(" int ";" set ")"                   {(p,k) : p in set}, one dimension up
//   ints   := int { "," int }

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latgame/lattice.hpp"

namespace latgame {

class LatticeSet {
 public:
  enum class Kind { kEmpty, kOrthant, kCoset, kFinite, kLayer, kUnion, kIntersect, kDifference };

  /// The empty set; compatible with every dimension.
  LatticeSet();

  static LatticeSet empty() { return {}; }
  static LatticeSet orthant(const IntVec& corner);
  static LatticeSet coset(const IntVec& offset, const Sublattice& lattice, std::int64_t scale);
  static LatticeSet finite(std::vector<IntVec> points);
  static LatticeSet layer(std::int64_t level, const LatticeSet& base);
  static LatticeSet unite(std::vector<LatticeSet> parts);
  static LatticeSet intersect(std::vector<LatticeSet> parts);
  static LatticeSet difference(const LatticeSet& a, const LatticeSet& b);

  /// Parses the text form; throws std::invalid_argument with the offending offset.
  static LatticeSet parse(std::string_view text);

  Kind kind() const;
  /// 0 for the empty set.
  int dim() const;
  bool is_empty_literal() const { return kind() == Kind::kEmpty; }

  /// Exact membership. Throws std::invalid_argument on a dimension mismatch.
  bool contains(const IntVec& p) const;

  std::string str() const;

 private:
  struct Node;
  explicit LatticeSet(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  bool eval(const IntVec& p) const;

  std::shared_ptr<const Node> node_;
};

}  // namespace latgame
