#include "latgame/lattice_set.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace latgame {

struct LatticeSet::Node {
  Kind kind = Kind::kEmpty;
  int dim = 0;
  IntVec vec;                        // orthant corner, coset offset
  std::optional<Sublattice> lattice;  // coset: the unscaled lattice
  std::optional<Sublattice> scaled;   // coset: m * lattice
  std::int64_t scalar = 0;           // coset scale, layer level
  std::vector<IntVec> points;        // finite, sorted and unique
  std::vector<LatticeSet> kids;
};

namespace {

int common_dim(const std::vector<LatticeSet>& parts) {
  int d = 0;
  for (const auto& p : parts) {
    if (p.dim() == 0) continue;
    if (d != 0 && p.dim() != d) throw std::invalid_argument("set operands have different dimensions");
    d = p.dim();
  }
  return d;
}

}  // namespace

LatticeSet::LatticeSet() : node_(std::make_shared<const Node>()) {}

LatticeSet LatticeSet::orthant(const IntVec& corner) {
  if (corner.dim() == 0) throw std::invalid_argument("orthant needs a corner");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kOrthant;
  n->dim = corner.dim();
  n->vec = corner;
  return LatticeSet(n);
}

LatticeSet LatticeSet::coset(const IntVec& offset, const Sublattice& lattice, std::int64_t scale) {
  require_dim(offset, 2, "coset offset");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kCoset;
  n->dim = 2;
  n->vec = offset;
  n->lattice = lattice;
  n->scaled = lattice.scaled(scale);
  n->scalar = scale;
  return LatticeSet(n);
}

LatticeSet LatticeSet::finite(std::vector<IntVec> points) {
  if (points.empty()) return empty();
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const int d = points.front().dim();
  for (const auto& p : points) require_dim(p, d, "finite set element");
  auto n = std::make_shared<Node>();
  n->kind = Kind::kFinite;
  n->dim = d;
  n->points = std::move(points);
  return LatticeSet(n);
}

LatticeSet LatticeSet::layer(std::int64_t level, const LatticeSet& base) {
  if (base.dim() >= IntVec::kMaxDim) throw std::invalid_argument("layer would exceed 3 dimensions");
  if (base.is_empty_literal()) return empty();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kLayer;
  n->dim = base.dim() + 1;
  n->scalar = level;
  n->kids = {base};
  return LatticeSet(n);
}

LatticeSet LatticeSet::unite(std::vector<LatticeSet> parts) {
  std::erase_if(parts, [](const LatticeSet& s) { return s.is_empty_literal(); });
  if (parts.empty()) return empty();
  if (parts.size() == 1) return parts.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kUnion;
  n->dim = common_dim(parts);
  n->kids = std::move(parts);
  return LatticeSet(n);
}

LatticeSet LatticeSet::intersect(std::vector<LatticeSet> parts) {
  if (parts.empty()) throw std::invalid_argument("intersection of no sets");
  if (parts.size() == 1) return parts.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::kIntersect;
  n->dim = common_dim(parts);
  n->kids = std::move(parts);
  return LatticeSet(n);
}

LatticeSet LatticeSet::difference(const LatticeSet& a, const LatticeSet& b) {
  if (a.is_empty_literal()) return empty();
  if (b.is_empty_literal()) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::kDifference;
  n->dim = common_dim({a, b});
  n->kids = {a, b};
  return LatticeSet(n);
}

LatticeSet::Kind LatticeSet::kind() const { return node_->kind; }

int LatticeSet::dim() const { return node_->dim; }

bool LatticeSet::contains(const IntVec& p) const {
  if (dim() != 0 && p.dim() != dim()) {
    throw std::invalid_argument("membership test of " + p.str() + " in a " + std::to_string(dim()) + "-D set");
  }
  return eval(p);
}

bool LatticeSet::eval(const IntVec& p) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::kEmpty:
      return false;
    case Kind::kOrthant:
      return n.vec.leq(p);
    case Kind::kCoset:
      return n.scaled->contains(p - n.vec);
    case Kind::kFinite:
      return std::binary_search(n.points.begin(), n.points.end(), p);
    case Kind::kLayer: {
      const int d = p.dim();
      if (p[d - 1] != n.scalar) return false;
      std::array<std::int64_t, IntVec::kMaxDim> head{};
      for (int k = 0; k + 1 < d; ++k) head[static_cast<std::size_t>(k)] = p[k];
      return n.kids[0].eval(IntVec(std::span<const std::int64_t>(head.data(), static_cast<std::size_t>(d - 1))));
    }
    case Kind::kUnion:
      return std::any_of(n.kids.begin(), n.kids.end(), [&](const LatticeSet& s) { return s.eval(p); });
    case Kind::kIntersect:
      return std::all_of(n.kids.begin(), n.kids.end(), [&](const LatticeSet& s) { return s.eval(p); });
    case Kind::kDifference:
      return n.kids[0].eval(p) && !n.kids[1].eval(p);
  }
  return false;
}

namespace {

std::string ints(const IntVec& v) {
  std::string s;
  for (int k = 0; k < v.dim(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

}  // namespace

std::string LatticeSet::str() const {
  const Node& n = *node_;
  auto join = [&](const char* head) {
    std::string s = head;
    s += '(';
    for (std::size_t i = 0; i < n.kids.size(); ++i) {
      if (i) s += ',';
      s += n.kids[i].str();
    }
    return s + ")";
  };
  switch (n.kind) {
    case Kind::kEmpty:
      return "empty";
    case Kind::kOrthant:
      return "orthant(" + ints(n.vec) + ")";
    case Kind::kCoset:
      return "coset(" + ints(n.vec) + ";" + ints(n.lattice->b1()) + ";" + ints(n.lattice->b2()) + ";" +
             std::to_string(n.scalar) + ")";
    case Kind::kFinite: {
      std::string s = "finite{";
      for (std::size_t i = 0; i < n.points.size(); ++i) {
        if (i) s += ',';
        s += n.points[i].str();
      }
      return s + "}";
    }
    case Kind::kLayer:
      return "layer(" + std::to_string(n.scalar) + ";" + n.kids[0].str() + ")";
    case Kind::kUnion:
      return join("union");
    case Kind::kIntersect:
      return join("inter");
    case Kind::kDifference:
      return join("diff");
  }
  return "empty";
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LatticeSet parse_all() {
    LatticeSet s = parse_set();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("lattice set expression: " + why + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
  }

  IntVec vec() {
    std::vector<std::int64_t> c{integer()};
    while (true) {
      skip_ws();
      // a ',' followed by something that is not a number ends the vector
      std::size_t save = pos_;
      if (!try_consume(',')) break;
      skip_ws();
      if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
                                  text_[pos_] == '+')) {
        c.push_back(integer());
      } else {
        pos_ = save;
        break;
      }
    }
    if (c.size() > IntVec::kMaxDim) fail("vector with more than 3 coordinates");
    return IntVec(std::span<const std::int64_t>(c));
  }

  std::vector<LatticeSet> set_list() {
    std::vector<LatticeSet> out{parse_set()};
    while (try_consume(',')) out.push_back(parse_set());
    return out;
  }

  LatticeSet parse_set() {
    const std::string w = word();
    if (w == "empty") return LatticeSet::empty();
    if (w == "orthant") {
      expect('(');
      IntVec v = vec();
      expect(')');
      return LatticeSet::orthant(v);
    }
    if (w == "coset") {
      expect('(');
      IntVec v = vec();
      expect(';');
      IntVec b1 = vec();
      expect(';');
      IntVec b2 = vec();
      expect(';');
      std::int64_t m = integer();
      expect(')');
      try {
        return LatticeSet::coset(v, Sublattice(b1, b2), m);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    if (w == "finite") {
      expect('{');
      std::vector<IntVec> pts;
      if (!try_consume('}')) {
        do {
          expect('(');
          pts.push_back(vec());
          expect(')');
        } while (try_consume(','));
        expect('}');
      }
      return LatticeSet::finite(std::move(pts));
    }
    if (w == "layer") {
      expect('(');
      std::int64_t k = integer();
      expect(';');
      LatticeSet base = parse_set();
      expect(')');
      return LatticeSet::layer(k, base);
    }
    if (w == "union" || w == "inter" || w == "diff") {
      expect('(');
      auto parts = set_list();
      expect(')');
      if (w == "union") return LatticeSet::unite(std::move(parts));
      if (w == "inter") return LatticeSet::intersect(std::move(parts));
      if (parts.size() != 2) fail("diff takes exactly two operands");
      return LatticeSet::difference(parts[0], parts[1]);
    }
    fail(w.empty() ? "expected a set expression" : "unknown set constructor '" + w + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LatticeSet LatticeSet::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace latgame
