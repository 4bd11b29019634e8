#pragma once

// Exact integer lattice points, full-rank sublattices of Z^2 and modules over
// their positive parts.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace latgame {

/// A point of Z^d for d <= 3. The dimension is carried explicitly; vectors of
/// different dimension never compare equal. Arithmetic is overflow-checked.
class IntVec {
 public:
  static constexpr int kMaxDim = 3;

  IntVec() = default;
  IntVec(std::initializer_list<std::int64_t> coords);
  explicit IntVec(std::span<const std::int64_t> coords);

  static IntVec zero(int dim);
  static IntVec unit(int dim, int axis);

  int dim() const { return dim_; }
  std::int64_t operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  std::int64_t& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  std::span<const std::int64_t> coords() const { return {c_.data(), static_cast<std::size_t>(dim_)}; }

  bool is_zero() const;
  /// All coordinates >= 0.
  bool nonnegative() const;
  /// Componentwise <=.
  bool leq(const IntVec& o) const;

  /// The first two coordinates.
  IntVec head2() const;
  /// This vector with one more coordinate appended.
  IntVec lifted(std::int64_t last) const;

  friend IntVec operator+(const IntVec& a, const IntVec& b);
  friend IntVec operator-(const IntVec& a, const IntVec& b);
  friend IntVec operator*(std::int64_t s, const IntVec& a);
  IntVec operator-() const;
  IntVec& operator+=(const IntVec& o) { return *this = *this + o; }
  IntVec& operator-=(const IntVec& o) { return *this = *this - o; }

  friend std::int64_t dot(const IntVec& a, const IntVec& b);

  friend bool operator==(const IntVec& a, const IntVec& b);
  /// Lexicographic, shorter dimension first.
  friend std::strong_ordering operator<=>(const IntVec& a, const IntVec& b);

  /// "(x,y)" / "(x,y,z)".
  std::string str() const;

 private:
  std::array<std::int64_t, kMaxDim> c_{};
  int dim_ = 0;
};

std::ostream& operator<<(std::ostream& os, const IntVec& v);

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept;
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Throws std::invalid_argument unless v.dim() == d.
void require_dim(const IntVec& v, int d, const char* what);

/// Axis-aligned integer box [lo, hi] (inclusive).
struct Box {
  IntVec lo;
  IntVec hi;

  static Box from_origin(const IntVec& hi);
  int dim() const { return lo.dim(); }
  bool empty() const;
  bool contains(const IntVec& p) const;
  std::size_t size() const;
  /// Visits every point in lexicographic order.
  void for_each(const std::function<void(const IntVec&)>& fn) const;
};

/// Full-rank sublattice L of Z^2, given by two basis rows.
class Sublattice {
 public:
  /// Throws std::invalid_argument for a singular or non-2D basis.
  Sublattice(const IntVec& b1, const IntVec& b2);

  static Sublattice integer();        // Z^2
  static Sublattice even_sum();       // {(a,b): a+b even}
  static Sublattice scaled_integer(std::int64_t m) { return integer().scaled(m); }

  const IntVec& b1() const { return b1_; }
  const IntVec& b2() const { return b2_; }
  std::int64_t det() const { return det_; }
  /// |Z^2 / L|.
  std::int64_t index() const { return det_ < 0 ? -det_ : det_; }

  /// v in L, by solving basis * x = v exactly and testing integrality.
  bool contains(const IntVec& v) const;
  /// v in L+ = L ∩ N^2.
  bool contains_positive(const IntVec& v) const { return v.nonnegative() && contains(v); }
  /// x - y in L+ (the order on which L+-modules are built).
  bool dominates(const IntVec& x, const IntVec& y) const { return contains_positive(x - y); }

  /// mL.
  Sublattice scaled(std::int64_t m) const;

  /// Smallest a > 0 with (a,0) in L, and likewise on the second axis.
  std::int64_t axis_period(int axis) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b);

 private:
  IntVec b1_;
  IntVec b2_;
  std::int64_t det_;
};

/// Canonical enumeration of the cosets Z^2 / L. Representatives live in
/// [0,a) x [0,c) where (a,b),(0,c) is the Hermite basis of L.
class QuotientIndex {
 public:
  explicit QuotientIndex(const Sublattice& lattice);

  std::size_t size() const { return static_cast<std::size_t>(a_ * c_); }
  std::size_t index_of(const IntVec& v) const;
  IntVec representative(std::size_t idx) const;
  IntVec reduce(const IntVec& v) const { return representative(index_of(v)); }

 private:
  std::int64_t a_;
  std::int64_t b_;
  std::int64_t c_;
};

/// An L+-module inside L+ given by generators; stored generators are the
/// unique minimal ones (pairwise incomparable in the L+ order).
class ModuleIdeal {
 public:
  /// Throws std::invalid_argument if a generator is outside L+ or the list is empty.
  ModuleIdeal(Sublattice ambient, std::vector<IntVec> generators);

  /// The whole of L+.
  static ModuleIdeal positive_part(const Sublattice& ambient);

  const Sublattice& ambient() const { return ambient_; }
  const std::vector<IntVec>& generators() const { return gens_; }

  bool contains(const IntVec& v) const;
  bool is_generator(const IntVec& v) const;

 private:
  Sublattice ambient_;
  std::vector<IntVec> gens_;
};

}  // namespace latgame
