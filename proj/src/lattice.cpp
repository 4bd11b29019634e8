#include "latgame/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace latgame {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in lattice arithmetic");
  return r;
}

void require_dim(const IntVec& v, int d, const char* what) {
  if (v.dim() != d) {
    throw std::invalid_argument(std::string(what) + ": expected dimension " + std::to_string(d) + ", got " +
                                std::to_string(v.dim()) + " for " + v.str());
  }
}

// ---------------------------------------------------------------- IntVec

IntVec::IntVec(std::initializer_list<std::int64_t> coords)
    : IntVec(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

IntVec::IntVec(std::span<const std::int64_t> coords) {
  if (coords.size() > kMaxDim) throw std::invalid_argument("IntVec supports at most 3 coordinates");
  dim_ = static_cast<int>(coords.size());
  std::copy(coords.begin(), coords.end(), c_.begin());
}

IntVec IntVec::zero(int dim) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("bad dimension");
  IntVec v;
  v.dim_ = dim;
  return v;
}

IntVec IntVec::unit(int dim, int axis) {
  IntVec v = zero(dim);
  v[axis] = 1;
  return v;
}

bool IntVec::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + dim_, [](std::int64_t x) { return x == 0; });
}

bool IntVec::nonnegative() const {
  return std::all_of(c_.begin(), c_.begin() + dim_, [](std::int64_t x) { return x >= 0; });
}

bool IntVec::leq(const IntVec& o) const {
  if (dim_ != o.dim_) return false;
  for (int k = 0; k < dim_; ++k)
    if ((*this)[k] > o[k]) return false;
  return true;
}

IntVec IntVec::head2() const {
  if (dim_ < 2) throw std::invalid_argument("head2 of a vector with fewer than 2 coordinates");
  return IntVec{c_[0], c_[1]};
}

IntVec IntVec::lifted(std::int64_t last) const {
  if (dim_ >= kMaxDim) throw std::invalid_argument("cannot lift a 3-dimensional vector");
  IntVec v = *this;
  v.c_[static_cast<std::size_t>(dim_)] = last;
  ++v.dim_;
  return v;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  require_dim(b, a.dim_, "vector addition");
  IntVec r = a;
  for (int k = 0; k < a.dim_; ++k) r[k] = checked_add(a[k], b[k]);
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  require_dim(b, a.dim_, "vector subtraction");
  IntVec r = a;
  for (int k = 0; k < a.dim_; ++k) {
    std::int64_t v;
    if (__builtin_sub_overflow(a[k], b[k], &v)) throw std::overflow_error("integer overflow in lattice arithmetic");
    r[k] = v;
  }
  return r;
}

IntVec operator*(std::int64_t s, const IntVec& a) {
  IntVec r = a;
  for (int k = 0; k < a.dim_; ++k) r[k] = checked_mul(s, a[k]);
  return r;
}

IntVec IntVec::operator-() const { return IntVec::zero(dim_) - *this; }

std::int64_t dot(const IntVec& a, const IntVec& b) {
  require_dim(b, a.dim_, "dot product");
  std::int64_t s = 0;
  for (int k = 0; k < a.dim_; ++k) s = checked_add(s, checked_mul(a[k], b[k]));
  return s;
}

bool operator==(const IntVec& a, const IntVec& b) {
  if (a.dim_ != b.dim_) return false;
  return std::equal(a.c_.begin(), a.c_.begin() + a.dim_, b.c_.begin());
}

std::strong_ordering operator<=>(const IntVec& a, const IntVec& b) {
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  for (int k = 0; k < a.dim_; ++k)
    if (auto c = a[k] <=> b[k]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::string IntVec::str() const {
  std::string s = "(";
  for (int k = 0; k < dim_; ++k) {
    if (k) s += ',';
    s += std::to_string(c_[static_cast<std::size_t>(k)]);
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) { return os << v.str(); }

std::size_t IntVecHash::operator()(const IntVec& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(v.dim());
  for (int k = 0; k < v.dim(); ++k) {
    h ^= static_cast<std::uint64_t>(v[k]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- Box

Box Box::from_origin(const IntVec& hi) { return Box{IntVec::zero(hi.dim()), hi}; }

bool Box::empty() const {
  for (int k = 0; k < lo.dim(); ++k)
    if (lo[k] > hi[k]) return true;
  return false;
}

bool Box::contains(const IntVec& p) const {
  if (p.dim() != lo.dim()) return false;
  return lo.leq(p) && p.leq(hi);
}

std::size_t Box::size() const {
  if (empty()) return 0;
  std::size_t n = 1;
  for (int k = 0; k < lo.dim(); ++k) n *= static_cast<std::size_t>(hi[k] - lo[k] + 1);
  return n;
}

void Box::for_each(const std::function<void(const IntVec&)>& fn) const {
  if (empty() || lo.dim() == 0) return;
  IntVec p = lo;
  const int d = lo.dim();
  while (true) {
    fn(p);
    int k = d - 1;
    while (k >= 0 && p[k] == hi[k]) {
      p[k] = lo[k];
      --k;
    }
    if (k < 0) return;
    ++p[k];
  }
}

// ---------------------------------------------------------------- Sublattice

Sublattice::Sublattice(const IntVec& b1, const IntVec& b2) : b1_(b1), b2_(b2) {
  require_dim(b1, 2, "sublattice basis");
  require_dim(b2, 2, "sublattice basis");
  det_ = checked_add(checked_mul(b1[0], b2[1]), -checked_mul(b1[1], b2[0]));
  if (det_ == 0) throw std::invalid_argument("sublattice basis is singular: " + b1.str() + ", " + b2.str());
}

Sublattice Sublattice::integer() { return Sublattice(IntVec{1, 0}, IntVec{0, 1}); }

Sublattice Sublattice::even_sum() { return Sublattice(IntVec{1, 1}, IntVec{1, -1}); }

bool Sublattice::contains(const IntVec& v) const {
  require_dim(v, 2, "lattice membership");
  // v = x*b1 + y*b2  =>  x = (v0*b2y - v1*b2x)/det, y = (b1x*v1 - b1y*v0)/det
  const __int128 x = static_cast<__int128>(v[0]) * b2_[1] - static_cast<__int128>(v[1]) * b2_[0];
  const __int128 y = static_cast<__int128>(b1_[0]) * v[1] - static_cast<__int128>(b1_[1]) * v[0];
  return x % det_ == 0 && y % det_ == 0;
}

Sublattice Sublattice::scaled(std::int64_t m) const {
  if (m <= 0) throw std::invalid_argument("lattice scale must be positive");
  return Sublattice(m * b1_, m * b2_);
}

std::int64_t Sublattice::axis_period(int axis) const {
  for (std::int64_t a = 1; a <= index(); ++a) {
    IntVec v = axis == 0 ? IntVec{a, 0} : IntVec{0, a};
    if (contains(v)) return a;
  }
  return index();  // unreachable: index * e_k is always in L
}

bool operator==(const Sublattice& a, const Sublattice& b) {
  return a.index() == b.index() && b.contains(a.b1_) && b.contains(a.b2_);
}

// ---------------------------------------------------------------- QuotientIndex

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t b) {
  std::int64_t r = a % b;
  return r < 0 ? r + b : r;
}

}  // namespace

QuotientIndex::QuotientIndex(const Sublattice& lattice) {
  // Row reduce the basis into (a,b),(0,c) with a,c > 0 and 0 <= b < c.
  IntVec r1 = lattice.b1();
  IntVec r2 = lattice.b2();
  while (r2[0] != 0) {
    std::int64_t q = floor_div(r1[0], r2[0]);
    IntVec t = r1 - q * r2;
    r1 = r2;
    r2 = t;
  }
  if (r1[0] < 0) r1 = -r1;
  a_ = r1[0];
  c_ = r2[1] < 0 ? -r2[1] : r2[1];
  b_ = mod_pos(r1[1], c_);
}

std::size_t QuotientIndex::index_of(const IntVec& v) const {
  require_dim(v, 2, "coset index");
  const std::int64_t k = floor_div(v[0], a_);
  const std::int64_t x = v[0] - k * a_;
  const std::int64_t y = mod_pos(v[1] - mod_pos(k, c_) * b_ % c_, c_);
  return static_cast<std::size_t>(x * c_ + y);
}

IntVec QuotientIndex::representative(std::size_t idx) const {
  const auto i = static_cast<std::int64_t>(idx);
  return IntVec{i / c_, i % c_};
}

// ---------------------------------------------------------------- ModuleIdeal

ModuleIdeal::ModuleIdeal(Sublattice ambient, std::vector<IntVec> generators) : ambient_(std::move(ambient)) {
  if (generators.empty()) throw std::invalid_argument("module needs at least one generator");
  for (const auto& g : generators) {
    if (!ambient_.contains_positive(g)) throw std::invalid_argument("module generator " + g.str() + " is not in L+");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const auto& g : generators) {
    bool minimal = std::none_of(generators.begin(), generators.end(),
                                [&](const IntVec& h) { return h != g && ambient_.dominates(g, h); });
    if (minimal) gens_.push_back(g);
  }
}

ModuleIdeal ModuleIdeal::positive_part(const Sublattice& ambient) {
  return ModuleIdeal(ambient, {IntVec{0, 0}});
}

bool ModuleIdeal::contains(const IntVec& v) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const IntVec& g) { return ambient_.dominates(v, g); });
}

bool ModuleIdeal::is_generator(const IntVec& v) const {
  return std::binary_search(gens_.begin(), gens_.end(), v);
}

}  // namespace latgame
