#include "latgame/feasibility.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "latgame/rational.hpp"

namespace latgame {

namespace {

// a . x >= b, with provenance: row = w1 * parent1 + w2 * parent2 (previous
// stage), or origin index for stage 0.
struct Row {
  std::array<std::int64_t, IntVec::kMaxDim> a{};
  Rational b;
  int p1 = -1;
  int p2 = -1;
  Rational w1;
  Rational w2;
};

std::int64_t gcd_all(const Row& r, int dim) {
  std::int64_t g = 0;
  for (int k = 0; k < dim; ++k) g = std::gcd(g, r.a[static_cast<std::size_t>(k)]);
  return g;
}

void normalize(Row& r, int dim) {
  std::int64_t g = gcd_all(r, dim);
  if (g <= 1) return;
  for (int k = 0; k < dim; ++k) r.a[static_cast<std::size_t>(k)] /= g;
  Rational inv(1, g);
  r.b *= inv;
  r.w1 *= inv;
  r.w2 *= inv;
}

// Combines a row with positive coefficient on `var` and one with negative.
Row combine(const std::vector<Row>& rows, int i, int j, int var, int dim) {
  const Row& pos = rows[static_cast<std::size_t>(i)];
  const Row& neg = rows[static_cast<std::size_t>(j)];
  const std::int64_t alpha = pos.a[static_cast<std::size_t>(var)];
  const std::int64_t beta = -neg.a[static_cast<std::size_t>(var)];
  Row r;
  for (int k = 0; k < dim; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    r.a[kk] = checked_add(checked_mul(beta, pos.a[kk]), checked_mul(alpha, neg.a[kk]));
  }
  r.b = Rational(beta) * pos.b + Rational(alpha) * neg.b;
  r.p1 = i;
  r.p2 = j;
  r.w1 = Rational(beta);
  r.w2 = Rational(alpha);
  normalize(r, dim);
  return r;
}

class Eliminator {
 public:
  Eliminator(std::vector<Row> base, int dim) : dim_(dim) { stages_.push_back(std::move(base)); }

  // Eliminates variables dim-1 .. 1, keeping every intermediate stage.
  // Returns false early if a stage already contains 0 >= b > 0.
  bool run() {
    for (int var = dim_ - 1; var >= 1; --var) {
      const auto& cur = stages_.back();
      std::vector<int> pos, neg;
      std::vector<Row> next;
      std::map<std::array<std::int64_t, IntVec::kMaxDim>, std::size_t> seen;
      auto push = [&](Row r) {
        if (is_contradiction(r)) {
          contradiction_ = std::make_pair(static_cast<int>(stages_.size()), static_cast<int>(next.size()));
          next.push_back(std::move(r));
          return;
        }
        if (is_trivial(r)) return;
        auto [it, inserted] = seen.emplace(r.a, next.size());
        if (inserted) {
          next.push_back(std::move(r));
        } else if (r.b > next[it->second].b) {
          next[it->second] = std::move(r);
        }
      };
      for (std::size_t i = 0; i < cur.size(); ++i) {
        const std::int64_t c = cur[i].a[static_cast<std::size_t>(var)];
        if (c > 0) {
          pos.push_back(static_cast<int>(i));
        } else if (c < 0) {
          neg.push_back(static_cast<int>(i));
        } else {
          Row r = cur[i];
          r.p1 = static_cast<int>(i);
          r.p2 = -1;
          r.w1 = Rational(1);
          r.w2 = Rational(0);
          push(std::move(r));
        }
      }
      for (int i : pos) {
        for (int j : neg) {
          if (contradiction_) break;
          push(combine(cur, i, j, var, dim_));
        }
      }
      stages_.push_back(std::move(next));
      if (contradiction_) return false;
    }
    return true;
  }

  // Bounds on variable `var` from stage dim-1-var given the already fixed
  // values of variables < var. Returns the chosen value, or nullopt with
  // contradiction_ set.
  std::optional<Rational> choose(int var, const std::vector<Rational>& fixed) {
    const int stage = dim_ - 1 - var;
    const auto& rows = stages_[static_cast<std::size_t>(stage)];
    std::optional<Rational> lo, hi;
    int lo_row = -1, hi_row = -1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      Rational rhs = r.b;
      for (int k = 0; k < var; ++k) rhs -= Rational(r.a[static_cast<std::size_t>(k)]) * fixed[static_cast<std::size_t>(k)];
      const std::int64_t c = r.a[static_cast<std::size_t>(var)];
      if (c == 0) continue;
      Rational bound = rhs / Rational(c);
      if (c > 0 && (!lo || bound > *lo)) {
        lo = bound;
        lo_row = static_cast<int>(i);
      }
      if (c < 0 && (!hi || bound < *hi)) {
        hi = bound;
        hi_row = static_cast<int>(i);
      }
    }
    if (lo && hi && *lo > *hi) {
      // Only possible for var 0: later variables were projected feasibly.
      final_pair_ = {stage, lo_row, hi_row};
      return std::nullopt;
    }
    Rational v = lo ? *lo : Rational(1);
    Rational up(v.ceil());
    if (!hi || up <= *hi) v = up;
    return v;
  }

  bool has_contradiction() const { return contradiction_.has_value(); }

  // Nonnegative rational weights over stage-0 origins proving infeasibility.
  std::vector<Rational> certificate(std::size_t origins) const {
    std::vector<Rational> acc(origins);
    if (contradiction_) {
      expand(contradiction_->first, contradiction_->second, Rational(1), acc);
    } else if (final_pair_) {
      auto [stage, lo_row, hi_row] = *final_pair_;
      const auto& rows = stages_[static_cast<std::size_t>(stage)];
      const std::int64_t cl = rows[static_cast<std::size_t>(lo_row)].a[0];
      const std::int64_t ch = -rows[static_cast<std::size_t>(hi_row)].a[0];
      expand(stage, lo_row, Rational(ch), acc);
      expand(stage, hi_row, Rational(cl), acc);
    }
    return acc;
  }

 private:
  bool is_trivial(const Row& r) const { return gcd_all(r, dim_) == 0 && r.b <= Rational(0); }
  bool is_contradiction(const Row& r) const { return gcd_all(r, dim_) == 0 && r.b > Rational(0); }

  void expand(int stage, int idx, Rational factor, std::vector<Rational>& acc) const {
    const Row& r = stages_[static_cast<std::size_t>(stage)][static_cast<std::size_t>(idx)];
    if (stage == 0) {
      acc[static_cast<std::size_t>(r.p1)] += factor;
      return;
    }
    expand(stage - 1, r.p1, factor * r.w1, acc);
    if (r.p2 >= 0) expand(stage - 1, r.p2, factor * r.w2, acc);
  }

  int dim_;
  std::vector<std::vector<Row>> stages_;
  std::optional<std::pair<int, int>> contradiction_;
  std::optional<std::tuple<int, int, int>> final_pair_;
};

std::vector<std::int64_t> integral_weights(const std::vector<Rational>& w) {
  std::int64_t l = 1;
  for (const auto& x : w) l = std::lcm(l, x.den());
  std::vector<std::int64_t> out;
  for (const auto& x : w) out.push_back((x * Rational(l)).num());
  return out;
}

}  // namespace

FunctionalResult positive_functional(const std::vector<IntVec>& vectors, int dim) {
  if (dim < 1 || dim > IntVec::kMaxDim) throw std::invalid_argument("positive_functional: bad dimension");
  std::vector<IntVec> all = vectors;
  for (const auto& v : all) require_dim(v, dim, "positive_functional input");
  for (int k = 0; k < dim; ++k) all.push_back(IntVec::unit(dim, k));

  FunctionalResult result;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].is_zero()) {
      result.certificate.assign(all.size(), 0);
      result.certificate[i] = 1;
      return result;
    }
  }

  // phi > 0 makes a >= a' (componentwise) redundant next to a'. The unit
  // rows carry phi > 0 themselves and are never dropped.
  const std::size_t first_unit = vectors.size();
  std::vector<Row> base;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < all.size() && !redundant && i < first_unit; ++j) {
      if (i == j) continue;
      if (all[j].leq(all[i]) && (all[j] != all[i] || j < i)) redundant = true;
    }
    if (redundant) continue;
    Row r;
    for (int k = 0; k < dim; ++k) r.a[static_cast<std::size_t>(k)] = all[i][k];
    r.b = Rational(1);
    r.p1 = static_cast<int>(i);
    base.push_back(r);
  }

  Eliminator elim(std::move(base), dim);
  bool ok = elim.run();
  std::vector<Rational> phi;
  if (ok) {
    for (int var = 0; var < dim; ++var) {
      auto v = elim.choose(var, phi);
      if (!v) {
        ok = false;
        break;
      }
      phi.push_back(*v);
    }
  }
  if (!ok) {
    result.certificate = integral_weights(elim.certificate(all.size()));
    return result;
  }

  std::int64_t l = 1;
  for (const auto& x : phi) l = std::lcm(l, x.den());
  IntVec f = IntVec::zero(dim);
  for (int k = 0; k < dim; ++k) f[k] = (phi[static_cast<std::size_t>(k)] * Rational(l)).num();
  for (const auto& a : all) {
    if (dot(f, a) < 1) throw std::logic_error("positive_functional produced an invalid functional " + f.str());
  }
  result.functional = f;
  return result;
}

bool check_infeasibility_certificate(const std::vector<IntVec>& vectors, int dim,
                                     const std::vector<std::int64_t>& weights) {
  if (weights.size() != vectors.size() + static_cast<std::size_t>(dim)) return false;
  IntVec sum = IntVec::zero(dim);
  bool any = false;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) return false;
    if (weights[i] == 0) continue;
    any = true;
    const IntVec& v = i < vectors.size() ? vectors[i] : IntVec::unit(dim, static_cast<int>(i - vectors.size()));
    sum += weights[i] * v;
  }
  return any && sum.is_zero();
}

}  // namespace latgame
