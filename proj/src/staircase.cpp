#include "latgame/staircase.hpp"

#include <algorithm>

namespace latgame {

std::vector<IntVec> minimal_elements(const LatticeSet& set, const Sublattice& order, const Box& box) {
  require_dim(box.lo, 2, "minimal_elements box");
  std::vector<IntVec> members;
  box.for_each([&](const IntVec& p) {
    if (set.contains(p)) members.push_back(p);
  });
  std::vector<IntVec> out;
  for (const auto& x : members) {
    bool minimal = true;
    for (const auto& y : members) {
      if (y == x) continue;
      if (y[0] > x[0] || y[1] > x[1]) continue;
      if (order.contains(x - y)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (x[0] == box.hi[0] || x[1] == box.hi[1]) {
      throw IncompleteBox("minimal element " + x.str() + " lies on the boundary of box " + box.lo.str() + ".." +
                          box.hi.str() + "; enlarge the box");
    }
    out.push_back(x);
  }
  return out;  // members were visited lexicographically
}

LatticeSet positive_part_set(const Sublattice& lattice) {
  return LatticeSet::intersect({LatticeSet::coset(IntVec{0, 0}, lattice, 1), LatticeSet::orthant(IntVec{0, 0})});
}

LatticeSet module_set(const ModuleIdeal& module) {
  std::vector<LatticeSet> parts;
  for (const auto& g : module.generators()) {
    parts.push_back(LatticeSet::intersect({LatticeSet::coset(g, module.ambient(), 1), LatticeSet::orthant(g)}));
  }
  return LatticeSet::unite(std::move(parts));
}

std::vector<IntVec> positive_generators(const Sublattice& lattice) {
  // Every minimal element is bounded by the axis periods of L.
  const std::int64_t hx = lattice.axis_period(0) + 1;
  const std::int64_t hy = lattice.axis_period(1) + 1;
  LatticeSet nonzero = LatticeSet::difference(positive_part_set(lattice), LatticeSet::finite({IntVec{0, 0}}));
  return minimal_elements(nonzero, lattice, Box{IntVec{0, 0}, IntVec{hx, hy}});
}

std::vector<IntVec> translate_intersection_generators(const Sublattice& lattice, const std::vector<IntVec>& betas) {
  if (betas.empty()) throw std::invalid_argument("translate intersection of no vectors");
  IntVec lo = betas.front();
  std::vector<LatticeSet> parts;
  for (const auto& b : betas) {
    lo = IntVec{std::max(lo[0], b[0]), std::max(lo[1], b[1])};
    parts.push_back(LatticeSet::intersect({LatticeSet::coset(b, lattice, 1), LatticeSet::orthant(b)}));
  }
  const IntVec hi = lo + IntVec{lattice.axis_period(0) + 1, lattice.axis_period(1) + 1};
  return minimal_elements(LatticeSet::intersect(std::move(parts)), lattice, Box{lo, hi});
}

std::vector<IntVec> enumerate_F(const Sublattice& lattice, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("enumerate_F needs m >= 1");
  const Sublattice scaled = lattice.scaled(m);
  const std::vector<IntVec> gens = positive_generators(scaled);
  const std::int64_t hx = scaled.axis_period(0);
  const std::int64_t hy = scaled.axis_period(1);
  std::vector<IntVec> out;
  Box{IntVec{0, 0}, IntVec{hx, hy}}.for_each([&](const IntVec& p) {
    if (std::none_of(gens.begin(), gens.end(), [&](const IntVec& g) { return g.leq(p); })) out.push_back(p);
  });
  return out;
}

}  // namespace latgame
