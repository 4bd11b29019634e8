#include <stdexcept>

#include "latgame/engine.hpp"

namespace latgame {

EquivalenceReport equivalence_in_window(const GameSpec& g1, const GameSpec& g2, const IntVec& hi) {
  if (g1.dim() != g2.dim()) throw std::invalid_argument("games of different dimension");
  const OutcomeGrid a = solve_window(g1, hi);
  const OutcomeGrid b = solve_window(g2, hi);
  EquivalenceReport rep;
  a.for_each([&](const IntVec& p, Cell c) {
    if (!rep.equal) return;
    const Cell d = b.at(p);
    if ((c == Cell::P) != (d == Cell::P)) {
      rep.equal = false;
      rep.first_difference = p;
      rep.first = c;
      rep.second = d;
    }
  });
  return rep;
}

namespace {

std::int64_t cross(const IntVec& a, const IntVec& b) { return checked_add(checked_mul(a[0], b[1]), -checked_mul(a[1], b[0])); }

bool in_cone(const IntVec& p, const IntVec& r1, const IntVec& r2) {
  const std::int64_t s = cross(r1, r2) > 0 ? 1 : -1;
  return s * cross(r1, p) >= 0 && s * cross(p, r2) >= 0;
}

}  // namespace

ProbeResult periodicity_probe(const OutcomeGrid& grid, std::optional<std::int64_t> slice, const IntVec& ray1,
                              const IntVec& ray2, const IntVec& period) {
  require_dim(ray1, 2, "probe ray");
  require_dim(ray2, 2, "probe ray");
  require_dim(period, 2, "probe period");
  if (period.is_zero()) throw std::invalid_argument("probe period must be nonzero");
  if (cross(ray1, ray2) == 0) throw std::invalid_argument("probe rays must be linearly independent");
  if (grid.dim() == 3 && !slice) throw std::invalid_argument("a 3-D grid needs a slice");
  if (grid.dim() != 2 && grid.dim() != 3) throw std::invalid_argument("probe needs a 2-D or 3-D grid");

  auto full = [&](const IntVec& v) { return grid.dim() == 3 ? v.lifted(*slice) : v; };
  ProbeResult res;
  grid.for_each([&](const IntVec& p3, Cell c) {
    if (!res.periodic) return;
    if (grid.dim() == 3 && p3[2] != *slice) return;
    const IntVec p = p3.head2();
    const IntVec q = p - period;
    if (!in_cone(p, ray1, ray2) || !in_cone(q, ray1, ray2)) return;
    const IntVec q3 = full(q);
    if (!grid.in_window(q3)) return;
    const Cell d = grid.at(q3);
    if (c == Cell::Defeated || d == Cell::Defeated) return;
    if (c != d) {
      res.periodic = false;
      res.violation = p;
    }
  });
  return res;
}

}  // namespace latgame
