#include <algorithm>
#include <stdexcept>

#include "latgame/engine.hpp"
#include "latgame/feasibility.hpp"

namespace latgame {

Ruleset::Ruleset(int dim, std::vector<IntVec> moves) : dim_(dim) {
  if (dim < 1 || dim > IntVec::kMaxDim) throw std::invalid_argument("ruleset dimension must be 1..3");
  for (const auto& m : moves) {
    require_dim(m, dim, "ruleset move");
    if (m.is_zero()) throw std::invalid_argument("the zero vector is not a valid move");
  }
  std::sort(moves.begin(), moves.end());
  moves.erase(std::unique(moves.begin(), moves.end()), moves.end());
  moves_ = std::move(moves);
}

bool Ruleset::contains(const IntVec& move) const { return std::binary_search(moves_.begin(), moves_.end(), move); }

Ruleset Ruleset::with(const IntVec& move) const {
  auto m = moves_;
  m.push_back(move);
  return Ruleset(dim_, std::move(m));
}

Ruleset Ruleset::without(const IntVec& move) const {
  auto m = moves_;
  std::erase(m, move);
  return Ruleset(dim_, std::move(m));
}

GameSpec::GameSpec(Ruleset ruleset, LatticeSet defeated) : ruleset_(std::move(ruleset)), defeated_(std::move(defeated)) {
  if (defeated_.dim() != 0 && defeated_.dim() != ruleset_.dim()) {
    throw std::invalid_argument("defeated set dimension " + std::to_string(defeated_.dim()) +
                                " does not match ruleset dimension " + std::to_string(ruleset_.dim()));
  }
}

PointednessReport check_pointedness(const Ruleset& rs) {
  if (rs.moves().empty()) throw std::invalid_argument("pointedness of an empty ruleset");
  FunctionalResult r = positive_functional(rs.moves(), rs.dim());
  PointednessReport out;
  out.witness = r.functional;
  out.certificate = std::move(r.certificate);
  return out;
}

bool certifies(const IntVec& phi, const Ruleset& rs) {
  if (phi.dim() != rs.dim()) return false;
  for (int k = 0; k < phi.dim(); ++k)
    if (phi[k] < 1) return false;
  return std::all_of(rs.moves().begin(), rs.moves().end(), [&](const IntVec& g) { return dot(phi, g) >= 1; });
}

std::vector<TangentAxisReport> check_tangent_cone(const Ruleset& rs) {
  std::vector<TangentAxisReport> out;
  for (int axis = 0; axis < rs.dim(); ++axis) {
    TangentAxisReport rep;
    rep.axis = axis;
    std::optional<IntVec> first, aligned;
    for (const auto& g : rs.moves()) {
      if (g[axis] <= 0) continue;
      bool ok = true;
      bool on_axis = true;
      for (int k = 0; k < rs.dim(); ++k) {
        if (k == axis) continue;
        if (g[k] > 0) ok = false;
        if (g[k] != 0) on_axis = false;
      }
      if (!ok) continue;
      if (!first) first = g;
      if (on_axis && !aligned) aligned = g;
    }
    rep.pass = first.has_value();
    rep.witness = aligned ? aligned : first;
    out.push_back(rep);
  }
  return out;
}

}  // namespace latgame
