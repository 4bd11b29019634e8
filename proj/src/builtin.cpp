#include "latgame/builtin.hpp"

#include <stdexcept>

namespace latgame::builtin {

std::vector<IntVec> gamma_wires() {
  return {{1, 1, 0}, {5, -2, 0}, {-1, 4, 0}, {3, -2, 0}, {-3, 4, 0}, {1, 2, 0}, {2, 1, 0}};
}

std::vector<IntVec> gamma_slice0() {
  return {{-2, 2, 0}, {-2, 4, 0}, {-1, 2, 0}, {-1, 3, 0}, {0, 2, 0}, {0, 3, 0}, {0, 4, 0},
          {1, 3, 0},  {1, 4, 0},  {2, 2, 0},  {2, 4, 0},  {3, -1, 0}, {3, 0, 0}, {3, 1, 0},
          {3, 3, 0},  {3, 5, 0},  {4, 2, 0},  {4, 4, 0},  {5, 2, 0},  {5, 3, 0}};
}

std::vector<IntVec> gamma_slice1_translates() { return {{-6, 0, 0}, {0, -6, 0}}; }

std::vector<IntVec> gamma_slice1_offsets() {
  return {{-2, 1, 1}, {-2, 2, 1}, {-2, 3, 1}, {-1, 2, 1}, {-1, 5, 1}, {0, 2, 1}, {0, 3, 1}, {0, 4, 1},
          {0, 5, 1},  {1, -1, 1}, {1, 2, 1},  {1, 3, 1},  {1, 4, 1},  {1, 5, 1}, {2, 0, 1}, {2, 1, 1},
          {2, 2, 1},  {2, 3, 1},  {2, 4, 1},  {3, 0, 1},  {3, 1, 1},  {3, 2, 1}, {3, 3, 1}, {4, 0, 1},
          {4, 1, 1},  {4, 2, 1},  {4, 3, 1},  {5, -1, 1}, {5, 0, 1},  {5, 1, 1}, {5, 2, 1}, {5, 5, 1}};
}

Ruleset paper_gamma() {
  std::vector<IntVec> moves = gamma_wires();
  for (const auto& g : gamma_slice0()) moves.push_back(g);
  for (const auto& t : gamma_slice1_translates())
    for (const auto& o : gamma_slice1_offsets()) moves.push_back(t + o);
  return Ruleset(3, std::move(moves));
}

Ruleset paper_gamma_prime() {
  std::vector<IntVec> moves = gamma_wires();
  for (const IntVec& g : std::vector<IntVec>{{0, 2, 0}, {0, 4, 0}, {1, 4, 0}, {2, 2, 0}, {2, 4, 0}, {3, 0, 0},
                                             {3, 1, 0}, {3, 3, 0}, {3, 5, 0}, {4, 2, 0}, {4, 4, 0}})
    moves.push_back(g);
  for (const IntVec& g : std::vector<IntVec>{{-2, 1, 1}, {-1, -1, 1}, {-1, 2, 1}, {0, 3, 1}, {1, -1, 1}, {1, 4, 1},
                                             {2, 0, 1}, {2, 1, 1}, {3, 2, 1}, {4, 3, 1}})
    moves.push_back(g);
  return Ruleset(3, std::move(moves));
}

std::vector<std::string> names() { return {"paper-gamma", "paper-gamma-prime"}; }

bool is_name(const std::string& name) { return name == "paper-gamma" || name == "paper-gamma-prime"; }

Ruleset by_name(const std::string& name) {
  if (name == "paper-gamma") return paper_gamma();
  if (name == "paper-gamma-prime") return paper_gamma_prime();
  throw std::invalid_argument("unknown builtin ruleset '" + name + "'");
}

}  // namespace latgame::builtin
