// One PASS/FAIL line per acceptance criterion. Exit status 0 when every
// criterion passes or fails only in its documented way (the printed long
// ruleset; see README) with the explained form verified.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latgame/builtin.hpp"
#include "latgame/compiler.hpp"
#include "latgame/engine.hpp"
#include "latgame/feasibility.hpp"
#include "latgame/recurrence.hpp"
#include "oracles.hpp"

using namespace latgame;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
  // Failing criteria only: the documented explanation holds.
  bool explained = false;
};

int failures = 0;
int documented = 0;

void report(int id, const char* title, const Verdict& v) {
  std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << "  " << title << "  " << v.detail << '\n';
  if (!v.pass) (v.explained ? documented : failures)++;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_set(const std::set<IntVec>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& v : s) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::set<IntVec> minus(const std::set<IntVec>& a, const std::set<IntVec>& b) {
  std::set<IntVec> out;
  for (const auto& v : a)
    if (!b.count(v)) out.insert(v);
  return out;
}

CompiledGame golden_emission() {
  return emit_ruleset(paper_placement(), xor_circuit(), xor_spec(), identity_encoding(), Variant::C, true);
}

// ---------------------------------------------------------------- 1

Verdict gasket() {
  const auto t0 = std::chrono::steady_clock::now();
  const GameSpec g(builtin::paper_gamma_prime());
  const auto grid = solve_window(g, IntVec{192, 192, 1});
  int points = 0, bad = 0;
  std::string first;
  for (std::int64_t i = 0; i <= 32; ++i)
    for (std::int64_t j = 0; i + j <= 32; ++j) {
      ++points;
      const bool game_p = grid.at(IntVec{6 * i, 6 * j, 1}) == Cell::P;
      const bool lib = binom_parity_oracle(i, j) == Outcome::P;
      const bool pascal = oracle::binom_odd(i, j);
      if (game_p != lib || lib != pascal) {
        if (!bad++) first = " first mismatch (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    }
  std::ostringstream os;
  os << points - bad << "/" << points << " points match" << first << ", " << seconds_since(t0) << " s";
  return {bad == 0 && points == 561, os.str()};
}

// ---------------------------------------------------------------- 2

Verdict slice0_law() {
  const GameSpec g(builtin::paper_gamma_prime());
  const auto grid = solve_window(g, IntVec{47, 47, 0});
  const std::vector<IntVec> I{{0, 0}, {1, 0}, {2, 0}, {0, 1}};
  int bad = 0, p_count = 0;
  std::string first;
  for (std::int64_t x = 0; x <= 47; ++x)
    for (std::int64_t y = 0; y <= 47; ++y) {
      const IntVec r{x % 6, y % 6};
      const bool expect = std::find(I.begin(), I.end(), r) != I.end();
      const bool got = grid.at(IntVec{x, y, 0}) == Cell::P;
      p_count += got;
      if (expect != got && !bad++) first = " first mismatch " + IntVec{x, y, 0}.str();
    }
  return {bad == 0, std::to_string(2304 - bad) + "/2304 cells, " + std::to_string(p_count) + " P-positions" + first};
}

// ---------------------------------------------------------------- 3

const std::set<IntVec> kPrintedExtras{{-6, 5, 1}, {-2, 0, 1}, {-1, 0, 1}, {-1, 1, 1},
                                      {0, -1, 1}, {4, -6, 1}, {5, -6, 1}, {5, -5, 1}};

Verdict golden_set() {
  const auto cg = golden_emission();
  const auto& mv = cg.game.ruleset().moves();
  const std::set<IntVec> emitted(mv.begin(), mv.end());
  const Ruleset pr = builtin::paper_gamma();
  const std::set<IntVec> printed(pr.moves().begin(), pr.moves().end());
  const auto extra = minus(printed, emitted);
  const auto missing = minus(emitted, printed);

  auto line_eq = [&](const char* label, const std::vector<IntVec>& want) {
    for (const auto& l : cg.lines)
      if (l.label == label) return std::set<IntVec>(l.moves.begin(), l.moves.end()) == std::set<IntVec>(want.begin(), want.end());
    return false;
  };
  const bool wires = line_eq("wires", builtin::gamma_wires());
  const bool s0 = line_eq("slice0", builtin::gamma_slice0());

  Verdict v;
  v.pass = extra.empty() && missing.empty();
  std::ostringstream os;
  os << "emitted " << emitted.size() << " moves, printed " << printed.size() << "; wires " << (wires ? "equal" : "DIFFER")
     << ", slice0 " << (s0 ? "equal" : "DIFFER") << "; printed\\emitted = " << fmt_set(extra)
     << ", emitted\\printed = " << fmt_set(missing);
  v.explained = !v.pass && wires && s0 && missing.empty() && extra == kPrintedExtras;
  if (v.explained) os << "  [documented: the printed slice-1 line carries exactly these 8 extra moves]";
  v.detail = os.str();
  return v;
}

// ---------------------------------------------------------------- 4

Verdict printed_vs_prime() {
  const IntVec hi{36, 36, 1};
  const GameSpec prime(builtin::paper_gamma_prime());
  const auto rep = equivalence_in_window(GameSpec(builtin::paper_gamma()), prime, hi);
  Verdict v;
  v.pass = rep.equal;
  std::ostringstream os;
  if (rep.equal)
    os << "equal P-sets on [0,36]^2 x [0,1]";
  else
    os << "first difference " << *rep.first_difference << ": printed " << to_char(rep.first) << ", 28-move "
       << to_char(rep.second);
  if (!rep.equal) {
    const auto emitted = equivalence_in_window(golden_emission().game, prime, hi);
    v.explained = emitted.equal;
    os << "; emitted golden ruleset vs 28-move: " << (emitted.equal ? "equal" : "DIFFERENT");
    if (v.explained) os << "  [documented: the 8 extra printed moves make every output gate N]";
  }
  v.detail = os.str();
  return v;
}

// ---------------------------------------------------------------- 5

Verdict xor_round_trip() {
  const RecurrenceSpec spec = xor_spec();
  const Encoding enc = swapped_encoding();
  const NorCircuit g = extend_circuit(synthesize_nor_circuit(encoded_table(spec, enc)), Variant::C);
  SearchOptions opts;
  opts.seed = 0;
  const Placement pl = search_placement(g, spec, Variant::C, opts);
  const CompiledGame cg = emit_ruleset(pl, g, spec, enc, Variant::C);
  // nu . (m l) <= 12 m max(nu) covers l1 + l2 <= 12; with nu = (1,1) exactly.
  VerifyOptions vo;
  vo.bound = 12 * pl.m * std::max(pl.nu[0], pl.nu[1]);
  const auto rep = verify_construction(cg, spec, enc, vo);
  std::ostringstream os;
  os << "m = " << pl.m << ", nu = " << pl.nu << ", " << cg.game.ruleset().size() << " moves;";
  for (const auto& c : rep.checks) {
    os << ' ' << c.name << ' ' << (!c.applicable ? "n/a" : c.pass ? "ok" : "FAIL") << '(' << c.checked << ')';
    if (!c.pass) os << " [" << c.failure << ']';
  }
  const bool covered = rep.checks[1].checked >= 91;
  return {rep.ok() && covered, os.str()};
}

// ---------------------------------------------------------------- 6

bool ca_matches(const CaSpec& ca, std::string& detail) {
  const RecurrenceSpec spec = ca_to_recurrence(ca);
  const Encoding enc = ca_encoding();
  const NorCircuit g = extend_circuit(synthesize_nor_circuit(encoded_table(spec, enc)), Variant::B);
  const Placement pl = search_placement(g, spec, Variant::B, {});
  const CompiledGame cg = emit_ruleset(pl, g, spec, enc, Variant::B);
  const auto out = static_cast<std::size_t>(g.output(0));
  const std::int64_t c = static_cast<std::int64_t>(ca.word.size()) + 1;
  std::int64_t hx = 0, hy = 0;
  for (int t = 0; t <= ca.steps; ++t)
    for (std::int64_t x = -c - t; x <= c + t; ++x) {
      const IntVec q = pl.pos[out] + pl.m * ca_cell(ca, x, t);
      hx = std::max(hx, q[0]);
      hy = std::max(hy, q[1]);
    }
  const auto grid = solve_window(cg.game, IntVec{hx, hy, 1});
  const oracle::Automaton sim(ca.rule, ca.word, ca.steps);
  int cells = 0, bad = 0;
  std::string first;
  for (int t = 0; t <= ca.steps; ++t)
    for (std::int64_t x = -c - t; x <= c + t; ++x) {
      const IntVec q = pl.pos[out] + pl.m * ca_cell(ca, x, t);
      const bool live = grid.at(q.lifted(1)) == Cell::P;
      ++cells;
      if (live != (sim.cell(x, t) == 1) && !bad++)
        first = " first mismatch x=" + std::to_string(x) + " t=" + std::to_string(t);
    }
  detail += "rule " + std::to_string(ca.rule) + ": " + std::to_string(cells - bad) + "/" + std::to_string(cells) +
            " cells (t <= " + std::to_string(ca.steps) + ", m = " + std::to_string(pl.m) + ")" + first + "; ";
  return bad == 0;
}

Verdict universality() {
  std::string detail;
  const bool a = ca_matches(CaSpec{90, "1", 8}, detail);
  const bool b = ca_matches(CaSpec{110, "1", 6}, detail);
  detail.resize(detail.size() - 2);
  return {a && b, detail};
}

// ---------------------------------------------------------------- 7

Verdict axioms() {
  std::ostringstream os;
  bool ok = true;
  for (const auto& name : builtin::names()) {
    const Ruleset rs = builtin::by_name(name);
    const auto pr = check_pointedness(rs);
    const bool pointed = pr.feasible() && certifies(*pr.witness, rs);
    ok = ok && pointed;
    os << name << ": phi " << (pointed ? pr.witness->str() : "NONE") << ", tangent";
    for (const auto& ax : check_tangent_cone(rs)) {
      ok = ok && ax.pass && ax.witness.has_value();
      os << ' ' << (ax.witness ? ax.witness->str() : "FAIL");
    }
    os << "; ";
  }
  const std::vector<IntVec> loop{{1, 0, 0}, {-1, 0, 0}};
  const Ruleset looped(3, loop);
  const auto pr = check_pointedness(looped);
  const bool rejected = !pr.feasible() && check_infeasibility_certificate(looped.moves(), 3, pr.certificate);
  ok = ok && rejected;
  os << "{(1,0,0),(-1,0,0)}: " << (rejected ? "rejected with a checked certificate" : "NOT rejected");
  return {ok, os.str()};
}

// ---------------------------------------------------------------- 8

Verdict aperiodicity() {
  const GameSpec g(builtin::paper_gamma_prime());
  const auto grid = solve_window(g, IntVec{48, 48, 1});
  auto cone = [](const IntVec& p) { return p[0] >= p[1] && p[1] >= 0; };
  int probed = 0, violated = 0, confirmed = 0;
  for (std::int64_t a = -12; a <= 12; ++a)
    for (std::int64_t b = -12; b <= 12; ++b) {
      if (!a && !b) continue;
      ++probed;
      const IntVec l{a, b};
      const auto res = periodicity_probe(grid, 1, IntVec{1, 0}, IntVec{1, 1}, l);
      if (res.periodic) continue;
      ++violated;
      // Independent check of the witness.
      const IntVec p = *res.violation;
      const IntVec q = p - l;
      if (cone(p) && cone(q) && grid.in_window(p.lifted(1)) && grid.in_window(q.lifted(1)) &&
          grid.at(p.lifted(1)) != grid.at(q.lifted(1)))
        ++confirmed;
    }
  bool periods = true;
  for (const IntVec& l : {IntVec{6, 0}, IntVec{0, 6}}) {
    periods = periods && periodicity_probe(grid, 0, IntVec{1, 0}, IntVec{0, 1}, l).periodic;
    // Brute force over the whole slice.
    for (std::int64_t x = l[0]; x <= 48; ++x)
      for (std::int64_t y = l[1]; y <= 48; ++y)
        periods = periods && grid.at(IntVec{x, y, 0}) == grid.at(IntVec{x - l[0], y - l[1], 0});
  }
  std::ostringstream os;
  os << "slice 1, cone x>=y>=0: " << violated << "/" << probed << " periods violated, " << confirmed
     << " witnesses confirmed; slice 0 periods (6,0),(0,6) " << (periods ? "certified" : "NOT certified");
  return {violated == 624 && confirmed == 624 && periods, os.str()};
}

// ---------------------------------------------------------------- 9

// Every position of the grid is P exactly when no option is P. Options
// outside the window are resolved by an independent top-down solve.
int nor_violations(const GameSpec& g, const OutcomeGrid& grid) {
  Solver solver(g, *check_pointedness(g.ruleset()).witness);
  int bad = 0;
  grid.for_each([&](const IntVec& p, Cell c) {
    if (c == Cell::Defeated) return;
    bool any_p = false;
    for (const auto& m : g.ruleset().moves()) {
      const IntVec q = p - m;
      if (!g.is_position(q)) continue;
      const bool qp = grid.in_window(q) ? grid.at(q) == Cell::P : solver.outcome(q) == Outcome::P;
      any_p = any_p || qp;
    }
    bad += (c == Cell::P) == any_p;
  });
  return bad;
}

std::vector<Outcome> bits_of(std::size_t x, int k) {
  std::vector<Outcome> out;
  for (int a = 0; a < k; ++a) out.push_back((x >> a) & 1U ? Outcome::P : Outcome::N);
  return out;
}

Verdict properties() {
  std::ostringstream os;
  int nor_bad = 0, nor_checked = 0, mode_bad = 0, grids = 0;

  std::vector<GameSpec> games{GameSpec(builtin::paper_gamma_prime()), GameSpec(builtin::paper_gamma()),
                              golden_emission().game};
  {
    const RecurrenceSpec spec = ca_to_recurrence(CaSpec{110, "101", 4});
    const NorCircuit g = extend_circuit(synthesize_nor_circuit(encoded_table(spec, ca_encoding())), Variant::A);
    games.push_back(emit_ruleset(search_placement(g, spec, Variant::A, {}), g, spec, ca_encoding(), Variant::A).game);
  }
  for (const auto& g : games) {
    const IntVec hi{30, 30, 2};
    const auto top = solve_window(g, hi, SolveMode::kTopDown);
    const auto serial = solve_window(g, hi, SolveMode::kSerial);
    const auto par = solve_window(g, hi, SolveMode::kParallel);
    mode_bad += !(top == serial) + !(serial == par);
    nor_bad += nor_violations(g, par);
    nor_checked += static_cast<int>(par.size());
    ++grids;
  }
  // Random small rulesets with defeated cosets.
  std::mt19937_64 rng(20);
  std::uniform_int_distribution<int> coord(-3, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<IntVec> moves;
    for (int k = 0; k < 1 + trial % 5; ++k) {
      const IntVec v{coord(rng), coord(rng)};
      if (!v.is_zero()) moves.push_back(v);
    }
    if (moves.empty() || !check_pointedness(Ruleset(2, moves)).feasible()) continue;
    const GameSpec g(Ruleset(2, moves), trial % 2 ? LatticeSet::empty()
                                                  : LatticeSet::coset(IntVec{trial % 5, 1}, Sublattice::integer(), 5));
    const IntVec hi{20, 20};
    const auto top = solve_window(g, hi, SolveMode::kTopDown);
    const auto par = solve_window(g, hi, SolveMode::kParallel);
    mode_bad += !(top == par) + !(top == solve_window(g, hi, SolveMode::kSerial));
    nor_bad += nor_violations(g, par);
    nor_checked += static_cast<int>(par.size());
    ++grids;
  }

  // Synthesis: every table for k <= 3 with s = 1; seeded tables for every
  // (k, s) with s | k, k <= 6; every input row of each.
  int tables = 0, rows_bad = 0;
  auto check_table = [&](const TruthTable& t) {
    const auto c = synthesize_nor_circuit(t);
    for (std::size_t x = 0; x < t.rows.size(); ++x) rows_bad += eval_circuit(c, bits_of(x, t.k)) != t.rows[x];
    ++tables;
  };
  for (int k = 1; k <= 3; ++k) {
    const std::size_t rows = std::size_t{1} << k;
    for (std::size_t code = 0; code < (std::size_t{1} << rows); ++code) {
      TruthTable t{k, 1, {}};
      for (std::size_t x = 0; x < rows; ++x) t.rows.push_back({(code >> x) & 1U ? Outcome::P : Outcome::N});
      check_table(t);
    }
  }
  std::mt19937_64 trng(6);
  for (int k = 1; k <= 6; ++k)
    for (int s = 1; s <= k; ++s) {
      if (k % s) continue;
      for (int rep = 0; rep < 16; ++rep) {
        TruthTable t{k, s, {}};
        for (std::size_t x = 0; x < (std::size_t{1} << k); ++x) {
          std::vector<Outcome> row;
          for (int j = 0; j < s; ++j) row.push_back(trng() & 1 ? Outcome::P : Outcome::N);
          t.rows.push_back(row);
        }
        check_table(t);
      }
    }
  os << "nor law " << nor_checked - nor_bad << "/" << nor_checked << " positions; solver modes agree on "
     << grids << " games (" << mode_bad << " disagreements); synthesis " << tables << " tables, " << rows_bad
     << " bad rows";
  return {nor_bad == 0 && mode_bad == 0 && rows_bad == 0, os.str()};
}

template <typename Fn>
Verdict guarded(Fn fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

int main() {
  report(1, "gasket reproduction", guarded(gasket));
  report(2, "slice-0 law", guarded(slice0_law));
  report(3, "golden emission equals the printed ruleset", guarded(golden_set));
  report(4, "printed ruleset agrees with the 28-move ruleset", guarded(printed_vs_prime));
  report(5, "xor pipeline round trip", guarded(xor_round_trip));
  report(6, "CA embedding, variant B", guarded(universality));
  report(7, "axioms", guarded(axioms));
  report(8, "aperiodicity probe", guarded(aperiodicity));
  report(9, "property suites", guarded(properties));
  std::cout << "summary: " << 9 - failures - documented << " PASS, " << failures + documented << " FAIL ("
            << documented << " documented, explained form verified)\n";
  return failures == 0 ? 0 : 1;
}
