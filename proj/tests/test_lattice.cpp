#include <limits>
#include <random>
#include <set>

#include "doctest.h"
#include "latgame/feasibility.hpp"
#include "latgame/lattice.hpp"
#include "latgame/lattice_set.hpp"
#include "latgame/rational.hpp"
#include "latgame/staircase.hpp"

using namespace latgame;

namespace {

// v in span_Z(b1, b2) by Cramer's rule.
bool cramer_member(const IntVec& b1, const IntVec& b2, const IntVec& v) {
  const std::int64_t det = b1[0] * b2[1] - b1[1] * b2[0];
  const std::int64_t x = v[0] * b2[1] - v[1] * b2[0];
  const std::int64_t y = b1[0] * v[1] - b1[1] * v[0];
  return x % det == 0 && y % det == 0;
}

Sublattice random_lattice(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> d(-4, 4);
  while (true) {
    IntVec b1{d(rng), d(rng)}, b2{d(rng), d(rng)};
    if (b1[0] * b2[1] - b1[1] * b2[0] != 0) return Sublattice(b1, b2);
  }
}

}  // namespace

TEST_CASE("vector arithmetic") {
  const IntVec a{1, -2, 3};
  CHECK(a + IntVec{1, 1, 1} == IntVec{2, -1, 4});
  CHECK(3 * a == IntVec{3, -6, 9});
  CHECK(dot(a, IntVec{1, 1, 1}) == 2);
  CHECK(a.head2() == IntVec{1, -2});
  CHECK(IntVec{4, 5}.lifted(1) == IntVec{4, 5, 1});
  CHECK(IntVec{0, 0}.leq(IntVec{0, 3}));
  CHECK_FALSE(IntVec{1, 0}.leq(IntVec{0, 3}));
  CHECK(a.str() == "(1,-2,3)");
  const auto big = std::numeric_limits<std::int64_t>::max();
  const IntVec top{big, 0}, e0{1, 0}, flat{1, 2}, tall{1, 2, 3};
  CHECK_THROWS_AS(top + e0, std::overflow_error);
  CHECK_THROWS_AS(top - (-e0), std::overflow_error);
  CHECK_THROWS_AS(2 * top, std::overflow_error);
  CHECK_THROWS_AS(flat + tall, std::invalid_argument);
}

TEST_CASE("sublattice membership") {
  CHECK(Sublattice::integer().contains(IntVec{3, -5}));
  const auto six = Sublattice::scaled_integer(6);
  CHECK(six.contains(IntVec{6, -12}));
  CHECK_FALSE(six.contains(IntVec{6, 1}));
  const auto even = Sublattice::even_sum();
  CHECK(even.contains(IntVec{2, 0}));
  CHECK_FALSE(even.contains(IntVec{1, 0}));
  CHECK(even.index() == 2);
  CHECK(even.axis_period(0) == 2);
  const IntVec row{1, 2}, twice{2, 4};
  CHECK_THROWS_AS(Sublattice(row, twice), std::invalid_argument);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::int64_t> d(-4, 4);
    IntVec b1{d(rng), d(rng)}, b2{d(rng), d(rng)};
    if (b1[0] * b2[1] - b1[1] * b2[0] == 0) continue;
    const Sublattice L(b1, b2);
    Box{IntVec{-12, -12}, IntVec{12, 12}}.for_each([&](const IntVec& v) {
      CHECK(L.contains(v) == cramer_member(b1, b2, v));
    });
  }
}

TEST_CASE("quotient index covers every coset once") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Sublattice L = random_lattice(rng).scaled(1 + static_cast<std::int64_t>(rng() % 3));
    const QuotientIndex q(L);
    CHECK(q.size() == static_cast<std::size_t>(L.index()));
    std::set<std::size_t> seen;
    Box{IntVec{-15, -15}, IntVec{15, 15}}.for_each([&](const IntVec& v) {
      const std::size_t idx = q.index_of(v);
      REQUIRE(idx < q.size());
      seen.insert(idx);
      CHECK(L.contains(v - q.representative(idx)));
    });
    CHECK(seen.size() == q.size());
    for (std::size_t idx = 0; idx < q.size(); ++idx) CHECK(q.index_of(q.representative(idx)) == idx);
  }
}

TEST_CASE("module ideals") {
  const auto all = ModuleIdeal::positive_part(Sublattice::integer());
  CHECK(all.generators() == std::vector<IntVec>{IntVec{0, 0}});
  const ModuleIdeal m(Sublattice::integer(), {IntVec{2, 0}, IntVec{0, 2}, IntVec{3, 1}, IntVec{2, 0}});
  CHECK(m.generators() == std::vector<IntVec>{IntVec{0, 2}, IntVec{2, 0}});
  CHECK(m.contains(IntVec{3, 1}));
  CHECK_FALSE(m.contains(IntVec{1, 1}));
  CHECK(m.is_generator(IntVec{2, 0}));
  CHECK_FALSE(m.is_generator(IntVec{3, 1}));
  const std::vector<IntVec> odd{IntVec{1, 0}}, none;
  CHECK_THROWS_AS(ModuleIdeal(Sublattice::even_sum(), odd), std::invalid_argument);
  CHECK_THROWS_AS(ModuleIdeal(Sublattice::integer(), none), std::invalid_argument);

  const ModuleIdeal e(Sublattice::even_sum(), {IntVec{0, 4}, IntVec{2, 2}, IntVec{4, 0}});
  CHECK(e.contains(IntVec{3, 3}));
  CHECK_FALSE(e.contains(IntVec{3, 4}));
  CHECK_FALSE(e.contains(IntVec{1, 1}));
  for (std::size_t a = 0; a < e.generators().size(); ++a)
    for (std::size_t b = 0; b < e.generators().size(); ++b)
      if (a != b) CHECK_FALSE(Sublattice::even_sum().dominates(e.generators()[a], e.generators()[b]));
}

TEST_CASE("lattice sets") {
  const IntVec I[] = {IntVec{0, 0}, IntVec{1, 0}, IntVec{2, 0}, IntVec{0, 1}};
  std::vector<LatticeSet> parts;
  for (const auto& i : I) parts.push_back(LatticeSet::coset(i, Sublattice::integer(), 6));
  const auto seeds = LatticeSet::unite(parts);
  CHECK(seeds.contains(IntVec{7, 6}));
  CHECK_FALSE(seeds.contains(IntVec{7, 7}));

  const auto corner = LatticeSet::orthant(IntVec{2, 3});
  CHECK_FALSE(corner.contains(IntVec{2, 2}));
  CHECK(corner.contains(IntVec{5, 3}));

  const auto self = LatticeSet::difference(seeds, seeds);
  Box{IntVec{-8, -8}, IntVec{8, 8}}.for_each([&](const IntVec& p) { CHECK_FALSE(self.contains(p)); });

  const auto layered = LatticeSet::layer(1, corner);
  CHECK(layered.dim() == 3);
  CHECK(layered.contains(IntVec{2, 3, 1}));
  CHECK_FALSE(layered.contains(IntVec{2, 3, 0}));
  const IntVec p3{1, 2, 3};
  CHECK_THROWS_AS(corner.contains(p3), std::invalid_argument);
  CHECK_FALSE(LatticeSet::empty().contains(IntVec{0, 0}));

  const auto fin = LatticeSet::finite({IntVec{1, 1}, IntVec{-1, 2}});
  CHECK(fin.contains(IntVec{-1, 2}));
  CHECK_FALSE(fin.contains(IntVec{2, -1}));
}

TEST_CASE("lattice set text round trip and De Morgan") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(-3, 3);
  auto leaf = [&]() -> LatticeSet {
    switch (rng() % 3) {
      case 0: return LatticeSet::orthant(IntVec{d(rng), d(rng)});
      case 1: return LatticeSet::coset(IntVec{d(rng), d(rng)}, random_lattice(rng), 1 + static_cast<std::int64_t>(rng() % 3));
      default: return LatticeSet::finite({IntVec{d(rng), d(rng)}, IntVec{d(rng), d(rng)}});
    }
  };
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = leaf(), b = leaf(), c = leaf();
    const auto lhs = LatticeSet::difference(a, LatticeSet::unite({b, c}));
    const auto rhs = LatticeSet::intersect({LatticeSet::difference(a, b), LatticeSet::difference(a, c)});
    const auto back = LatticeSet::parse(lhs.str());
    CHECK(back.str() == lhs.str());
    Box{IntVec{-6, -6}, IntVec{6, 6}}.for_each([&](const IntVec& p) {
      CHECK(lhs.contains(p) == rhs.contains(p));
      CHECK(back.contains(p) == lhs.contains(p));
    });
  }
  const auto parsed = LatticeSet::parse("diff( orthant(0,0), union(coset(1,0;6,0;0,6;1), finite{(2,2),(3,3)}) )");
  CHECK(parsed.contains(IntVec{0, 0}));
  CHECK_FALSE(parsed.contains(IntVec{7, 0}));
  CHECK_FALSE(parsed.contains(IntVec{3, 3}));
  CHECK(LatticeSet::parse("layer(0;empty)").contains(IntVec{0, 0, 0}) == false);
  CHECK_THROWS_AS(LatticeSet::parse("orthant(1,2"), std::invalid_argument);
  CHECK_THROWS_AS(LatticeSet::parse("blob(1)"), std::invalid_argument);
  CHECK_THROWS_AS(LatticeSet::parse("union(orthant(1,2),orthant(1,2,3))"), std::invalid_argument);
}

TEST_CASE("minimal elements") {
  std::vector<LatticeSet> shifted{LatticeSet::orthant(IntVec{1, 0}), LatticeSet::orthant(IntVec{0, 1})};
  const auto meet = LatticeSet::intersect(shifted);
  CHECK(minimal_elements(meet, Sublattice::integer(), Box{IntVec{0, 0}, IntVec{4, 4}}) ==
        std::vector<IntVec>{IntVec{1, 1}});
  const std::vector<IntVec> units{IntVec{1, 0}, IntVec{0, 1}};
  CHECK(translate_intersection_generators(Sublattice::integer(), units) == std::vector<IntVec>{IntVec{1, 1}});
  CHECK(positive_generators(Sublattice::integer()) == std::vector<IntVec>{IntVec{0, 1}, IntVec{1, 0}});
  CHECK(positive_generators(Sublattice::even_sum()) == std::vector<IntVec>{IntVec{0, 2}, IntVec{1, 1}, IntVec{2, 0}});
  const std::vector<IntVec> ca_betas{IntVec{2, 0}, IntVec{1, 1}, IntVec{0, 2}};
  CHECK(translate_intersection_generators(Sublattice::even_sum(), ca_betas) == std::vector<IntVec>{IntVec{2, 2}});
  CHECK(minimal_elements(module_set(ModuleIdeal::positive_part(Sublattice::integer())), Sublattice::integer(),
                         Box{IntVec{0, 0}, IntVec{3, 3}}) == std::vector<IntVec>{IntVec{0, 0}});

  // A generator on the upper face may hide more beyond it.
  const Box small{IntVec{0, 0}, IntVec{4, 4}};
  const auto edge = LatticeSet::orthant(IntVec{4, 0});
  CHECK_THROWS_AS(minimal_elements(edge, Sublattice::integer(), small), IncompleteBox);

  // Brute force against random staircases.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<LatticeSet> corners;
    std::vector<IntVec> pts;
    for (int k = 0; k < 3; ++k) {
      pts.push_back(IntVec{static_cast<std::int64_t>(rng() % 6), static_cast<std::int64_t>(rng() % 6)});
      corners.push_back(LatticeSet::orthant(pts.back()));
    }
    std::vector<IntVec> expected;
    for (const auto& p : pts) {
      bool minimal = true;
      for (const auto& q : pts)
        if (q != p && q.leq(p)) minimal = false;
      if (minimal) expected.push_back(p);
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    CHECK(minimal_elements(LatticeSet::unite(corners), Sublattice::integer(), Box{IntVec{0, 0}, IntVec{7, 7}}) == expected);
  }
}

TEST_CASE("staircase F") {
  const auto f6 = enumerate_F(Sublattice::integer(), 6);
  CHECK(f6.size() == 36);
  CHECK(f6.front() == IntVec{0, 0});
  CHECK(f6.back() == IntVec{5, 5});
  CHECK(enumerate_F(Sublattice::integer(), 1) == std::vector<IntVec>{IntVec{0, 0}});
  CHECK(enumerate_F(Sublattice::even_sum(), 1) == std::vector<IntVec>{IntVec{0, 0}, IntVec{0, 1}, IntVec{1, 0}});

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const Sublattice L = random_lattice(rng);
    const std::int64_t m = 1 + static_cast<std::int64_t>(rng() % 3);
    const Sublattice mL = L.scaled(m);
    const QuotientIndex q(mL);
    std::set<std::size_t> hit;
    for (const auto& p : enumerate_F(L, m)) hit.insert(q.index_of(p));
    CHECK(hit.size() == q.size());
  }
}

TEST_CASE("rationals") {
  const Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(1, 2) == Rational(-1));
  CHECK(a * Rational(2, 3) == Rational(-1));
  CHECK(a / Rational(-3) == Rational(1, 2));
  CHECK(a.floor() == -2);
  CHECK(a.ceil() == -1);
  CHECK(Rational(7, 7).is_integer());
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(a.str() == "-3/2");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);  // NOLINT
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Rational(big) + Rational(1), std::overflow_error);
}

TEST_CASE("positive functionals and certificates") {
  const std::vector<IntVec> pointed{{1, 1, 0}, {5, -2, 0}, {-1, 4, 0}, {-2, 1, 1}, {0, 0, 2}};
  const auto ok = positive_functional(pointed, 3);
  REQUIRE(ok.feasible());
  for (int k = 0; k < 3; ++k) CHECK((*ok.functional)[k] >= 1);
  for (const auto& v : pointed) CHECK(dot(*ok.functional, v) >= 1);

  const std::vector<IntVec> line{{1, 0, 0}, {-1, 0, 0}};
  const auto bad = positive_functional(line, 3);
  REQUIRE_FALSE(bad.feasible());
  CHECK(check_infeasibility_certificate(line, 3, bad.certificate));
  const std::vector<std::int64_t> zeros{0, 0, 0, 0, 0}, lopsided{1, 2, 0, 0, 0};
  CHECK_FALSE(check_infeasibility_certificate(line, 3, zeros));
  CHECK_FALSE(check_infeasibility_certificate(line, 3, lopsided));

  // A negative orthant vector cannot be paired positively.
  const std::vector<IntVec> down{IntVec{-1, -2}};
  const auto neg = positive_functional(down, 2);
  REQUIRE_FALSE(neg.feasible());
  CHECK(check_infeasibility_certificate(down, 2, neg.certificate));

  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> d(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<IntVec> vs;
    for (int k = 0; k < 4; ++k) vs.push_back(IntVec{d(rng), d(rng), d(rng)});
    const auto r = positive_functional(vs, 3);
    if (r.feasible()) {
      for (int k = 0; k < 3; ++k) CHECK((*r.functional)[k] >= 1);
      for (const auto& v : vs) CHECK(dot(*r.functional, v) >= 1);
    } else {
      CHECK(check_infeasibility_certificate(vs, 3, r.certificate));
    }
  }
}
