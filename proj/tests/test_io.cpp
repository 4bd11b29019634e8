#include <string>

#include "doctest.h"
#include "latgame/builtin.hpp"
#include "latgame/io.hpp"

using namespace latgame;

namespace {

const char* kXorSpec = R"j({
  "alphabet": ["P", "N"],
  "betas": [[1, 0], [0, 1]],
  "encoding": "swapped",
  "f0": [{"l": [0, 0], "value": "P"}],
  "g": ["N", "P", "P", "N"],
  "sigma0": "P"
})j";

bool same_sets(const LatticeSet& a, const LatticeSet& b, const IntVec& hi) {
  bool same = true;
  Box::from_origin(hi).for_each([&](const IntVec& p) { same = same && a.contains(p) == b.contains(p); });
  return same;
}

}  // namespace

TEST_CASE("ruleset files round trip") {
  for (const auto& name : builtin::names()) {
    const GameSpec g = io::load_ruleset(name);
    const std::string text = io::write_ruleset(g);
    CHECK(io::read_ruleset(text).ruleset() == g.ruleset());
    CHECK(io::write_ruleset(io::read_ruleset(text)) == text);
  }
  const std::string text = io::write_ruleset(GameSpec(builtin::paper_gamma_prime()));
  CHECK(text.rfind("{\n  \"dim\": 3,\n  \"moves\": [\n    [-3,4,0],\n", 0) == 0);
  CHECK(text.find("defeated") == std::string::npos);

  const auto d = LatticeSet::parse("union(orthant(3,0), finite{(0,1),(1,1)})");
  const GameSpec with_d(Ruleset(2, {{1, 0}, {0, 1}}), d);
  const GameSpec back = io::read_ruleset(io::write_ruleset(with_d));
  CHECK(same_sets(back.defeated(), d, IntVec{8, 8}));
}

TEST_CASE("ruleset files: schema errors") {
  CHECK_THROWS_AS(io::read_ruleset("{"), io::FormatError);
  CHECK_THROWS_AS(io::read_ruleset(R"j({"dim": 2})j"), io::FormatError);
  CHECK_THROWS_AS(io::read_ruleset(R"j({"dim": 2, "moves": [], "colour": 1})j"), io::FormatError);
  CHECK_THROWS_AS(io::read_ruleset(R"j({"dim": 2, "moves": [[1, 0, 0]]})j"), io::FormatError);
  CHECK_THROWS_AS(io::read_ruleset(R"j({"dim": 2, "moves": [[0, 0]]})j"), io::FormatError);
  CHECK_THROWS_AS(io::read_ruleset(R"j({"dim": 2, "moves": [[1.5, 0]]})j"), io::FormatError);
  CHECK_THROWS_AS(io::read_ruleset(R"j({"dim": 4, "moves": []})j"), io::FormatError);
  CHECK_THROWS_AS(io::read_ruleset(R"j({"dim": 2, "moves": [[1, 0]], "defeated": "orthant(1"})j"), io::FormatError);
  CHECK_THROWS_AS(io::read_ruleset(R"j({"dim": 2, "moves": [[1, 0]], "defeated": "orthant(1,1,1)"})j"), io::FormatError);
  CHECK_THROWS(io::load_ruleset("/nonexistent/ruleset.json"));
}

TEST_CASE("spec files") {
  const auto sf = io::read_spec(kXorSpec);
  const auto ref = xor_spec();
  CHECK(sf.spec.g == ref.g);
  CHECK(sf.spec.betas == ref.betas);
  CHECK(sf.spec.f0 == ref.f0);
  CHECK(sf.enc.table == swapped_encoding().table);
  CHECK(sf.variant == Variant::C);

  const std::string text = io::write_spec(sf);
  const auto again = io::read_spec(text);
  CHECK(io::write_spec(again) == text);
  CHECK(again.spec.module.generators() == ref.module.generators());

  const auto ca = io::read_spec(R"j({"ca": {"rule": 110, "word": "101", "steps": 4}})j");
  REQUIRE(ca.ca.has_value());
  CHECK(ca.ca->steps == 4);
  CHECK(ca.variant == Variant::B);
  const auto direct = ca_to_recurrence(*ca.ca);
  CHECK(ca.spec.g == direct.g);
  CHECK(ca.spec.f0 == direct.f0);
  CHECK(ca.spec.module.generators() == direct.module.generators());
  CHECK(io::read_spec(io::write_spec(ca)).spec.f0 == direct.f0);

  const auto b = io::build_circuit(sf, Variant::B);
  CHECK(b.in_prime().has_value());
  CHECK(b.in_double_prime().has_value());
}

TEST_CASE("spec files: schema errors") {
  std::string bad = kXorSpec;
  bad.replace(bad.find("\"N\", \"P\", \"P\", \"N\""), 18, "\"N\", \"P\", \"Q\", \"N\"");
  CHECK_THROWS_AS(io::read_spec(bad), io::FormatError);
  CHECK_THROWS_AS(io::read_spec(R"j({"alphabet": ["P", "N"], "betas": [[1, 0], [0, 1]], "encoding": "swapped",
    "g": ["N", "P", "P"], "sigma0": "P"})j"), io::FormatError);
  CHECK_THROWS_AS(io::read_spec(R"j({"alphabet": ["P", "N"], "betas": [[1, 0], [0, 1]],
    "encoding": {"P": "P", "N": "P"}, "g": ["N", "P", "P", "N"], "sigma0": "P"})j"), io::FormatError);
  CHECK_THROWS_AS(io::read_spec(R"j({"alphabet": ["P", "N"], "betas": [[1, 0], [0, 1]], "encoding": "swapped",
    "g": ["N", "P", "P", "N"], "sigma0": "P", "extra": 0})j"), io::FormatError);
  // Identity fails enc(sigma0) = N.
  CHECK_THROWS_AS(io::read_spec(R"j({"alphabet": ["P", "N"], "betas": [[1, 0], [0, 1]], "encoding": "identity",
    "g": ["N", "P", "P", "N"], "sigma0": "P"})j"), io::FormatError);
  CHECK_THROWS_AS(io::read_spec(R"j({"ca": {"rule": 300, "word": "1"}})j"), io::FormatError);
  CHECK_THROWS_AS(io::read_spec(R"j({"ca": {"rule": 90, "word": "1"}, "variant": "D"})j"), io::FormatError);
}

TEST_CASE("placement sidecars round trip") {
  const auto sf = io::read_spec(kXorSpec);
  const NorCircuit g = io::build_circuit(sf, Variant::C);
  SearchOptions opts;
  opts.seed = 3;
  const Placement pl = search_placement(g, sf.spec, Variant::C, opts);
  const CompiledGame cg = emit_ruleset(pl, g, sf.spec, sf.enc, Variant::C);

  const std::string text = io::write_sidecar(cg, 3);
  const io::Sidecar sc = io::read_sidecar(text);
  CHECK(sc.seed == 3);
  CHECK(sc.variant == Variant::C);
  CHECK(sc.placement.pos == pl.pos);
  CHECK(sc.placement.m == pl.m);
  CHECK(sc.placement.I == pl.I);
  CHECK(sc.placement.nu == pl.nu);
  CHECK(sc.circuit.edges() == g.edges());
  REQUIRE(sc.circuit.size() == g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    CHECK(sc.circuit.vertices()[k].name == g.vertices()[k].name);
    CHECK(sc.circuit.vertices()[k].role == g.vertices()[k].role);
  }
  REQUIRE(sc.lines.size() == cg.lines.size());
  for (std::size_t k = 0; k < cg.lines.size(); ++k) {
    CHECK(sc.lines[k].label == cg.lines[k].label);
    CHECK(sc.lines[k].moves == cg.lines[k].moves);
  }
  CHECK(io::write_sidecar(CompiledGame{cg.game, sc.placement, sc.circuit, sc.variant, sc.lines}, 3) == text);

  std::string broken = text;
  broken.replace(broken.find("\"m\": "), 5, "\"m\": -");
  CHECK_THROWS_AS(io::read_sidecar(broken), io::FormatError);
}

TEST_CASE("sidecar paths") {
  CHECK(io::sidecar_path("out.json") == "out.placement.json");
  CHECK(io::sidecar_path("dir/x.rules") == "dir/x.rules.placement.json");
  CHECK(io::sidecar_path(".json") == ".json.placement.json");
}

TEST_CASE("shipped spec files load") {
  const std::string dir = LATGAME_SPEC_DIR;
  const auto x = io::load_spec(dir + "/xor.json");
  CHECK(x.spec.g == xor_spec().g);
  CHECK(x.enc.table == swapped_encoding().table);
  CHECK(io::load_spec(dir + "/rule90.json").ca->steps == 8);
  CHECK(io::load_spec(dir + "/rule110.json").ca->rule == 110);
  CHECK(io::load_spec(dir + "/rule110_a.json").variant == Variant::A);
}
