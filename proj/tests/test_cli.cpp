#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "latgame/builtin.hpp"
#include "latgame/io.hpp"

using namespace latgame;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("latgame_cli_" + std::to_string(::getpid()));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

const char* kXorSpec = R"j({
  "alphabet": ["P", "N"],
  "betas": [[1, 0], [0, 1]],
  "encoding": "swapped",
  "f0": [{"l": [0, 0], "value": "P"}],
  "g": ["N", "P", "P", "N"],
  "sigma0": "P"
})j";

}  // namespace

TEST_CASE("builtin prints the transcribed rulesets") {
  const auto r = run({"builtin", "paper-gamma-prime"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == io::write_ruleset(GameSpec(builtin::paper_gamma_prime())));
  CHECK(io::read_ruleset(r.out).ruleset().size() == 28);
  CHECK(run({"builtin", "paper-gamma-prime"}).out == r.out);
  CHECK(io::read_ruleset(run({"builtin", "paper-gamma"}).out).ruleset() == builtin::paper_gamma());
  CHECK(run({"builtin", "--list"}).out == "paper-gamma\npaper-gamma-prime\n");
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"builtin", "paper-gamma", "--bogus"}).code == cli::kUsage);
  CHECK(run({"builtin", "nope"}).code == cli::kUsage);
  CHECK(run({"solve", "paper-gamma-prime"}).code == cli::kUsage);
  CHECK(run({"solve", "paper-gamma-prime", "--window", "3,x"}).code == cli::kUsage);
  CHECK(run({"solve", "paper-gamma-prime", "--window", "3,3,1", "--format", "gif"}).code == cli::kUsage);
  CHECK(run({"solve", "paper-gamma-prime", "--window", "3,3,1", "--slice", "2"}).code == cli::kUsage);
  CHECK(run({"solve", "/nonexistent.json", "--window", "3,3,1"}).code == cli::kUsage);
  CHECK(run({"oracle", "fibonacci", "--window", "3,3"}).code == cli::kUsage);
  CHECK(run({"verify", "paper-gamma"}).code == cli::kUsage);
  CHECK(run({"probe", "paper-gamma-prime", "--window", "8,8", "--cone", "1,0"}).code == cli::kUsage);
  const auto help = run({"--help"});
  CHECK(help.code == cli::kOk);
  CHECK(help.out.find("compile") != std::string::npos);
}

TEST_CASE("axioms") {
  const auto r = run({"axioms", "paper-gamma-prime"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("pointed: yes") != std::string::npos);
  CHECK(r.out.find("axis 2: pass, witness") != std::string::npos);

  TempDir dir;
  io::write_file(dir / "loop.json", R"j({"dim": 3, "moves": [[-1, 0, 0], [1, 0, 0]]})j");
  const auto bad = run({"axioms", dir / "loop.json"});
  CHECK(bad.code == cli::kCheckFailed);
  CHECK(bad.out.find("pointed: NO, zero combination: 1*(-1,0,0) 1*(1,0,0)") != std::string::npos);

  const auto refused = run({"solve", dir / "loop.json", "--window", "3,3,0"});
  CHECK(refused.code == cli::kCheckFailed);
  CHECK(refused.err.find("solver refused") != std::string::npos);
}

TEST_CASE("solve renders the gasket on the oracle mask") {
  const auto game = run({"solve", "paper-gamma-prime", "--window", "108,108,1", "--slice", "1", "--highlight", "6"});
  const auto mask = run({"oracle", "binom-parity", "--window", "18,18"});
  CHECK(game.code == cli::kOk);
  CHECK(mask.code == cli::kOk);
  CHECK(game.out == mask.out);
  CHECK(run({"oracle", "xor", "--window", "18,18"}).out == mask.out);

  const auto pbm = run({"solve", "paper-gamma-prime", "--window", "108,108,1", "--slice", "1", "--highlight", "6",
                        "--format", "pbm"});
  CHECK(pbm.out == run({"oracle", "binom-parity", "--window", "18,18", "--format", "pbm"}).out);
  CHECK(pbm.out.rfind("P1\n", 0) == 0);

  for (const char* mode : {"serial", "topdown"})
    CHECK(run({"solve", "paper-gamma-prime", "--window", "30,30,1", "--slice", "1", "--mode", mode}).out ==
          run({"solve", "paper-gamma-prime", "--window", "30,30,1", "--slice", "1"}).out);

  TempDir dir;
  CHECK(run({"render", "paper-gamma-prime", "--window", "24,24,1", "--slice", "1", "-o", dir / "g.svg"}).code ==
        cli::kOk);
  CHECK(io::read_file(dir / "g.svg").find("<svg") != std::string::npos);
  CHECK(run({"render", "paper-gamma-prime", "--window", "24,24,1", "-o", dir / "g.gif"}).code == cli::kUsage);
}

TEST_CASE("equiv") {
  const auto same = run({"equiv", "paper-gamma-prime", "paper-gamma-prime", "--window", "12,12,1"});
  CHECK(same.code == cli::kOk);
  CHECK(same.out.find("equivalent on") != std::string::npos);
  const auto diff = run({"equiv", "paper-gamma", "paper-gamma-prime", "--window", "12,12,1"});
  CHECK(diff.code == cli::kCheckFailed);
  CHECK(diff.out.find("DIFFERENT at (0,0,1): N vs P") != std::string::npos);
}

TEST_CASE("probe certifies the slice-0 periods") {
  const auto r = run({"probe", "paper-gamma-prime", "--slice", "0", "--max-period", "6", "--window", "48,48"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("period (6,0): holds") != std::string::npos);
  CHECK(r.out.find("period (0,6): holds") != std::string::npos);
  CHECK(r.out.find("period (3,0): violated at") != std::string::npos);
  CHECK(r.out.find("periods: (-6,-6) (-6,0) (-6,6) (0,-6) (0,6) (6,-6) (6,0) (6,6)\n") != std::string::npos);

  const auto one = run({"probe", "paper-gamma-prime", "--slice", "1", "--cone", "1,0:1,1", "--period", "6,0",
                        "--window", "48,48"});
  CHECK(one.out.find("period (6,0): violated at") != std::string::npos);
  CHECK(one.out.find("periods: none") != std::string::npos);
}

TEST_CASE("verify on the builtins") {
  const auto prime = run({"verify", "paper-gamma-prime", "--bound", "192"});
  CHECK(prime.code == cli::kOk);
  CHECK(prime.out.find("verify: pass") != std::string::npos);
  const auto printed = run({"verify", "paper-gamma", "--bound", "192"});
  CHECK(printed.code == cli::kCheckFailed);
  CHECK(printed.out.find("slice0: pass") != std::string::npos);
  CHECK(printed.out.find("outputs: FAIL") != std::string::npos);
}

TEST_CASE("compile then verify round trip") {
  TempDir dir;
  io::write_file(dir / "xor.json", kXorSpec);
  const auto c = run({"compile", dir / "xor.json", "--seed", "0", "-o", dir / "xor_c.json"});
  REQUIRE(c.code == cli::kOk);
  CHECK(c.out.find("(c) strengthened: pass") != std::string::npos);
  CHECK(fs::exists(dir / "xor_c.placement.json"));
  const std::string rules = io::read_file(dir / "xor_c.json");
  const std::string side = io::read_file(dir / "xor_c.placement.json");

  // Byte-identical on a second run.
  REQUIRE(run({"compile", dir / "xor.json", "--seed", "0", "-o", dir / "again.json"}).code == cli::kOk);
  CHECK(io::read_file(dir / "again.json") == rules);
  CHECK(io::read_file(dir / "again.placement.json") == side);

  // The written lines are exactly the ruleset.
  const auto sc = io::read_sidecar(side);
  std::vector<IntVec> all;
  for (const auto& line : sc.lines) all.insert(all.end(), line.moves.begin(), line.moves.end());
  CHECK(Ruleset(3, all) == io::read_ruleset(rules).ruleset());

  const auto v = run({"verify", dir / "xor_c.json", "--spec", dir / "xor.json", "--bound", "200"});
  CHECK(v.code == cli::kOk);
  CHECK(v.out.find("verify: pass") != std::string::npos);

  // Drop the first wire.
  const GameSpec g = io::read_ruleset(rules);
  const GameSpec cut(g.ruleset().without(sc.lines.front().moves.front()));
  io::write_file(dir / "cut.json", io::write_ruleset(cut));
  const auto bad = run({"verify", dir / "cut.json", "--spec", dir / "xor.json", "--placement",
                        dir / "xor_c.placement.json", "--bound", "200"});
  CHECK(bad.code == cli::kCheckFailed);
  CHECK(bad.out.find("verify: FAIL") != std::string::npos);

  CHECK(run({"compile", dir / "xor.json"}).code == cli::kUsage);
  CHECK(run({"compile", dir / "xor.json", "--variant", "Q", "-o", dir / "q.json"}).code == cli::kUsage);
  CHECK(run({"compile", dir / "xor.json", "--attempts", "1", "--seed", "5", "-o", dir / "q.json"}).code ==
        cli::kCheckFailed);
  io::write_file(dir / "broken.json", R"j({"alphabet": ["P"]})j");
  CHECK(run({"compile", dir / "broken.json", "-o", dir / "q.json"}).code == cli::kUsage);
  CHECK(run({"verify", dir / "xor_c.json", "--bound", "10"}).code == cli::kUsage);
}

TEST_CASE("compile a CA in variant B") {
  TempDir dir;
  io::write_file(dir / "r90.json", R"j({"ca": {"rule": 90, "word": "1", "steps": 4}, "variant": "B"})j");
  const auto c = run({"compile", dir / "r90.json", "-o", dir / "r90_c.json"});
  REQUIRE(c.code == cli::kOk);
  CHECK(c.out.find("variant B") != std::string::npos);
  const auto v = run({"verify", dir / "r90_c.json", "--spec", dir / "r90.json", "--bound", "200"});
  CHECK(v.code == cli::kOk);
  CHECK(v.out.find("in-double-prime: pass") != std::string::npos);
}
