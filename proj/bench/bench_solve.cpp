#include <benchmark/benchmark.h>

#include "latgame/builtin.hpp"
#include "latgame/compiler.hpp"
#include "latgame/engine.hpp"

using namespace latgame;

namespace {

// range(0) = window edge, range(1) = SolveMode.
void BM_gamma_prime(benchmark::State& state) {
  const GameSpec game(builtin::paper_gamma_prime());
  const std::int64_t w = state.range(0);
  const auto mode = static_cast<SolveMode>(state.range(1));
  for (auto _ : state) {
    auto grid = solve_window(game, IntVec{w, w, 1}, mode);
    benchmark::DoNotOptimize(grid);
  }
  state.SetItemsProcessed(state.iterations() * (w + 1) * (w + 1) * 2);
}

// The larger compiled xor ruleset: more moves per position.
void BM_compiled_xor(benchmark::State& state) {
  const RecurrenceSpec spec = xor_spec();
  const Encoding enc = swapped_encoding();
  const NorCircuit g = extend_circuit(synthesize_nor_circuit(encoded_table(spec, enc)), Variant::C);
  const CompiledGame cg = emit_ruleset(search_placement(g, spec, Variant::C, {}), g, spec, enc, Variant::C);
  const std::int64_t w = state.range(0);
  const auto mode = static_cast<SolveMode>(state.range(1));
  for (auto _ : state) {
    auto grid = solve_window(cg.game, IntVec{w, w, 1}, mode);
    benchmark::DoNotOptimize(grid);
  }
  state.SetItemsProcessed(state.iterations() * (w + 1) * (w + 1) * 2);
}

void modes(benchmark::internal::Benchmark* b) {
  for (std::int64_t w : {96, 192, 384})
    for (auto m : {SolveMode::kTopDown, SolveMode::kSerial, SolveMode::kParallel})
      b->Args({w, static_cast<std::int64_t>(m)});
  b->ArgNames({"window", "mode"})->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_gamma_prime)->Apply(modes);
BENCHMARK(BM_compiled_xor)->Apply(modes);

BENCHMARK_MAIN();
