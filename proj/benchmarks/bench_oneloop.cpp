#include <benchmark/benchmark.h>

#include "oneloop/fixtures.hpp"
#include "oneloop/invariants.hpp"
#include "oneloop/solution_io.hpp"

using namespace oneloop;

namespace {

struct World {
  LayeredTriangulation L;
  ObstructionData trivial;
  ObstructionData signed_obs;
  SolutionFile sol_trivial;
  SolutionFile sol_signed;

  World()
      : L(build_layered(parse_monodromy(fixtures::kM036Monodromy))),
        trivial(ObstructionData::trivial(L)),
        signed_obs(ObstructionData::parse(fixtures::kM036SignedObstruction, L)),
        sol_trivial(parse_solution(fixtures::kM036TrivialSolution)),
        sol_signed(parse_solution(fixtures::kM036SignedSolution)) {}
};

World& world() {
  static World w;
  return w;
}

}  // namespace

static void BM_BuildLayered(benchmark::State& state) {
  MappingClass phi = parse_monodromy(fixtures::kM036Monodromy);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_layered(phi));
}
BENCHMARK(BM_BuildLayered);

static void BM_PropagateC(benchmark::State& state) {
  World& w = world();
  for (auto _ : state)
    benchmark::DoNotOptimize(propagate_c(w.sol_trivial.c, w.L, w.trivial));
}
BENCHMARK(BM_PropagateC);

static void BM_Torsion3Reduced(benchmark::State& state) {
  World& w = world();
  for (auto _ : state)
    benchmark::DoNotOptimize(torsion3_reduced(w.sol_trivial.c, w.L, w.trivial));
}
BENCHMARK(BM_Torsion3Reduced);

static void BM_Torsion2Reduced(benchmark::State& state) {
  World& w = world();
  for (auto _ : state)
    benchmark::DoNotOptimize(torsion2_reduced(w.sol_trivial.c, w.L, w.trivial));
}
BENCHMARK(BM_Torsion2Reduced);

static void BM_OneLoop3Full(benchmark::State& state) {
  World& w = world();
  for (auto _ : state)
    benchmark::DoNotOptimize(oneloop3_full(w.sol_signed.c, w.L, w.signed_obs));
}
BENCHMARK(BM_OneLoop3Full);

static void BM_OneLoop2Full(benchmark::State& state) {
  World& w = world();
  for (auto _ : state)
    benchmark::DoNotOptimize(oneloop2_full(w.sol_signed.c, w.L, w.signed_obs));
}
BENCHMARK(BM_OneLoop2Full);

BENCHMARK_MAIN();
