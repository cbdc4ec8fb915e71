#include <benchmark/benchmark.h>

#include <cstdint>

#include "doxa/bisim.hpp"
#include "doxa/frames.hpp"
#include "doxa/generator.hpp"
#include "doxa/parser.hpp"
#include "doxa/semantics.hpp"
#include "doxa/translate.hpp"

namespace {

using namespace doxa;

BeliefModel bench_model(int worlds, int agents, std::uint64_t seed) {
  GeneratorConfig cfg;
  cfg.worlds = worlds;
  cfg.agents = agents;
  cfg.density = 0.3;
  cfg.seed = seed;
  return generate_model(cfg);
}

void BM_MaxConsistentSubgroups(benchmark::State& state) {
  const int agents = static_cast<int>(state.range(0));
  BeliefModel m = bench_model(8, agents, 11);
  const Group g = m.all_agents();
  for (auto _ : state)
    for (int w = 0; w < m.world_count(); ++w)
      benchmark::DoNotOptimize(m.max_consistent_subgroups(g, w));
}
BENCHMARK(BM_MaxConsistentSubgroups)->Arg(4)->Arg(6)->Arg(8);

void BM_CautiousEvaluation(benchmark::State& state) {
  BeliefModel m = bench_model(static_cast<int>(state.range(0)), 4, 23);
  FormulaPtr f = parse_formula("DC{a,b,c,d}(p -> DC{a,b}q)");
  for (auto _ : state) {
    Evaluator ev(m);
    benchmark::DoNotOptimize(ev.extension(f));
  }
}
BENCHMARK(BM_CautiousEvaluation)->Arg(8)->Arg(16)->Arg(32);

void BM_TranslatedEvaluation(benchmark::State& state) {
  BeliefModel m = bench_model(static_cast<int>(state.range(0)), 4, 23);
  FormulaPtr f = cautious_to_d(parse_formula("DC{a,b,c,d}(p -> DC{a,b}q)"));
  for (auto _ : state) {
    Evaluator ev(m);
    benchmark::DoNotOptimize(ev.extension(f));
  }
}
BENCHMARK(BM_TranslatedEvaluation)->Arg(8)->Arg(16)->Arg(32);

void BM_CautiousElimination(benchmark::State& state) {
  FormulaPtr f = parse_formula("DC{a,b,c}(p -> DC{a,b,c}(q -> DC{a,b}r))");
  for (auto _ : state) benchmark::DoNotOptimize(cautious_to_d(f));
}
BENCHMARK(BM_CautiousElimination);

void BM_GreatestBisim(benchmark::State& state) {
  const int worlds = static_cast<int>(state.range(0));
  BeliefModel left = bench_model(worlds, 3, 31);
  BeliefModel right = bench_model(worlds, 3, 37);
  for (auto _ : state)
    benchmark::DoNotOptimize(greatest_bisim(left, right, BisimKind::BoldV2));
}
BENCHMARK(BM_GreatestBisim)->Arg(8)->Arg(12)->Arg(16);

void BM_NeighbourhoodCheck(benchmark::State& state) {
  BeliefModel m = bench_model(static_cast<int>(state.range(0)), 3, 41);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        check_neighbourhood(m, NbSubject::GroupOf(m.all_agents()), NbCond::TransitiveN));
}
BENCHMARK(BM_NeighbourhoodCheck)->Arg(8)->Arg(10)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
