#include <benchmark/benchmark.h>

#include "szlab/szlab.hpp"

using namespace szlab;

namespace {

void BM_OrdinalAdd(benchmark::State& state) {
  const Ordinal a = parse_ordinal("w^(w+1)*3+w^w*2+w^5+7");
  const Ordinal b = parse_ordinal("w^w*4+w^2+1");
  for (auto _ : state) benchmark::DoNotOptimize(add(a, b));
}
BENCHMARK(BM_OrdinalAdd);

void BM_EpsilonArea(benchmark::State& state) {
  // w*k on (0,1/8], then a finite staircase down to 1.
  std::vector<Piece> pieces{{ratio(1, 8), Ordinal::omega_power(Ordinal(1), 2)}};
  for (long i = 2; i <= 8; ++i) pieces.push_back({ratio(i, 8), Ordinal(static_cast<std::uint64_t>(10 - i))});
  const StepFunction g = StepFunction::from_pieces(pieces);
  const Rational eps(1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(epsilon_area(g, eps).area);
}
BENCHMARK(BM_EpsilonArea)->Arg(2)->Arg(4)->Arg(8);

void BM_BuildLevels(benchmark::State& state) {
  const auto levels = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    BDSpace space(BDParams{}, levels);
    benchmark::DoNotOptimize(space.dim(levels));
  }
}
BENCHMARK(BM_BuildLevels)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AntichainCheck(benchmark::State& state) {
  const BDSpace space(BDParams{}, 4);
  std::vector<Rational> e(space.dim(4));
  e[0] = 1;
  const auto x = space.project(2, e);
  for (auto _ : state) {
    TreeValuation g(space, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(antichain_identity_check(g, 2, x).antichain_sum);
  }
}
BENCHMARK(BM_AntichainCheck)->Arg(3)->Arg(10);

}  // namespace
BENCHMARK_MAIN();
