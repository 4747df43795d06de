#include <benchmark/benchmark.h>

#include "fbranch/canon.hpp"
#include "fbranch/cutfn.hpp"
#include "fbranch/decomp.hpp"
#include "fbranch/generators.hpp"
#include "fbranch/typseq.hpp"

using namespace fbranch;

namespace {

Graph sample(std::size_t n) {
  Rng rng(7);
  return random_graph(n, 0.4, rng);
}

void BM_CutEvaluatorAllCuts(benchmark::State& st) {
  const Graph g = sample(std::size_t(st.range(0)));
  const CutEvaluator ev(g, FamilySelector::primal());
  const std::uint64_t full = (std::uint64_t{1} << g.order()) - 1;
  for (auto _ : st) {
    std::size_t acc = 0;
    for (std::uint64_t x = 1; x < full; x += 3) acc += ev.value(x);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_CutEvaluatorAllCuts)->Arg(8)->Arg(12);

void BM_DpMatch(benchmark::State& st) {
  const Graph g = sample(std::size_t(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(exact_branchwidth_dp(g, FamilySelector::of({Family::Match}), kDpLimit, 1).width);
}
BENCHMARK(BM_DpMatch)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_EnumMatch(benchmark::State& st) {
  const Graph g = sample(std::size_t(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(exact_branchwidth_enum(g, FamilySelector::of({Family::Match})).width);
}
BENCHMARK(BM_EnumMatch)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_TypicalOf(benchmark::State& st) {
  std::mt19937_64 rng(3);
  NatSequence s(std::size_t(st.range(0)));
  for (auto& x : s) x = rng() % 50;
  for (auto _ : st) benchmark::DoNotOptimize(typical_of(s).size());
}
BENCHMARK(BM_TypicalOf)->Arg(64)->Arg(4096);

void BM_CanonicalForm(benchmark::State& st) {
  const Graph g = sample(std::size_t(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->Arg(8)->Arg(12);

}  // namespace
BENCHMARK_MAIN();
