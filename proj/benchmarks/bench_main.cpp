#include <benchmark/benchmark.h>

#include "cmon/actions.hpp"
#include "cmon/congruence.hpp"
#include "cmon/embedding.hpp"
#include "cmon/terms.hpp"

namespace {

using namespace cmon;

void BM_CongruenceClosure(benchmark::State& state) {
  const Ada a = power_ada(static_cast<std::size_t>(state.range(0)));
  const ElemId t = a.base.t;
  const auto last = static_cast<ElemId>(a.size() - 1);
  for (auto _ : state) benchmark::DoNotOptimize(congruence_closure(a, {{t, last}}));
}
BENCHMARK(BM_CongruenceClosure)->DenseRange(1, 3);

void BM_MaximalBySearch(benchmark::State& state) {
  const Ada a = power_ada(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_congruences_by_search(a));
}
BENCHMARK(BM_MaximalBySearch)->DenseRange(1, 3);

void BM_CheckCMonoid(benchmark::State& state) {
  const CMonoid cm = functional_c_monoid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_c_monoid(cm));
}
BENCHMARK(BM_CheckCMonoid)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_CheckIdentity(benchmark::State& state) {
  const CMonoid cm = functional_c_monoid(2);
  const Identity id = parse_identity("%a[%b[s, t], %b[u, v]] = %b[%a[s, u], %a[t, v]]");
  const EvalModel m(cm);
  for (auto _ : state) benchmark::DoNotOptimize(check_identity(m, id));
  state.SetItemsProcessed(state.iterations() * 531441);
}
BENCHMARK(BM_CheckIdentity)->Unit(benchmark::kMillisecond);

void BM_Embedding(benchmark::State& state) {
  const CMonoid cm = functional_c_monoid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const Embedding emb = build_embedding(cm);
    benchmark::DoNotOptimize(verify_embedding(cm, emb));
  }
}
BENCHMARK(BM_Embedding)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
