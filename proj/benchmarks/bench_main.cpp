#include <benchmark/benchmark.h>

#include "uprod/classification.hpp"
#include "uprod/extending_datum.hpp"
#include "uprod/groups.hpp"
#include "uprod/slot_tensor.hpp"
#ifdef UPROD_BENCH_IO
#include "uprod/io.hpp"
#endif

using namespace uprod;

namespace {

const Field Q = Field::rationals();

/// A4 over its first subgroup of the given order.
ExtendingDatum a4_datum(std::size_t order) {
  const GroupTable a4 = named_group("A4");
  for (const auto& s : subgroups(a4))
    if (s.size() == order) return lift_to_hopf(Q, coset_extending_structure(a4, s).ges);
  throw std::logic_error("no subgroup of that order");
}

void BM_SlotTensorCoassociativity(benchmark::State& state) {
  const Hopf h = group_algebra(Q, named_group("A4"));
  const LinMap& delta = h.bialgebra.coalgebra.delta;
  const std::size_t n = h.bialgebra.dim();
  for (auto _ : state)
    for (Index i = 0; i < n; ++i) {
      SlotTensor t(Q);
      t.put("c", n, i).split("c", delta, {"c1", "c2", "c3"});
      benchmark::DoNotOptimize(t.collect({"c1", "c2", "c3"}));
    }
}
BENCHMARK(BM_SlotTensorCoassociativity);

void BM_CheckConditions(benchmark::State& state) {
  const ExtendingDatum d = a4_datum(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_theorem1(d).all_passed());
}
BENCHMARK(BM_CheckConditions)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BuildUnifiedProduct(benchmark::State& state) {
  const ExtendingDatum d = a4_datum(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_unified_product(d).dim());
}
BENCHMARK(BM_BuildUnifiedProduct)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_EnumerateCocycles(benchmark::State& state) {
  const Hopf a = group_algebra(Q, named_group("S3"));
  const Hopf h = group_algebra(Q, named_group("C4"));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_cocycles(h.bialgebra.coalgebra, h.bialgebra.algebra.unit, a.bialgebra).size());
}
BENCHMARK(BM_EnumerateCocycles)->Unit(benchmark::kMillisecond);

#ifdef UPROD_BENCH_IO
void BM_SerializeRoundTrip(benchmark::State& state) {
  const io::Document doc{Q, a4_datum(2)};
  for (auto _ : state) benchmark::DoNotOptimize(io::serialize(io::parse(io::serialize(doc))).size());
}
BENCHMARK(BM_SerializeRoundTrip)->Unit(benchmark::kMillisecond);
#endif

}  // namespace

BENCHMARK_MAIN();
