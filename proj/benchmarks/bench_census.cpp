#include <benchmark/benchmark.h>

#include <memory>

#include "mrr/cayley.hpp"
#include "mrr/census.hpp"
#include "mrr/mapauto.hpp"

namespace {

mrr::GroupPtr make(const char* spec) {
  return std::make_shared<const mrr::FiniteGroup>(mrr::builtin(spec));
}

void BM_MrrKernel(benchmark::State& state) {
  const auto g = make("cyclic:12");
  mrr::MrrKernel kernel(*g);
  std::vector<mrr::Index> cycle;
  for (mrr::Index x = 1; x < 12; ++x) cycle.push_back(x);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel.is_mrr(cycle));
    std::next_permutation(cycle.begin() + 1, cycle.end());
  }
}
BENCHMARK(BM_MrrKernel);

void BM_CensusCyclic8(benchmark::State& state) {
  const auto g = make("cyclic:8");
  for (auto _ : state) {
    benchmark::DoNotOptimize(mrr::exhaustive_census(g, {.shards = 1}).mrr_count);
  }
}
BENCHMARK(BM_CensusCyclic8)->Unit(benchmark::kMillisecond);

void BM_StabilizerDihedral4(benchmark::State& state) {
  const auto g = make("dihedral:4");
  const mrr::MapIndex index(g);
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mrr::stabilizer_of_identity(index.at(i)).order);
    i = (i + 1) % index.total();
  }
}
BENCHMARK(BM_StabilizerDihedral4);

void BM_SampleCyclic64(benchmark::State& state) {
  const auto g = make("cyclic:64");
  for (auto _ : state) {
    benchmark::DoNotOptimize(mrr::estimate_fraction(g, 1000, 0, 0.95, 1).mrr_hits);
  }
}
BENCHMARK(BM_SampleCyclic64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
