// Serial reference (jobs = 1) against the OpenMP path of the sharded kernels.
// Results are identical by construction; only wall time differs.
#include "bergecov/experiments.hpp"
#include "bergecov/lagrangian.hpp"
#include "bergecov/random.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace bergecov;

namespace {

void Remark5(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(remark5_experiment(static_cast<int>(state.range(0))).checked);
}

void Sweep5(benchmark::State & state)
{
    SweepOptions o;
    o.n = 5;
    o.jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank3_sweep(o).instances);
}

void ConjectureRandom(benchmark::State & state)
{
    ConjectureOptions o;
    o.k = 5;
    o.n = 7;
    o.mode = SearchMode::Random;
    o.budget = 4096;
    o.jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(conjecture_search(o).checked);
}

void MaximizeRestarts(benchmark::State & state)
{
    auto rng = instance_rng(3, 0);
    auto h = random_covering_uniform(12, 3, rng, 0.3);
    MaximizeOptions o;
    o.restarts = 64;
    o.jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(maximize(h, o).value);
}

void threads(benchmark::internal::Benchmark * b)
{
    b->Arg(1);
    if (omp_get_max_threads() > 1)
        b->Arg(omp_get_max_threads());
    b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}

BENCHMARK(Remark5)->Apply(threads);
BENCHMARK(Sweep5)->Apply(threads);
BENCHMARK(ConjectureRandom)->Apply(threads);
BENCHMARK(MaximizeRestarts)->Apply(threads);

BENCHMARK_MAIN();
