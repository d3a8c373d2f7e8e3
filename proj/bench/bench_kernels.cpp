// Serial reference vs OpenMP version of each parallel kernel.

#include "support/fixtures.hpp"
#include "support/random.hpp"

#include "mak/cli/app.hpp"
#include "mak/initgen.hpp"
#include "mak/kernels.hpp"
#include "mak/plan.hpp"

#include <benchmark/benchmark.h>

namespace {

mak::KripkeStructure random_structure(std::size_t n)
{
    gen::Rng rng(42);
    auto sig = gen::signature(3, 4);
    // keep the out-degree near 8 regardless of size
    return gen::structure(rng, sig, n, 8.0 / static_cast<double>(n));
}

mak::Formula label_formula()
{
    return fixtures::parse("c([a,b], p | k(c, ~q)) | e([a,c], r & ~k(b, s))");
}

void BM_LabelSerial(benchmark::State& state)
{
    const auto m = random_structure(static_cast<std::size_t>(state.range(0)));
    const auto f = label_formula();
    for (auto _ : state)
        benchmark::DoNotOptimize(mak::kernels::label_serial(m, f));
}

void BM_LabelParallel(benchmark::State& state)
{
    const auto m = random_structure(static_cast<std::size_t>(state.range(0)));
    const auto f = label_formula();
    for (auto _ : state)
        benchmark::DoNotOptimize(mak::kernels::label_parallel(m, f));
}

std::vector<std::int64_t> keys(std::size_t n)
{
    gen::Rng rng(7);
    std::vector<std::int64_t> out(n);
    for (auto& k : out)
        k = gen::uniform(rng, 0, static_cast<int>(n / 8));
    return out;
}

void BM_EqualKeySerial(benchmark::State& state)
{
    const auto k = keys(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mak::kernels::equal_key_successors_serial(k));
}

void BM_EqualKeyParallel(benchmark::State& state)
{
    const auto k = keys(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mak::kernels::equal_key_successors_parallel(k));
}

template <mak::Execution E>
void BM_Partition(benchmark::State& state)
{
    const auto d = mak::cli::sum_product_domain(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(mak::generate_partition(d.agents, d.universe, E));
}

// an unreachable goal makes bfs expand every layer up to the bound
template <mak::Execution E>
void BM_Breadth(benchmark::State& state)
{
    const auto d = fixtures::coin_ground();
    const mak::PlanRequest r{fixtures::coin_model(d.signature), &d, fixtures::parse("tail & ~tail"),
                             static_cast<std::size_t>(state.range(0)), mak::Strategy::bfs, true, E};
    for (auto _ : state)
        benchmark::DoNotOptimize(mak::breadth_plan(r));
}

} // namespace

BENCHMARK(BM_LabelSerial)->Arg(1024)->Arg(8192)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LabelParallel)->Arg(1024)->Arg(8192)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EqualKeySerial)->Arg(2352)->Arg(8192)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EqualKeyParallel)->Arg(2352)->Arg(8192)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Partition<mak::Execution::serial>)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Partition<mak::Execution::parallel>)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Breadth<mak::Execution::serial>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Breadth<mak::Execution::parallel>)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
