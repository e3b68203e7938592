#include <benchmark/benchmark.h>

#include "vkdim/bounds.hpp"
#include "vkdim/config_space.hpp"
#include "vkdim/obstruction.hpp"
#include "vkdim/octa.hpp"
#include "zoo.hpp"

using namespace vkdim;

namespace {

void BM_ConfigurationSpace(benchmark::State& state)
{
    const auto ol = octahedralize(tools::generate("cycle(" + std::to_string(state.range(0)) + ")"));
    for (auto _ : state) {
        ConfigurationSpace c(ol.complex(), 1, 2);
        benchmark::DoNotOptimize(c.size());
    }
}
BENCHMARK(BM_ConfigurationSpace)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_CertifyNonvanishing(benchmark::State& state)
{
    const auto l = tools::generate("octahedron_boundary(2)");
    for (auto _ : state) benchmark::DoNotOptimize(certify_nonvanishing(l, 2));
}
BENCHMARK(BM_CertifyNonvanishing)->Unit(benchmark::kMillisecond);

void BM_CertifyVanishing(benchmark::State& state)
{
    const auto l = tools::generate("path(" + std::to_string(state.range(0)) + ")");
    for (auto _ : state) benchmark::DoNotOptimize(certify_vanishing(l));
}
BENCHMARK(BM_CertifyVanishing)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_AnalyzeZoo(benchmark::State& state)
{
    std::vector<SimplicialComplex> zoo;
    for (const auto& e : tools::zoo_catalog()) zoo.push_back(tools::generate(e.expression));
    for (auto _ : state) {
        for (const auto& l : zoo) benchmark::DoNotOptimize(analyze(l));
    }
}
BENCHMARK(BM_AnalyzeZoo)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
