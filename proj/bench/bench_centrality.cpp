/*
Copyright 2026 The Bridgeness Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <cstdint>

#include "bridgeness/centrality.hpp"
#include "bridgeness/netgen.hpp"
#include <map>

using namespace bridgeness;

namespace {

const Graph& lfr(std::size_t n) {
    static std::map<std::size_t, Graph> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        LfrConfig cfg;
        cfg.nodes = n;
        cfg.communities = n / 33;
        it = cache.emplace(n, generate(cfg).graph).first;
    }
    return it->second;
}

void BM_Serial(benchmark::State& state) {
    const auto& g = lfr(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::accumulate_serial(g));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.node_count()));
}

void BM_Parallel(benchmark::State& state) {
    const auto& g = lfr(static_cast<std::size_t>(state.range(0)));
    const int workers = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::accumulate_parallel(g, workers));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.node_count()));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{1000, 4000}, {2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
