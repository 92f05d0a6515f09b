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

#include <omp.h>

#include <algorithm>

#include "brandes_sweep.hpp"

namespace bridgeness::kernels {

namespace {

void add_into(std::vector<double>& dst, const std::vector<double>& src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
}

}  // namespace

OrderedSums accumulate_parallel(const Graph& g, int workers) {
    const std::size_t n = g.node_count();
    workers = std::max(1, workers);
    std::vector<OrderedSums> partial(static_cast<std::size_t>(workers));

    // Chunked static schedule: the source -> thread mapping depends only on
    // the worker count, which fixes the summation order of every partial.
#pragma omp parallel num_threads(workers)
    {
        const int tid = omp_get_thread_num();
        auto local = detail::zero_sums(n);
        detail::SweepState state(n);
#pragma omp for schedule(static, 16)
        for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s)
            detail::sweep(g, static_cast<NodeId>(s), state, local);
        partial[static_cast<std::size_t>(tid)] = std::move(local);
    }

    auto sums = detail::zero_sums(n);
    for (const auto& p : partial) {
        if (p.bc.empty()) continue;  // thread team smaller than requested
        add_into(sums.bc, p.bc);
        add_into(sums.near, p.near);
        add_into(sums.pairs, p.pairs);
        add_into(sums.far, p.far);
    }
    return sums;
}

}  // namespace bridgeness::kernels
