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

#include "bridgeness/centrality.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace bridgeness {

namespace {

kernels::OrderedSums accumulate(const Graph& g, const CentralityOptions& options) {
    const int workers = resolve_workers(options);
    if (workers == 1) return kernels::accumulate_serial(g);
    return kernels::accumulate_parallel(g, workers);
}

}  // namespace

int resolve_workers(const CentralityOptions& options) {
    if (options.workers > 0) return options.workers;
    if (const char* env = std::getenv("BRIDGENESS_WORKERS")) {
        try {
            const int w = std::stoi(env);
            if (w > 0) return w;
        } catch (const std::exception&) {
        }
    }
    return std::max(1, omp_get_max_threads());
}

std::vector<double> betweenness(const Graph& g, const CentralityOptions& options) {
    auto sums = accumulate(g, options);
    for (auto& x : sums.bc) x /= 2.0;
    return std::move(sums.bc);
}

CentralityResult bridgeness_exact(const Graph& g, const CentralityOptions& options) {
    const auto sums = accumulate(g, options);
    const std::size_t n = g.node_count();
    CentralityResult r;
    r.bc.resize(n);
    r.bridgeness.resize(n);
    r.local.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        // Ordered local term: pairs with a source in N(j), plus the mirror
        // image with a target in N(j), minus pairs counted on both sides.
        const double bc = sums.bc[j] / 2.0;
        const double local = sums.near[j] - sums.pairs[j] / 2.0;
        const double bri = std::clamp(bc - local, 0.0, bc);
        r.bc[j] = bc;
        r.bridgeness[j] = bri;
        r.local[j] = bc - bri;
    }
    return r;
}

std::vector<double> bridgeness_si_compat(const Graph& g, const CentralityOptions& options) {
    auto sums = accumulate(g, options);
    for (auto& x : sums.far) x /= 2.0;
    return std::move(sums.far);
}

CentralityResult bridgeness_bruteforce(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::int32_t> dist(n * n, -1);
    std::vector<double> sigma(n * n, 0.0);
    std::vector<NodeId> queue;
    queue.reserve(n);
    for (NodeId s = 0; s < n; ++s) {
        auto* d = &dist[s * n];
        auto* c = &sigma[s * n];
        d[s] = 0;
        c[s] = 1.0;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId v = queue[head];
            for (NodeId w : g.neighbors(v)) {
                if (d[w] < 0) {
                    d[w] = d[v] + 1;
                    queue.push_back(w);
                }
                if (d[w] == d[v] + 1) c[w] += c[v];
            }
        }
    }

    CentralityResult r;
    r.bc.assign(n, 0.0);
    r.bridgeness.assign(n, 0.0);
    r.local.assign(n, 0.0);
    std::vector<char> is_neighbor(n, 0);
    for (NodeId j = 0; j < n; ++j) {
        for (NodeId v : g.neighbors(j)) is_neighbor[v] = 1;
        const auto* dj = &dist[j * n];
        const auto* sj = &sigma[j * n];
        for (NodeId i = 0; i < n; ++i) {
            if (i == j || dj[i] < 0) continue;
            const auto* di = &dist[i * n];
            const auto* si = &sigma[i * n];
            for (NodeId k = i + 1; k < n; ++k) {
                if (k == j || di[k] < 0 || dj[k] < 0) continue;
                if (dj[i] + dj[k] != di[k]) continue;
                const double frac = sj[i] * sj[k] / si[k];
                r.bc[j] += frac;
                if (!is_neighbor[i] && !is_neighbor[k])
                    r.bridgeness[j] += frac;
                else
                    r.local[j] += frac;
            }
        }
        for (NodeId v : g.neighbors(j)) is_neighbor[v] = 0;
    }
    return r;
}

std::map<std::size_t, double> locterm_by_degree(const CentralityResult& result, const Graph& g) {
    if (result.size() != g.node_count())
        throw std::invalid_argument("centrality result does not match graph");
    std::map<std::size_t, std::pair<double, std::size_t>> acc;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (!(result.bc[v] > 0.0)) continue;
        auto& [sum, count] = acc[g.degree_unchecked(v)];
        sum += result.local[v] / result.bc[v];
        ++count;
    }
    std::map<std::size_t, double> out;
    for (const auto& [k, sc] : acc) out.emplace(k, sc.first / static_cast<double>(sc.second));
    return out;
}

}  // namespace bridgeness
