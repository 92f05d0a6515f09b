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

#pragma once

#include <cstdint>
#include <vector>

#include "bridgeness/centrality.hpp"

namespace bridgeness::kernels::detail {

// Scratch space for one single-source sweep. Reused across sources; only the
// entries touched by the previous BFS are reset.
struct SweepState {
    explicit SweepState(std::size_t n) : dist(n, -1), sigma(n, 0.0), delta(n, 0.0) {
        order.reserve(n);
    }

    std::vector<std::int32_t> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<NodeId> order;  // BFS visit order, non-decreasing distance
};

// Brandes BFS from `s` followed by dependency accumulation. Predecessors are
// recovered from the CSR adjacency (neighbors at distance d-1) instead of
// being stored. Adds this source's contributions to `out`.
inline void sweep(const Graph& g, NodeId s, SweepState& st, OrderedSums& out) {
    for (NodeId v : st.order) {
        st.dist[v] = -1;
        st.sigma[v] = 0.0;
        st.delta[v] = 0.0;
    }
    st.order.clear();

    st.dist[s] = 0;
    st.sigma[s] = 1.0;
    st.order.push_back(s);
    for (std::size_t head = 0; head < st.order.size(); ++head) {
        const NodeId v = st.order[head];
        const std::int32_t dv = st.dist[v];
        for (NodeId w : g.neighbors(v)) {
            if (st.dist[w] < 0) {
                st.dist[w] = dv + 1;
                st.order.push_back(w);
            }
            if (st.dist[w] == dv + 1) st.sigma[w] += st.sigma[v];
        }
    }

    for (auto it = st.order.rbegin(); it != st.order.rend(); ++it) {
        const NodeId w = *it;
        const std::int32_t dw = st.dist[w];
        if (dw == 0) break;
        const double coeff = (1.0 + st.delta[w]) / st.sigma[w];
        for (NodeId v : g.neighbors(w)) {
            if (st.dist[v] == dw - 1) {
                st.delta[v] += st.sigma[v] * coeff;
                // t = w at distance 2 and v a common neighbor of s and t:
                // the path s-v-w is one of sigma[w] shortest paths.
                if (dw == 2) out.pairs[v] += 1.0 / st.sigma[w];
            }
        }
        out.bc[w] += st.delta[w];
        if (dw == 1)
            out.near[w] += st.delta[w];
        else
            out.far[w] += st.delta[w];
    }
}

inline OrderedSums zero_sums(std::size_t n) {
    return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
            std::vector<double>(n, 0.0)};
}

}  // namespace bridgeness::kernels::detail
