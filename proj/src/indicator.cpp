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

#include "bridgeness/indicator.hpp"

#include <algorithm>
#include <cstdint>

namespace bridgeness {

void CommunityLinkMatrix::add_edge(std::size_t a, std::size_t b) {
    ++counts_[a * size_ + b];
    if (a != b) ++counts_[b * size_ + a];
}

std::size_t CommunityLinkMatrix::internal_total() const {
    std::size_t total = 0;
    for (std::size_t a = 0; a < size_; ++a) total += (*this)(a, a);
    return total;
}

std::size_t CommunityLinkMatrix::external_total() const {
    std::size_t total = 0;
    for (std::size_t a = 0; a < size_; ++a)
        for (std::size_t b = a + 1; b < size_; ++b) total += (*this)(a, b);
    return total;
}

CommunityLinkMatrix community_link_matrix(const Graph& g, const Partition& p) {
    require_covers(g, p);
    CommunityLinkMatrix m(p.community_count());
    for (auto [u, v] : g.edges()) m.add_edge(p[u], p[v]);
    return m;
}

std::vector<double> global_indicator(const Graph& g, const Partition& p) {
    const auto links = community_link_matrix(g, p);
    const std::size_t n = g.node_count();
    std::vector<double> G(n, 0.0);

#pragma omp parallel
    {
        std::vector<std::size_t> touched;
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
            const auto v = static_cast<NodeId>(i);
            const std::size_t own = p[v];
            touched.clear();
            for (NodeId w : g.neighbors(v))
                if (p[w] != own) touched.push_back(p[w]);
            std::sort(touched.begin(), touched.end());
            touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
            double sum = 0.0;
            for (auto J : touched) sum += 1.0 / static_cast<double>(links(own, J));
            G[v] = sum;
        }
    }
    return G;
}

double inter_community_fraction(const Graph& g, const Partition& p) {
    require_covers(g, p);
    if (g.edge_count() == 0) return 0.0;
    std::size_t inter = 0;
    for (auto [u, v] : g.edges())
        if (p[u] != p[v]) ++inter;
    return static_cast<double>(inter) / static_cast<double>(g.edge_count());
}

}  // namespace bridgeness
