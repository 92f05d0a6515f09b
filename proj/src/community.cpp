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

#include "bridgeness/community.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>

namespace bridgeness {

namespace {

// Weighted graph used between aggregation levels. `loop[i]` is the weight of
// edges folded inside supernode i; `strength[i]` counts it twice.
struct LevelGraph {
    std::vector<std::vector<std::pair<std::size_t, double>>> adj;
    std::vector<double> loop;
    std::vector<double> strength;
    double total = 0.0;  // sum of strengths, i.e. 2m

    std::size_t size() const { return adj.size(); }
};

LevelGraph level_from(const Graph& g) {
    LevelGraph lg;
    const std::size_t n = g.node_count();
    lg.adj.resize(n);
    lg.loop.assign(n, 0.0);
    lg.strength.assign(n, 0.0);
    for (NodeId v = 0; v < n; ++v) {
        for (NodeId w : g.neighbors(v)) lg.adj[v].emplace_back(w, 1.0);
        lg.strength[v] = static_cast<double>(g.degree_unchecked(v));
    }
    lg.total = 2.0 * static_cast<double>(g.edge_count());
    return lg;
}

// One round of local moving. Returns true if any node changed community.
bool move_nodes(const LevelGraph& lg, std::vector<std::size_t>& community, std::mt19937_64& rng) {
    const std::size_t n = lg.size();
    std::vector<double> tot(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) tot[community[i]] += lg.strength[i];

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<double> link_to(n, 0.0);
    std::vector<std::size_t> candidates;
    const double eps = 1e-12 * lg.total;
    bool any_move = false;
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i : order) {
            const std::size_t own = community[i];
            const double k = lg.strength[i];

            candidates.clear();
            candidates.push_back(own);
            for (auto [j, w] : lg.adj[i]) {
                if (j == i) continue;
                const std::size_t c = community[j];
                if (link_to[c] == 0.0 && c != own) candidates.push_back(c);
                link_to[c] += w;
            }
            tot[own] -= k;

            auto gain = [&](std::size_t c) { return link_to[c] - tot[c] * k / lg.total; };
            std::size_t best = own;
            double best_gain = gain(own);
            std::sort(candidates.begin() + 1, candidates.end());
            for (std::size_t idx = 1; idx < candidates.size(); ++idx) {
                const double gc = gain(candidates[idx]);
                if (gc > best_gain + eps) {
                    best = candidates[idx];
                    best_gain = gc;
                }
            }
            // Best alternative must beat staying; among equal alternatives the
            // lowest label was kept above.
            tot[best] += k;
            if (best != own) {
                community[i] = best;
                improved = true;
                any_move = true;
            }
            for (auto c : candidates) link_to[c] = 0.0;
        }
    }
    return any_move;
}

// Renumbers community ids densely by first appearance; returns the count.
std::size_t renumber(std::vector<std::size_t>& community) {
    std::vector<std::size_t> map(community.size(), std::numeric_limits<std::size_t>::max());
    std::size_t next = 0;
    for (auto& c : community) {
        if (map[c] == std::numeric_limits<std::size_t>::max()) map[c] = next++;
        c = map[c];
    }
    return next;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<std::size_t>& community,
                     std::size_t count) {
    LevelGraph out;
    out.adj.resize(count);
    out.loop.assign(count, 0.0);
    out.strength.assign(count, 0.0);
    out.total = lg.total;
    std::vector<std::unordered_map<std::size_t, double>> acc(count);
    for (std::size_t i = 0; i < lg.size(); ++i) {
        const std::size_t ci = community[i];
        out.loop[ci] += lg.loop[i];
        out.strength[ci] += lg.strength[i];
        for (auto [j, w] : lg.adj[i]) {
            const std::size_t cj = community[j];
            if (ci == cj)
                out.loop[ci] += w / 2.0;  // each internal edge seen from both ends
            else
                acc[ci][cj] += w;
        }
    }
    for (std::size_t c = 0; c < count; ++c) {
        out.adj[c].assign(acc[c].begin(), acc[c].end());
        std::sort(out.adj[c].begin(), out.adj[c].end());
    }
    return out;
}

// Kuhn-Munkres on a square cost matrix (minimization). Returns the column
// assigned to each row.
std::vector<std::size_t> hungarian(const std::vector<std::vector<double>>& cost) {
    const std::size_t n = cost.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<std::size_t> assignment(n, 0);
    for (std::size_t j = 1; j <= n; ++j)
        if (p[j] != 0) assignment[p[j] - 1] = j - 1;
    return assignment;
}

}  // namespace

double modularity(const Graph& g, const Partition& p) {
    require_covers(g, p);
    if (g.edge_count() == 0) throw ValidationError("modularity is undefined for a graph without edges");
    const std::size_t c = p.community_count();
    std::vector<double> internal(c, 0.0), degree_sum(c, 0.0);
    for (auto [u, v] : g.edges())
        if (p[u] == p[v]) internal[p[u]] += 1.0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        degree_sum[p[v]] += static_cast<double>(g.degree_unchecked(v));
    const double m = static_cast<double>(g.edge_count());
    double q = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
        const double share = degree_sum[i] / (2.0 * m);
        q += internal[i] / m - share * share;
    }
    return q;
}

LouvainResult louvain_detailed(const Graph& g, const LouvainConfig& cfg) {
    if (cfg.max_passes < 1) throw std::invalid_argument("max_passes must be >= 1");
    if (!(cfg.min_gain > 0.0)) throw std::invalid_argument("min_gain must be positive");
    if (g.edge_count() == 0) throw ValidationError("louvain needs at least one edge");

    const std::size_t n = g.node_count();
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::size_t> flat(n);
    std::iota(flat.begin(), flat.end(), 0);

    LouvainResult result;
    result.partition = Partition::from_labels(flat);
    result.pass_modularity.push_back(modularity(g, result.partition));

    LevelGraph level = level_from(g);
    for (int pass = 0; pass < cfg.max_passes; ++pass) {
        std::vector<std::size_t> community(level.size());
        std::iota(community.begin(), community.end(), 0);
        if (!move_nodes(level, community, rng)) break;
        const std::size_t count = renumber(community);

        for (auto& c : flat) c = community[c];
        auto candidate = Partition::from_labels(flat);
        const double q = modularity(g, candidate);
        const double gain = q - result.pass_modularity.back();
        result.partition = std::move(candidate);
        result.pass_modularity.push_back(q);
        if (gain < cfg.min_gain || count == level.size()) break;
        level = aggregate(level, community, count);
    }
    return result;
}

double matched_agreement(const Partition& found, const Partition& truth) {
    if (found.node_count() != truth.node_count())
        throw std::invalid_argument("partitions cover different node counts");
    const std::size_t n = found.node_count();
    if (n == 0) return 1.0;
    const std::size_t size = std::max(found.community_count(), truth.community_count());
    std::vector<std::vector<double>> cost(size, std::vector<double>(size, 0.0));
    for (std::size_t v = 0; v < n; ++v) cost[found[v]][truth[v]] -= 1.0;
    const auto assignment = hungarian(cost);
    double matched = 0.0;
    for (std::size_t r = 0; r < size; ++r) matched -= cost[r][assignment[r]];
    return matched / static_cast<double>(n);
}

}  // namespace bridgeness
