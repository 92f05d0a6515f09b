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

#include "bridgeness/netgen.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "bridgeness/stats.hpp"

namespace bridgeness {

namespace {

constexpr std::size_t default_max_degree = 50;

std::uint64_t key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Continuous power law x^-gamma truncated to [lo, hi].
struct TruncatedPowerLaw {
    double gamma, lo, hi;

    double mean() const {
        if (hi - lo < 1e-12) return lo;
        return moment(2.0 - gamma) / moment(1.0 - gamma);
    }

    double sample(double u) const {
        if (hi - lo < 1e-12) return lo;
        const double e = 1.0 - gamma;
        if (std::abs(e) < 1e-12) return lo * std::pow(hi / lo, u);
        const double a = std::pow(lo, e), b = std::pow(hi, e);
        return std::pow(a + u * (b - a), 1.0 / e);
    }

private:
    // integral of x^(e-1) over [lo, hi]
    double moment(double e) const {
        if (std::abs(e) < 1e-12) return std::log(hi / lo);
        return (std::pow(hi, e) - std::pow(lo, e)) / e;
    }
};

struct ResolvedDegrees {
    double lo;
    std::size_t hi;
};

std::size_t smallest_community(const LfrConfig& cfg) { return cfg.nodes / cfg.communities; }

ResolvedDegrees resolve_degrees(const LfrConfig& cfg) {
    const std::size_t room = smallest_community(cfg) - 1;
    std::size_t hi = cfg.max_degree.value_or(std::min(default_max_degree, room));
    if (hi < 1) throw InfeasibleConfig("communities of size " + std::to_string(room + 1) +
                                       " cannot hold any internal edge");
    if (hi > room)
        throw InfeasibleConfig("max_degree " + std::to_string(hi) +
                               " exceeds smallest community size minus one (" +
                               std::to_string(room) + ")");
    if (cfg.min_degree) {
        if (*cfg.min_degree < 1.0 || *cfg.min_degree > static_cast<double>(hi))
            throw InfeasibleConfig("min_degree must lie in [1, max_degree]");
        return {*cfg.min_degree, hi};
    }

    const double target = cfg.mean_degree;
    const double top = static_cast<double>(hi);
    const TruncatedPowerLaw widest{cfg.degree_exponent, 1.0, top};
    if (target > top || target < widest.mean())
        throw InfeasibleConfig("mean_degree " + std::to_string(target) +
                               " is unreachable with degrees in [1, " + std::to_string(hi) + "]");
    double a = 1.0, b = top;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (TruncatedPowerLaw{cfg.degree_exponent, mid, top}.mean() < target)
            a = mid;
        else
            b = mid;
    }
    return {0.5 * (a + b), hi};
}

// Mutable edge store used while wiring and rewiring.
struct Wiring {
    explicit Wiring(std::size_t n) : adj(n) {}

    std::vector<std::vector<NodeId>> adj;
    std::unordered_set<std::uint64_t> edges;

    bool has(NodeId u, NodeId v) const { return edges.count(key(u, v)) != 0; }
    void add(NodeId u, NodeId v) {
        edges.insert(key(u, v));
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    void remove(NodeId u, NodeId v) {
        edges.erase(key(u, v));
        erase_one(adj[u], v);
        erase_one(adj[v], u);
    }

private:
    static void erase_one(std::vector<NodeId>& list, NodeId x) {
        auto it = std::find(list.begin(), list.end(), x);
        *it = list.back();
        list.pop_back();
    }
};

// Configuration-model wiring of one community. Self-loops and multi-edges
// from the stub matching are repaired by double-edge swaps with existing
// edges; stubs that stay unmatched are dropped. Returns the dropped count.
std::size_t wire_community(const std::vector<NodeId>& members, const std::vector<std::size_t>& degree,
                           Wiring& w, std::mt19937_64& rng) {
    std::vector<NodeId> stubs;
    for (NodeId v : members) stubs.insert(stubs.end(), degree[v], v);
    std::shuffle(stubs.begin(), stubs.end(), rng);

    std::vector<Edge> local;
    std::vector<Edge> bad;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const NodeId a = stubs[i], b = stubs[i + 1];
        if (a == b || w.has(a, b)) {
            bad.emplace_back(a, b);
        } else {
            w.add(a, b);
            local.emplace_back(a, b);
        }
    }

    std::size_t dropped = 0;
    constexpr int swap_attempts = 1000;
    for (auto [a, b] : bad) {
        bool fixed = false;
        for (int t = 0; t < swap_attempts && !local.empty(); ++t) {
            const std::size_t idx = std::uniform_int_distribution<std::size_t>(0, local.size() - 1)(rng);
            auto [x, y] = local[idx];
            if (rng() & 1) std::swap(x, y);
            // (a,b) + (x,y) -> (a,x) + (b,y)
            if (a == x || b == y) continue;
            if (key(a, x) == key(b, y)) continue;
            if (w.has(a, x) || w.has(b, y)) continue;
            w.remove(x, y);
            local[idx] = {a, x};
            local.emplace_back(b, y);
            w.add(a, x);
            w.add(b, y);
            fixed = true;
            break;
        }
        if (!fixed) dropped += 2;
    }
    return dropped;
}

}  // namespace

void validate(const LfrConfig& cfg) {
    if (cfg.communities < 1) throw InfeasibleConfig("need at least one community");
    if (cfg.nodes < cfg.communities) throw InfeasibleConfig("nodes must be >= communities");
    if (!(cfg.mu >= 0.0 && cfg.mu < 1.0)) throw InfeasibleConfig("mu must lie in [0, 1)");
    if (cfg.mu > 0.0 && cfg.communities < 2)
        throw InfeasibleConfig("mu > 0 needs at least two communities");
    if (!(cfg.degree_exponent > 1.0)) throw InfeasibleConfig("degree_exponent must exceed 1");
    if (!(cfg.mean_degree > 0.0)) throw InfeasibleConfig("mean_degree must be positive");
    if (cfg.nodes > std::numeric_limits<NodeId>::max()) throw InfeasibleConfig("too many nodes");
    resolve_degrees(cfg);
}

GeneratedNetwork generate(const LfrConfig& cfg) {
    validate(cfg);
    const auto [lo, hi] = resolve_degrees(cfg);
    const std::size_t n = cfg.nodes;
    const std::size_t c = cfg.communities;
    std::mt19937_64 rng(cfg.seed);

    // Balanced community sizes, members assigned in random order.
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> label(n);
    std::vector<std::vector<NodeId>> members(c);
    {
        std::size_t pos = 0;
        for (std::size_t k = 0; k < c; ++k) {
            const std::size_t size = n / c + (k < n % c ? 1 : 0);
            for (std::size_t i = 0; i < size; ++i, ++pos) {
                label[perm[pos]] = k;
                members[k].push_back(perm[pos]);
            }
        }
        for (auto& m : members) std::sort(m.begin(), m.end());
    }

    GeneratedNetwork net;
    const TruncatedPowerLaw law{cfg.degree_exponent, lo, static_cast<double>(hi)};
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    net.target_degrees.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        const double x = std::round(law.sample(unit(rng)));
        net.target_degrees[v] = static_cast<std::size_t>(std::clamp(x, 1.0, static_cast<double>(hi)));
    }
    for (const auto& m : members) {
        std::size_t stubs = 0;
        for (NodeId v : m) stubs += net.target_degrees[v];
        if (stubs % 2 == 0) continue;
        // Fix parity on a random member that has room to grow (or shrink).
        std::vector<NodeId> order(m);
        std::shuffle(order.begin(), order.end(), rng);
        auto grow = std::find_if(order.begin(), order.end(),
                                 [&](NodeId v) { return net.target_degrees[v] < hi; });
        if (grow != order.end())
            ++net.target_degrees[*grow];
        else
            --net.target_degrees[order.front()];
    }

    // Phase 1: disconnected communities.
    Wiring w(n);
    for (const auto& m : members) net.dropped_stubs += wire_community(m, net.target_degrees, w, rng);

    // Phase 2: convert internal links into bridges until the mixing target is met.
    const std::size_t total = w.edges.size();
    const auto target_inter = static_cast<std::size_t>(std::ceil(cfg.mu * static_cast<double>(total) - 1e-9));

    std::vector<std::size_t> intra_degree(n, 0);
    std::vector<Edge> intra_edges;
    std::unordered_map<std::uint64_t, std::size_t> intra_index;
    for (NodeId v = 0; v < n; ++v) {
        intra_degree[v] = w.adj[v].size();
        for (NodeId u : w.adj[v])
            if (v < u) {
                intra_index.emplace(key(v, u), intra_edges.size());
                intra_edges.emplace_back(v, u);
            }
    }
    std::vector<NodeId> eligible;
    std::vector<std::size_t> eligible_pos(n, SIZE_MAX);
    for (NodeId v = 0; v < n; ++v)
        if (intra_degree[v] > 0) {
            eligible_pos[v] = eligible.size();
            eligible.push_back(v);
        }
    auto drop_intra = [&](NodeId a, NodeId b) {
        const auto it = intra_index.find(key(a, b));
        const std::size_t idx = it->second;
        intra_index.erase(it);
        if (idx + 1 != intra_edges.size()) {
            intra_edges[idx] = intra_edges.back();
            intra_index[key(intra_edges[idx].first, intra_edges[idx].second)] = idx;
        }
        intra_edges.pop_back();
        for (NodeId x : {a, b}) {
            if (--intra_degree[x] > 0) continue;
            const std::size_t pos = eligible_pos[x];
            eligible[pos] = eligible.back();
            eligible_pos[eligible[pos]] = pos;
            eligible.pop_back();
            eligible_pos[x] = SIZE_MAX;
        }
    };

    std::vector<char> rewired(n, 0);
    std::size_t inter = 0;
    std::size_t attempts = 0;
    const std::size_t max_attempts = 50 * total + 1000;
    std::vector<NodeId> internal;
    while (inter < target_inter) {
        if (++attempts > max_attempts)
            throw InfeasibleConfig("mixing target " + std::to_string(cfg.mu) + " not reached after " +
                                   std::to_string(max_attempts) + " selections");
        if (intra_edges.empty())
            throw InfeasibleConfig("no internal links left to rewire at mu " + std::to_string(cfg.mu));

        NodeId v = 0, far = 0;
        if (cfg.selection == RewireSelection::node_uniform) {
            v = eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)];
            internal.clear();
            for (NodeId u : w.adj[v])
                if (label[u] == label[v]) internal.push_back(u);
            far = internal[std::uniform_int_distribution<std::size_t>(0, internal.size() - 1)(rng)];
        } else {
            const auto e = intra_edges[std::uniform_int_distribution<std::size_t>(0, intra_edges.size() - 1)(rng)];
            v = e.first;
            far = e.second;
            if (rng() & 1) std::swap(v, far);
        }

        std::uniform_int_distribution<NodeId> any(0, static_cast<NodeId>(n - 1));
        for (std::size_t t = 0; t < cfg.target_retries; ++t) {
            const NodeId target = any(rng);
            if (label[target] == label[v] || w.has(v, target)) continue;
            w.remove(v, far);
            drop_intra(v, far);
            w.add(v, target);
            rewired[v] = 1;
            ++inter;
            ++net.rewire_steps;
            break;
        }
    }

    std::vector<Edge> edges;
    edges.reserve(w.edges.size());
    for (NodeId v = 0; v < n; ++v)
        for (NodeId u : w.adj[v])
            if (v < u) edges.emplace_back(v, u);
    std::sort(edges.begin(), edges.end());

    net.graph = Graph::from_edges(n, edges);
    net.ground_truth = Partition::from_labels(label);
    net.achieved_mu = total == 0 ? 0.0 : static_cast<double>(inter) / static_cast<double>(total);
    for (NodeId v = 0; v < n; ++v)
        if (rewired[v]) net.rewired_nodes.push_back(v);
    return net;
}

DegreeBias bridge_degree_bias(const GeneratedNetwork& net) {
    if (net.rewired_nodes.empty()) throw std::invalid_argument("network has no rewired nodes");
    const auto& g = net.graph;
    std::vector<double> all(g.node_count()), picked;
    for (NodeId v = 0; v < g.node_count(); ++v) all[v] = static_cast<double>(g.degree_unchecked(v));
    for (NodeId v : net.rewired_nodes) picked.push_back(all[v]);

    const auto test = stats::rank_sum(picked, all);
    return {stats::mean(picked), stats::mean(all), test.u, test.z, test.p_value};
}

LfrConfig read_lfr_config(std::istream& in, LfrConfig cfg, std::vector<std::string>* keys) {
    std::string line;
    std::size_t line_no = 0;
    auto strip = [](std::string s) {
        const auto a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string{};
        const auto b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
        const std::string k = strip(line.substr(0, eq));
        const std::string v = strip(line.substr(eq + 1));
        if (keys) keys->push_back(k == "n" ? "nodes" : k);
        try {
            if (k == "nodes" || k == "n")
                cfg.nodes = std::stoull(v);
            else if (k == "communities")
                cfg.communities = std::stoull(v);
            else if (k == "mu")
                cfg.mu = std::stod(v);
            else if (k == "seed")
                cfg.seed = std::stoull(v);
            else if (k == "degree_exponent")
                cfg.degree_exponent = std::stod(v);
            else if (k == "mean_degree")
                cfg.mean_degree = std::stod(v);
            else if (k == "min_degree")
                cfg.min_degree = std::stod(v);
            else if (k == "max_degree")
                cfg.max_degree = std::stoull(v);
            else if (k == "selection") {
                if (v == "node")
                    cfg.selection = RewireSelection::node_uniform;
                else if (v == "link")
                    cfg.selection = RewireSelection::link_uniform;
                else
                    throw ParseError(line_no, "selection must be 'node' or 'link'");
            } else
                throw ParseError(line_no, "unknown key '" + k + "'");
        } catch (const std::logic_error&) {
            throw ParseError(line_no, "invalid value for '" + k + "'");
        }
    }
    return cfg;
}

}  // namespace bridgeness
