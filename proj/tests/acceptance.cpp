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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any hard criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bridgeness/centrality.hpp"
#include "bridgeness/community.hpp"
#include "bridgeness/evaluation.hpp"
#include "bridgeness/graph.hpp"
#include "bridgeness/indicator.hpp"
#include "bridgeness/netgen.hpp"
#include "bridgeness/stats.hpp"
#include "cli.hpp"
#include "oracle.hpp"

using namespace bridgeness;
using namespace bridgeness::testing;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const char* id, bool ok, const std::string& name, const std::string& detail) {
    std::printf("[%s] %s %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void info(const char* id, const std::string& name, const std::string& detail) {
    std::printf("[INFO] %s %s: %s\n", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max({std::abs(a), std::abs(b), 1e-300}) ||
           std::abs(a - b) < 1e-12;
}

// --- 1 ---------------------------------------------------------------------

void star_identity() {
    bool ok = true;
    std::string detail;
    for (std::size_t k : {3, 5, 10, 50}) {
        const auto r = bridgeness_exact(star_graph(k));
        const double want = static_cast<double>(k * (k - 1) / 2);
        ok = ok && r.bc[0] == want && r.bridgeness[0] == 0.0;
        detail += "k=" + std::to_string(k) + " bc=" + fmt("%g", r.bc[0]) + " bri=" +
                  fmt("%g", r.bridgeness[0]) + "; ";
    }
    report("1", ok, "star identity", detail);
}

// --- 2, 3 ------------------------------------------------------------------

bool invariants_hold(const Graph& g, std::string& why) {
    const auto r = bridgeness_exact(g);
    const auto si = bridgeness_si_compat(g);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        const double tol = 1e-9 * std::max(1.0, r.bc[v]);
        if (std::abs(r.bc[v] - r.bridgeness[v] - r.local[v]) > tol) {
            why = "decomposition at node " + std::to_string(v);
            return false;
        }
        if (r.bridgeness[v] < 0.0 || r.bridgeness[v] > si[v] + tol || si[v] > r.bc[v] + tol) {
            why = "ordering at node " + std::to_string(v);
            return false;
        }
    }
    return true;
}

void oracle_equivalence_and_invariants() {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> nd(5, 100);
    std::uniform_real_distribution<double> pd(0.05, 0.5);
    std::size_t mismatches = 0, disconnected = 0;
    double worst = 0.0;
    bool inv_ok = true;
    std::string why;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = nd(rng);
        const double p = pd(rng);
        const auto g = erdos_renyi(n, p, rng());
        const auto bf = bridgeness_bruteforce(g);
        const auto bc = betweenness(g);
        const auto ex = bridgeness_exact(g);
        for (NodeId v = 0; v < n; ++v) {
            for (auto [a, b] : {std::pair{bc[v], bf.bc[v]}, std::pair{ex.bc[v], bf.bc[v]},
                                std::pair{ex.bridgeness[v], bf.bridgeness[v]}}) {
                if (!close_rel(a, b, 1e-9)) ++mismatches;
                if (b != 0.0) worst = std::max(worst, std::abs(a - b) / std::abs(b));
            }
        }
        if (inv_ok && !invariants_hold(g, why)) inv_ok = false;
    }
    report("2", mismatches == 0, "oracle equivalence",
           "200 graphs, mismatches=" + std::to_string(mismatches) + ", worst rel err=" + fmt("%.3g", worst));

    // Disconnected and special graphs for the invariants.
    std::vector<Graph> extra{path_graph(6), star_graph(7), complete_graph(6), cycle_graph(9),
                             two_triangles_via_bridge(), Graph::from_edges(3, {}),
                             make_graph(6, {{0, 1}, {1, 2}, {3, 4}})};
    std::mt19937_64 sparse(77);
    for (int i = 0; i < 50; ++i) extra.push_back(erdos_renyi(40, 0.03, sparse()));
    for (const auto& g : extra) {
        std::vector<int> comp(g.node_count(), -1);
        int c = 0;
        for (NodeId s = 0; s < g.node_count(); ++s) {
            if (comp[s] >= 0) continue;
            std::vector<NodeId> stack{s};
            comp[s] = c;
            while (!stack.empty()) {
                const NodeId u = stack.back();
                stack.pop_back();
                for (NodeId w : g.neighbors(u))
                    if (comp[w] < 0) comp[w] = c, stack.push_back(w);
            }
            ++c;
        }
        if (c > 1) ++disconnected;
        if (inv_ok && !invariants_hold(g, why)) inv_ok = false;
    }
    report("3", inv_ok, "decomposition and ordering",
           inv_ok ? "257 graphs (" + std::to_string(disconnected) + " disconnected)" : why);
}

// --- 4 ---------------------------------------------------------------------

int run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "bridgeness");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    if (code != 0) std::fprintf(stderr, "%s", err.str().c_str());
    return code;
}

void lfr_reproduction() {
    const fs::path dir = fs::path(BRIDGENESS_TEST_TMP) / "acceptance";
    fs::create_directories(dir);
    const std::string prefix = (dir / "lfr").string();
    const int code = run_cli({"generate", "--n", "1000", "--communities", "30", "--mu", "0.2", "--seed",
                              "1", "--output-prefix", prefix});
    if (code != 0) {
        report("4", false, "LFR reproduction", "generate exited with " + std::to_string(code));
        return;
    }
    std::ifstream ef(prefix + ".edges");
    const auto lg = load_edge_list(ef);
    std::ifstream pf(prefix + ".partition.csv");
    const auto p = load_partition(pf, lg.table);
    const double mu = inter_community_fraction(lg.graph, p);
    const double m = static_cast<double>(lg.graph.edge_count());
    const double mean_k = 2.0 * m / static_cast<double>(lg.graph.node_count());
    const bool ok = mu >= 0.19 && mu <= 0.21 && std::abs(m - 7539.0) <= 0.1 * 7539.0;
    report("4", ok, "LFR reproduction",
           "achieved_mu=" + fmt("%.4f", mu) + " edges=" + fmt("%.0f", m) + " mean degree=" + fmt("%.2f", mean_k));
}

// --- 5, 6, 8c on the LFR family -------------------------------------------

void lfr_family(std::vector<double>& louvain_agreement, bool& monotone) {
    constexpr int seeds = 10;
    double adv = 0.0, adv_smooth = 0.0;
    std::map<std::size_t, std::pair<double, std::size_t>> loc;
    for (int s = 1; s <= seeds; ++s) {
        LfrConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(s);
        const auto net = generate(cfg);
        const auto r = bridgeness_exact(net.graph);
        const auto G = global_indicator(net.graph, net.ground_truth);
        const auto cb = cumulative_ratio_curve(G, r.bc, "bc");
        const auto cr = cumulative_ratio_curve(G, r.bridgeness, "bridgeness");
        adv += curve_advantage(cr, cb);
        adv_smooth += curve_advantage(smooth(cr), smooth(cb));
        for (NodeId v = 0; v < net.graph.node_count(); ++v) {
            if (!(r.bc[v] > 0.0)) continue;
            auto& [sum, count] = loc[net.graph.degree_unchecked(v)];
            sum += r.local[v] / r.bc[v];
            ++count;
        }
        LouvainConfig lc;
        lc.seed = cfg.seed;
        const auto found = louvain_detailed(net.graph, lc);
        for (std::size_t i = 1; i < found.pass_modularity.size(); ++i)
            monotone = monotone && found.pass_modularity[i] >= found.pass_modularity[i - 1] - 1e-12;
        louvain_agreement.push_back(matched_agreement(found.partition, net.ground_truth));
    }
    adv /= seeds;
    adv_smooth /= seeds;
    report("5", adv > 0.0, "ranking advantage",
           "mean curve_advantage(bridgeness, bc)=" + fmt("%.4f", adv) + " (smoothed " + fmt("%.4f", adv_smooth) +
               ") over 10 seeds");
    info("5", "ranking advantage band", std::string(adv >= 0.05 && adv <= 0.10 ? "within" : "outside") +
                                            " the soft 5-10% band");

    std::vector<double> k, l;
    for (const auto& [deg, sc] : loc) {
        k.push_back(static_cast<double>(deg));
        l.push_back(sc.first / static_cast<double>(sc.second));
    }
    const auto c = stats::pearson(k, l);
    report("6", c.r < 0.0 && c.p_value < 0.05, "local-term correlation",
           "pearson r=" + fmt("%.4f", c.r) + " p=" + fmt("%.3g", c.p_value) + " over " +
               std::to_string(c.n) + " degree classes");
}

// --- 7 ---------------------------------------------------------------------

void generator_bias() {
    constexpr int seeds = 20;
    double p_node = 0.0, p_link = 0.0, z_node = 0.0, z_link = 0.0;
    for (int s = 1; s <= seeds; ++s) {
        LfrConfig cfg;
        cfg.seed = static_cast<std::uint64_t>(100 + s);
        const auto unbiased = bridge_degree_bias(generate(cfg));
        cfg.selection = RewireSelection::link_uniform;
        const auto biased = bridge_degree_bias(generate(cfg));
        p_node += unbiased.p_value;
        p_link += biased.p_value;
        z_node += unbiased.z;
        z_link += biased.z;
    }
    p_node /= seeds;
    p_link /= seeds;
    const bool ok = p_node >= 0.01 && p_link < 0.01;
    report("7", ok, "generator unbiasedness",
           "mean p (node selection)=" + fmt("%.3g", p_node) + ", mean p (link selection)=" + fmt("%.3g", p_link) +
               ", mean z " + fmt("%.2f", z_node / seeds) + " / " + fmt("%.2f", z_link / seeds) + " over 20 seeds");
}

// --- 8 ---------------------------------------------------------------------

void louvain_sanity(const std::vector<double>& agreement, bool monotone) {
    std::vector<Edge> e;
    for (NodeId base : {0u, 10u})
        for (NodeId i = 0; i < 10; ++i)
            for (NodeId j = i + 1; j < 10; ++j) e.emplace_back(base + i, base + j);
    e.emplace_back(9, 10);
    const auto g = Graph::from_edges(20, e);
    std::vector<std::size_t> truth(20);
    for (std::size_t i = 10; i < 20; ++i) truth[i] = 1;
    const auto planted = Partition::from_labels(truth);
    bool exact = true;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto r = louvain_detailed(g, {seed});
        exact = exact && r.partition == planted;
        for (std::size_t i = 1; i < r.pass_modularity.size(); ++i)
            monotone = monotone && r.pass_modularity[i] >= r.pass_modularity[i - 1] - 1e-12;
    }
    const double worst = *std::min_element(agreement.begin(), agreement.end());
    report("8", exact && monotone && worst >= 0.95, "louvain sanity",
           std::string("two cliques ") + (exact ? "recovered" : "NOT recovered") + " (20 seeds), modularity " +
               (monotone ? "non-decreasing" : "DECREASED") + ", min LFR agreement=" + fmt("%.3f", worst));
}

}  // namespace

int main() {
    star_identity();
    oracle_equivalence_and_invariants();
    lfr_reproduction();
    std::vector<double> agreement;
    bool monotone = true;
    lfr_family(agreement, monotone);
    generator_bias();
    louvain_sanity(agreement, monotone);
    info("9", "not reproducible", "dataset-specific figures are covered by criteria 1-3 and the report contract");
    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
