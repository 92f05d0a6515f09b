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

#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "bridgeness/indicator.hpp"
#include "bridgeness/netgen.hpp"

using namespace bridgeness;

namespace {

LfrConfig small(std::uint64_t seed, double mu = 0.2) {
    LfrConfig cfg;
    cfg.nodes = 300;
    cfg.communities = 6;
    cfg.mu = mu;
    cfg.seed = seed;
    cfg.mean_degree = 10;
    return cfg;
}

}  // namespace

TEST(Generate, ZeroMixingHasNoBridges) {
    const auto net = generate(small(1, 0.0));
    EXPECT_EQ(net.rewire_steps, 0u);
    EXPECT_TRUE(net.rewired_nodes.empty());
    EXPECT_EQ(net.achieved_mu, 0.0);
    EXPECT_EQ(inter_community_fraction(net.graph, net.ground_truth), 0.0);
}

TEST(Generate, SameSeedIsIdentical) {
    const auto a = generate(small(9));
    const auto b = generate(small(9));
    EXPECT_TRUE(std::equal(a.graph.edges().begin(), a.graph.edges().end(), b.graph.edges().begin(),
                           b.graph.edges().end()));
    EXPECT_EQ(a.ground_truth, b.ground_truth);
    EXPECT_EQ(a.rewired_nodes, b.rewired_nodes);
    const auto c = generate(small(10));
    EXPECT_FALSE(std::equal(a.graph.edges().begin(), a.graph.edges().end(), c.graph.edges().begin(),
                            c.graph.edges().end()));
}

TEST(Generate, StructuralInvariants) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto cfg = small(seed, 0.3);
        const auto net = generate(cfg);
        const auto& g = net.graph;
        EXPECT_EQ(g.dropped_self_loops(), 0u);
        EXPECT_EQ(g.collapsed_duplicates(), 0u);
        EXPECT_EQ(net.ground_truth.node_count(), cfg.nodes);
        EXPECT_EQ(net.ground_truth.community_count(), cfg.communities);
        EXPECT_DOUBLE_EQ(net.achieved_mu, inter_community_fraction(g, net.ground_truth));
        EXPECT_GE(net.achieved_mu, cfg.mu);
        EXPECT_LE(net.achieved_mu, cfg.mu + 1.0 / static_cast<double>(g.edge_count()) + 1e-12);

        std::vector<std::size_t> sizes(cfg.communities, 0);
        for (NodeId v = 0; v < cfg.nodes; ++v) ++sizes[net.ground_truth[v]];
        for (auto s : sizes) EXPECT_EQ(s, cfg.nodes / cfg.communities);

        std::size_t degree_sum = 0;
        for (NodeId v = 0; v < cfg.nodes; ++v) degree_sum += g.degree_unchecked(v);
        EXPECT_EQ(degree_sum, 2 * g.edge_count());

        std::size_t stubs = 0;
        for (auto k : net.target_degrees) stubs += k;
        EXPECT_EQ(degree_sum + net.dropped_stubs, stubs);
    }
}

TEST(Generate, RewiredNodesAreDistinctSelections) {
    const auto net = generate(small(3));
    EXPECT_TRUE(std::is_sorted(net.rewired_nodes.begin(), net.rewired_nodes.end()));
    EXPECT_EQ(std::adjacent_find(net.rewired_nodes.begin(), net.rewired_nodes.end()),
              net.rewired_nodes.end());
    EXPECT_LE(net.rewired_nodes.size(), net.rewire_steps);
    EXPECT_GT(net.rewired_nodes.size(), 0u);
}

TEST(Generate, InfeasibleConfigs) {
    LfrConfig degenerate;
    degenerate.nodes = 4;
    degenerate.communities = 2;
    degenerate.mu = 0.99;
    EXPECT_THROW(generate(degenerate), InfeasibleConfig);

    auto cfg = small(1);
    cfg.mu = 1.0;
    EXPECT_THROW(validate(cfg), InfeasibleConfig);
    cfg = small(1);
    cfg.communities = 1;
    EXPECT_THROW(validate(cfg), InfeasibleConfig);
    cfg = small(1);
    cfg.max_degree = 60;  // communities hold 50 nodes
    EXPECT_THROW(validate(cfg), InfeasibleConfig);
    cfg = small(1);
    cfg.mean_degree = 500;
    EXPECT_THROW(validate(cfg), InfeasibleConfig);
    cfg = small(1);
    cfg.nodes = 3;
    cfg.communities = 6;
    EXPECT_THROW(validate(cfg), InfeasibleConfig);
}

TEST(Generate, MeanDegreeTargetIsHit) {
    auto cfg = small(4, 0.1);
    cfg.nodes = 2000;
    cfg.communities = 20;
    cfg.mean_degree = 15;
    const auto net = generate(cfg);
    const double mean = 2.0 * static_cast<double>(net.graph.edge_count()) / 2000.0;
    EXPECT_NEAR(mean, 15.0, 0.75);
}

TEST(Generate, ExplicitMinDegree) {
    auto cfg = small(5, 0.1);
    cfg.min_degree = 12;
    cfg.max_degree = 20;
    const auto net = generate(cfg);
    for (auto k : net.target_degrees) {
        EXPECT_GE(k, 12u);
        EXPECT_LE(k, 20u);
    }
}

TEST(BridgeDegreeBias, NoRewiringIsAnError) {
    EXPECT_THROW(bridge_degree_bias(generate(small(1, 0.0))), std::invalid_argument);
}

TEST(BridgeDegreeBias, ReportsMeans) {
    const auto net = generate(small(2));
    const auto bias = bridge_degree_bias(net);
    EXPECT_GT(bias.mean_degree_all, 0.0);
    EXPECT_GT(bias.mean_degree_rewired, 0.0);
    EXPECT_GE(bias.p_value, 0.0);
    EXPECT_LE(bias.p_value, 1.0);
}

TEST(ReadLfrConfig, ParsesKeysAndRejectsUnknown) {
    std::istringstream in("# reference scale\nn = 1000\ncommunities=30\nmu = 0.2\nseed = 7\nselection = link\n");
    std::vector<std::string> keys;
    const auto cfg = read_lfr_config(in, {}, &keys);
    EXPECT_EQ(cfg.nodes, 1000u);
    EXPECT_EQ(cfg.communities, 30u);
    EXPECT_DOUBLE_EQ(cfg.mu, 0.2);
    EXPECT_EQ(cfg.seed, 7u);
    EXPECT_EQ(cfg.selection, RewireSelection::link_uniform);
    EXPECT_NE(std::find(keys.begin(), keys.end(), "seed"), keys.end());

    std::istringstream bad("colour = red\n");
    EXPECT_THROW(read_lfr_config(bad), ParseError);
    std::istringstream junk("mu = lots\n");
    EXPECT_THROW(read_lfr_config(junk), ParseError);
}
