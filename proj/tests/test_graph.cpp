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

#include <numeric>
#include <sstream>

#include "bridgeness/graph.hpp"
#include "oracle.hpp"

using namespace bridgeness;
using namespace bridgeness::testing;

TEST(LoadEdgeList, TwoEdges) {
    std::istringstream in("a b\nb c\n");
    const auto lg = load_edge_list(in);
    EXPECT_EQ(lg.graph.node_count(), 3u);
    EXPECT_EQ(lg.graph.edge_count(), 2u);
    EXPECT_EQ(lg.table.id(0), "a");
    EXPECT_EQ(*lg.table.find("c"), 2u);
}

TEST(LoadEdgeList, DuplicatesAndSelfLoops) {
    std::istringstream in("a b\nb a\na a\n");
    const auto lg = load_edge_list(in);
    EXPECT_EQ(lg.graph.node_count(), 2u);
    EXPECT_EQ(lg.graph.edge_count(), 1u);
    EXPECT_EQ(lg.graph.dropped_self_loops(), 1u);
    EXPECT_EQ(lg.graph.collapsed_duplicates(), 1u);
}

TEST(LoadEdgeList, CommentsCommaAndWeights) {
    std::istringstream in("# header\nx, y, 2.5\n\ny,z,0.5\nz,x,1\nx,y,9\n");
    EdgeListOptions opts;
    opts.delimiter = Delimiter::comma;
    opts.has_weights = true;
    const auto lg = load_edge_list(in, opts);
    ASSERT_EQ(lg.graph.edge_count(), 3u);
    ASSERT_TRUE(lg.graph.has_weights());
    EXPECT_DOUBLE_EQ(lg.graph.weights()[0], 2.5);  // first weight of x-y kept
}

TEST(LoadEdgeList, MalformedLineReportsLineNumber) {
    std::istringstream in("a b\nb c d e\n");
    try {
        load_edge_list(in);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(LoadEdgeList, NonPositiveWeightRejected) {
    EdgeListOptions opts;
    opts.has_weights = true;
    std::istringstream zero("a b 0\n");
    EXPECT_THROW(load_edge_list(zero, opts), ValidationError);
    std::istringstream neg("a b -1\n");
    EXPECT_THROW(load_edge_list(neg, opts), ValidationError);
    std::istringstream junk("a b w\n");
    EXPECT_THROW(load_edge_list(junk, opts), ParseError);
}

TEST(LoadEdgeList, SingleIdDeclaresIsolatedNode) {
    std::istringstream in("a b\nlonely\n");
    const auto lg = load_edge_list(in);
    EXPECT_EQ(lg.graph.node_count(), 3u);
    EXPECT_EQ(degree(lg.graph, 2), 0u);
}

TEST(LoadPartition, SingleCommunity) {
    std::istringstream g("a b\nb c\n");
    const auto lg = load_edge_list(g);
    std::istringstream p("a,X\nb,X\nc,X\n");
    const auto part = load_partition(p, lg.table);
    EXPECT_EQ(part.community_count(), 1u);
}

TEST(LoadPartition, DenseRelabeling) {
    std::istringstream g("n1 n2\nn3 n4\n");
    const auto lg = load_edge_list(g);
    std::istringstream p("node_id,community\nn1,FR\nn2,AR\nn3,FR\nn4,AR\n");
    const auto part = load_partition(p, lg.table);
    EXPECT_EQ(part.community_count(), 2u);
    EXPECT_EQ(part[0], 0u);
    EXPECT_EQ(part[1], 1u);
    EXPECT_EQ(part[2], 0u);
    EXPECT_EQ(part.names()[0], "FR");
    EXPECT_EQ(part.names()[1], "AR");
}

TEST(LoadPartition, MissingNodeIsNamed) {
    std::istringstream g("a b\nb c\n");
    const auto lg = load_edge_list(g);
    std::istringstream p("a,1\nc,2\n");
    try {
        load_partition(p, lg.table);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError& e) {
        EXPECT_NE(std::string(e.what()).find("b"), std::string::npos);
    }
}

TEST(LoadPartition, UnknownNodeRejected) {
    std::istringstream g("a b\n");
    const auto lg = load_edge_list(g);
    std::istringstream p("a,1\nb,1\nzz,2\n");
    EXPECT_THROW(load_partition(p, lg.table), ValidationError);
}

TEST(LoadPartition, InvariantUnderLabelRenaming) {
    std::istringstream g("a b\nb c\nc d\nd e\n");
    const auto lg = load_edge_list(g);
    std::istringstream p1("a,x\nb,x\nc,y\nd,z\ne,y\n");
    std::istringstream p2("a,77\nb,77\nc,foo\nd,bar\ne,foo\n");
    EXPECT_EQ(load_partition(p1, lg.table), load_partition(p2, lg.table));
}

TEST(Degree, Examples) {
    const auto star = star_graph(5);
    EXPECT_EQ(degree(star, 0), 5u);
    const auto iso = Graph::from_edges(1, {});
    EXPECT_EQ(degree(iso, 0), 0u);
    const auto tri = complete_graph(3);
    EXPECT_EQ(degree(tri, 1), 2u);
    EXPECT_THROW(degree(tri, 3), std::out_of_range);
}

TEST(ClusteringCoefficient, Examples) {
    EXPECT_DOUBLE_EQ(clustering_coefficient(complete_graph(3), 0), 1.0);
    EXPECT_DOUBLE_EQ(clustering_coefficient(star_graph(6), 0), 0.0);
    EXPECT_DOUBLE_EQ(clustering_coefficient(star_graph(6), 1), 0.0);  // degree 1
    // Node 0 with neighbors 1..4; links 1-2 and 3-4 among them.
    const auto g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}});
    EXPECT_NEAR(clustering_coefficient(g, 0), 2.0 / 6.0, 1e-15);
    EXPECT_THROW(clustering_coefficient(g, 9), std::out_of_range);
}

TEST(GraphProperties, DegreeSumAndSymmetry) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto g = erdos_renyi(40, 0.1, seed);
        std::size_t sum = 0;
        for (NodeId v = 0; v < g.node_count(); ++v) {
            sum += degree(g, v);
            const auto nb = g.neighbors(v);
            EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
            for (NodeId w : nb) {
                EXPECT_NE(w, v);
                EXPECT_TRUE(g.has_edge(w, v));
            }
        }
        EXPECT_EQ(sum, 2 * g.edge_count());
    }
}

TEST(GraphProperties, ExportReloadRoundTrip) {
    std::istringstream in("alpha beta\nbeta gamma\ngamma alpha\ndelta beta\nsolo\n");
    const auto lg = load_edge_list(in);
    std::ostringstream out;
    write_edge_list(out, lg.graph, lg.table);
    std::istringstream back(out.str());
    const auto again = load_edge_list(back);
    ASSERT_EQ(again.graph.node_count(), lg.graph.node_count());
    ASSERT_EQ(again.graph.edge_count(), lg.graph.edge_count());
    for (auto [u, v] : lg.graph.edges()) {
        const auto a = *again.table.find(lg.table.id(u));
        const auto b = *again.table.find(lg.table.id(v));
        EXPECT_TRUE(again.graph.has_edge(a, b));
    }

    std::vector<std::size_t> labels{0, 1, 0, 2, 1};
    auto p = Partition::from_labels(labels);
    std::ostringstream pout;
    write_partition(pout, p, lg.table);
    std::istringstream pin(pout.str());
    EXPECT_EQ(load_partition(pin, lg.table), p);
}

TEST(NodeTable, Attributes) {
    NodeTable t;
    const auto v = t.intern("EZE");
    t.set_attribute(v, "country", "AR");
    EXPECT_EQ(*t.attribute(v, "country"), "AR");
    EXPECT_FALSE(t.attribute(v, "city").has_value());
    EXPECT_EQ(t.intern("EZE"), v);
}
