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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace bridgeness {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Malformed input text. Carries the 1-based line number of the offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input that parses but violates a contract (bad weight, unknown node, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph in CSR form.
///
/// Nodes are dense indices in [0, node_count()). Each undirected edge is
/// stored once in `edges()` as (u, v) with u < v, and twice in the adjacency
/// arrays. Neighbor lists are sorted ascending. Optional per-edge weights are
/// kept alongside `edges()` but no algorithm in this library reads them.
class Graph {
public:
    Graph() = default;

    /// Builds a simple graph from an arbitrary edge sequence. Self-loops are
    /// dropped and duplicates collapsed (the first weight wins). Throws
    /// std::out_of_range if an endpoint is >= node_count.
    static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                            std::span<const double> weights = {});

    std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    std::span<const NodeId> neighbors(NodeId v) const noexcept {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    std::size_t degree_unchecked(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(NodeId u, NodeId v) const;

    std::span<const Edge> edges() const noexcept { return edges_; }
    bool has_weights() const noexcept { return !weights_.empty(); }
    std::span<const double> weights() const noexcept { return weights_; }

    /// Number of self-loops and duplicates discarded by from_edges().
    std::size_t dropped_self_loops() const noexcept { return dropped_self_loops_; }
    std::size_t collapsed_duplicates() const noexcept { return collapsed_duplicates_; }

private:
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::vector<Edge> edges_;
    std::vector<double> weights_;
    std::size_t dropped_self_loops_ = 0;
    std::size_t collapsed_duplicates_ = 0;
};

/// Bidirectional mapping between external string IDs and internal indices,
/// plus free-form per-node string attributes.
class NodeTable {
public:
    /// Returns the index for `id`, inserting it at the end if new.
    NodeId intern(std::string_view id);
    std::optional<NodeId> find(std::string_view id) const;
    const std::string& id(NodeId v) const { return ids_.at(v); }
    std::size_t size() const noexcept { return ids_.size(); }

    void set_attribute(NodeId v, const std::string& key, std::string value);
    std::optional<std::string> attribute(NodeId v, const std::string& key) const;

    /// Table whose IDs are the decimal strings "0".."n-1".
    static NodeTable identity(std::size_t n);

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<std::map<std::string, std::string, std::less<>>> attributes_;
};

/// Community label per node, dense in [0, community_count()).
class Partition {
public:
    Partition() = default;

    /// Relabels arbitrary integer labels densely in order of first appearance.
    static Partition from_labels(std::span<const std::size_t> raw_labels);

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t community_count() const noexcept { return community_count_; }
    std::size_t operator[](NodeId v) const noexcept { return labels_[v]; }
    std::span<const std::size_t> labels() const noexcept { return labels_; }

    /// Original label strings, if the partition was loaded from text.
    std::span<const std::string> names() const noexcept { return names_; }
    void set_names(std::vector<std::string> names);

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.labels_ == b.labels_;
    }

private:
    std::vector<std::size_t> labels_;
    std::size_t community_count_ = 0;
    std::vector<std::string> names_;
};

enum class Delimiter { whitespace, comma };

struct EdgeListOptions {
    Delimiter delimiter = Delimiter::whitespace;
    bool has_weights = false;
    bool skip_comments = true;
};

struct LoadedGraph {
    Graph graph;
    NodeTable table;
};

/// Reads "src dst [weight]" lines. A line holding a single ID declares an
/// isolated node. Lines starting with '#' are comments when
/// `skip_comments` is set; blank lines are always skipped.
LoadedGraph load_edge_list(std::istream& in, const EdgeListOptions& options = {});

/// Reads "node_id,community" lines against an existing table. An optional
/// header line "node_id,community" is accepted.
Partition load_partition(std::istream& in, const NodeTable& table);

/// Writes one "src dst" line per edge using external IDs, then one line per
/// isolated node. Weights are appended when present.
void write_edge_list(std::ostream& out, const Graph& g, const NodeTable& table,
                     Delimiter delimiter = Delimiter::whitespace);

/// Writes "node_id,community" with a header. Uses stored names if present.
void write_partition(std::ostream& out, const Partition& p, const NodeTable& table);

/// Throws std::out_of_range for an invalid index.
std::size_t degree(const Graph& g, NodeId v);

/// Fraction of neighbor pairs that are themselves linked; 0 when degree < 2.
double clustering_coefficient(const Graph& g, NodeId v);

/// Throws ValidationError unless `p` labels exactly the nodes of `g`.
void require_covers(const Graph& g, const Partition& p);

}  // namespace bridgeness
