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

#include "bridgeness/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "bridgeness/export.hpp"

namespace bridgeness {

namespace {

std::uint64_t edge_key(NodeId u, NodeId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line, Delimiter delimiter) {
    std::vector<std::string_view> fields;
    if (delimiter == Delimiter::comma) {
        std::size_t start = 0;
        while (true) {
            const auto pos = line.find(',', start);
            fields.push_back(trim(line.substr(start, pos - start)));
            if (pos == std::string_view::npos) break;
            start = pos + 1;
        }
        return fields;
    }
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

}  // namespace

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::span<const double> weights) {
    if (!weights.empty() && weights.size() != edges.size())
        throw std::invalid_argument("weights must match edges");

    Graph g;
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u >= node_count || v >= node_count) throw std::out_of_range("edge endpoint out of range");
        if (u == v) {
            ++g.dropped_self_loops_;
            continue;
        }
        if (!seen.insert(edge_key(u, v)).second) {
            ++g.collapsed_duplicates_;
            continue;
        }
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
        if (!weights.empty()) g.weights_.push_back(weights[i]);
    }

    g.offsets_.assign(node_count + 1, 0);
    for (auto [u, v] : g.edges_) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t v = 0; v < node_count; ++v) g.offsets_[v + 1] += g.offsets_[v];
    g.adjacency_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : g.edges_) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (std::size_t v = 0; v < node_count; ++v)
        std::sort(g.adjacency_.begin() + g.offsets_[v], g.adjacency_.begin() + g.offsets_[v + 1]);
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u >= node_count() || v >= node_count()) return false;
    if (degree_unchecked(u) > degree_unchecked(v)) std::swap(u, v);
    const auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

NodeId NodeTable::intern(std::string_view id) {
    std::string key(id);
    if (auto it = index_.find(key); it != index_.end()) return it->second;
    const auto v = static_cast<NodeId>(ids_.size());
    ids_.push_back(key);
    index_.emplace(std::move(key), v);
    attributes_.emplace_back();
    return v;
}

std::optional<NodeId> NodeTable::find(std::string_view id) const {
    if (auto it = index_.find(std::string(id)); it != index_.end()) return it->second;
    return std::nullopt;
}

void NodeTable::set_attribute(NodeId v, const std::string& key, std::string value) {
    attributes_.at(v)[key] = std::move(value);
}

std::optional<std::string> NodeTable::attribute(NodeId v, const std::string& key) const {
    const auto& attrs = attributes_.at(v);
    if (auto it = attrs.find(key); it != attrs.end()) return it->second;
    return std::nullopt;
}

NodeTable NodeTable::identity(std::size_t n) {
    NodeTable t;
    for (std::size_t v = 0; v < n; ++v) t.intern(std::to_string(v));
    return t;
}

Partition Partition::from_labels(std::span<const std::size_t> raw_labels) {
    Partition p;
    std::unordered_map<std::size_t, std::size_t> dense;
    p.labels_.reserve(raw_labels.size());
    for (auto raw : raw_labels) {
        auto [it, inserted] = dense.emplace(raw, dense.size());
        p.labels_.push_back(it->second);
    }
    p.community_count_ = dense.size();
    return p;
}

void Partition::set_names(std::vector<std::string> names) {
    if (names.size() != community_count_)
        throw std::invalid_argument("one name per community required");
    names_ = std::move(names);
}

LoadedGraph load_edge_list(std::istream& in, const EdgeListOptions& options) {
    LoadedGraph out;
    std::vector<Edge> edges;
    std::vector<double> weights;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty()) continue;
        if (options.skip_comments && text.front() == '#') continue;

        const auto fields = split_fields(text, options.delimiter);
        const std::size_t expected = options.has_weights ? 3 : 2;
        if (fields.size() == 1 && !fields[0].empty()) {
            out.table.intern(fields[0]);
            continue;
        }
        if (fields.size() != expected)
            throw ParseError(line_no, "expected " + std::to_string(expected) + " fields, got " +
                                          std::to_string(fields.size()));
        if (fields[0].empty() || fields[1].empty()) throw ParseError(line_no, "empty node id");

        double weight = 1.0;
        if (options.has_weights) {
            const auto w = fields[2];
            auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
            if (ec != std::errc{} || ptr != w.data() + w.size())
                throw ParseError(line_no, "invalid weight '" + std::string(w) + "'");
            if (!(weight > 0.0))
                throw ValidationError("line " + std::to_string(line_no) + ": weight must be positive");
        }
        const NodeId u = out.table.intern(fields[0]);
        const NodeId v = out.table.intern(fields[1]);
        edges.emplace_back(u, v);
        if (options.has_weights) weights.push_back(weight);
    }
    out.graph = Graph::from_edges(out.table.size(), edges, weights);
    return out;
}

Partition load_partition(std::istream& in, const NodeTable& table) {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> raw(table.size(), unset);
    std::unordered_map<std::string, std::size_t> label_ids;
    std::vector<std::string> label_names;

    std::string line;
    std::size_t line_no = 0;
    bool first = true;
    while (std::getline(in, line)) {
        ++line_no;
        const auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        const auto fields = split_fields(text, Delimiter::comma);
        if (fields.size() != 2) throw ParseError(line_no, "expected 'node_id,community'");
        if (first && fields[0] == "node_id" && !table.find("node_id")) {
            first = false;
            continue;
        }
        first = false;
        const auto v = table.find(fields[0]);
        if (!v) throw ValidationError("line " + std::to_string(line_no) + ": unknown node '" +
                                      std::string(fields[0]) + "'");
        auto [it, inserted] = label_ids.emplace(std::string(fields[1]), label_ids.size());
        if (inserted) label_names.emplace_back(fields[1]);
        raw[*v] = it->second;
    }

    std::string missing;
    std::size_t missing_count = 0;
    for (NodeId v = 0; v < raw.size(); ++v) {
        if (raw[v] != unset) continue;
        if (missing_count < 20) missing += (missing.empty() ? "" : ", ") + table.id(v);
        ++missing_count;
    }
    if (missing_count > 0) {
        if (missing_count > 20) missing += ", ...";
        throw ValidationError("partition misses " + std::to_string(missing_count) +
                              " node(s): " + missing);
    }

    auto p = Partition::from_labels(raw);
    // from_labels renumbers by first appearance over nodes; carry names along.
    std::vector<std::string> names(p.community_count());
    for (NodeId v = 0; v < raw.size(); ++v) names[p[v]] = label_names[raw[v]];
    p.set_names(std::move(names));
    return p;
}

void write_edge_list(std::ostream& out, const Graph& g, const NodeTable& table,
                     Delimiter delimiter) {
    const char sep = delimiter == Delimiter::comma ? ',' : ' ';
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out << table.id(edges[i].first) << sep << table.id(edges[i].second);
        if (g.has_weights()) out << sep << format_double(g.weights()[i]);
        out << '\n';
    }
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (g.degree_unchecked(v) == 0) out << table.id(v) << '\n';
}

void write_partition(std::ostream& out, const Partition& p, const NodeTable& table) {
    out << "node_id,community\n";
    const auto names = p.names();
    for (NodeId v = 0; v < p.node_count(); ++v) {
        out << table.id(v) << ',';
        if (names.empty())
            out << p[v];
        else
            out << names[p[v]];
        out << '\n';
    }
}

std::size_t degree(const Graph& g, NodeId v) {
    if (v >= g.node_count()) throw std::out_of_range("node index " + std::to_string(v));
    return g.degree_unchecked(v);
}

double clustering_coefficient(const Graph& g, NodeId v) {
    const std::size_t k = degree(g, v);
    if (k < 2) return 0.0;
    const auto nb = g.neighbors(v);
    std::size_t links = 0;
    // Count each neighbor pair once via sorted-list intersection above the pivot.
    for (std::size_t i = 0; i < nb.size(); ++i) {
        const auto other = g.neighbors(nb[i]);
        auto a = std::upper_bound(nb.begin(), nb.end(), nb[i]);
        auto b = std::upper_bound(other.begin(), other.end(), nb[i]);
        while (a != nb.end() && b != other.end()) {
            if (*a < *b)
                ++a;
            else if (*b < *a)
                ++b;
            else {
                ++links;
                ++a;
                ++b;
            }
        }
    }
    return static_cast<double>(links) / (static_cast<double>(k) * (k - 1) / 2.0);
}

void require_covers(const Graph& g, const Partition& p) {
    if (p.node_count() != g.node_count())
        throw ValidationError("partition has " + std::to_string(p.node_count()) +
                              " nodes, graph has " + std::to_string(g.node_count()));
}

}  // namespace bridgeness
