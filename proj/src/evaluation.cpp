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

#include "bridgeness/evaluation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bridgeness {

namespace {

std::vector<std::size_t> descending_order(std::span<const double> score) {
    std::vector<std::size_t> order(score.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return score[a] > score[b]; });
    return order;
}

}  // namespace

RankingCurve cumulative_ratio_curve(std::span<const double> reference,
                                    std::span<const double> candidate, std::string name) {
    if (reference.size() != candidate.size())
        throw std::invalid_argument("reference and candidate cover different node sets");
    if (reference.empty()) throw std::invalid_argument("ranking curve needs at least one node");

    const auto best = descending_order(reference);
    const auto ranked = descending_order(candidate);
    RankingCurve curve;
    curve.name = std::move(name);
    curve.x.resize(reference.size());
    curve.y.resize(reference.size());
    double top_best = 0.0, top_ranked = 0.0;
    for (std::size_t r = 0; r < reference.size(); ++r) {
        top_best += reference[best[r]];
        top_ranked += reference[ranked[r]];
        curve.x[r] = static_cast<double>(r + 1);
        curve.y[r] = top_best == 0.0 ? 1.0 : top_ranked / top_best;
    }
    return curve;
}

RankingCurve smooth(const RankingCurve& curve, std::size_t window) {
    if (window == 0) throw std::invalid_argument("smoothing window must be >= 1");
    RankingCurve out = curve;
    out.window = window;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const std::size_t first = i + 1 >= window ? i + 1 - window : 0;
        double sum = 0.0;
        for (std::size_t j = first; j <= i; ++j) sum += curve.y[j];
        out.y[i] = sum / static_cast<double>(i + 1 - first);
    }
    return out;
}

double curve_advantage(const RankingCurve& a, const RankingCurve& b) {
    if (a.size() != b.size()) throw std::invalid_argument("curves differ in length");
    if (a.size() == 0) return 0.0;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a.y[i] - b.y[i];
    return sum / static_cast<double>(a.size());
}

std::vector<NodeReportRow> node_report(const Graph& g, const NodeTable& table,
                                       const Partition& partition,
                                       const CentralityResult& centrality,
                                       std::span<const double> indicator) {
    const std::size_t n = g.node_count();
    if (table.size() != n || partition.node_count() != n || centrality.size() != n ||
        indicator.size() != n)
        throw std::invalid_argument("node_report inputs cover different node sets");
    const auto names = partition.names();
    std::vector<NodeReportRow> rows(n);
    for (NodeId v = 0; v < n; ++v) {
        auto& row = rows[v];
        row.node = v;
        row.node_id = table.id(v);
        row.g = indicator[v];
        row.community = names.empty() ? std::to_string(partition[v]) : names[partition[v]];
        row.bc = centrality.bc[v];
        row.bridgeness = centrality.bridgeness[v];
        row.degree = g.degree_unchecked(v);
    }
    return rows;
}

void sort_report(std::vector<NodeReportRow>& rows, ReportColumn column) {
    auto by = [&](auto key, bool descending) {
        std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
            return descending ? key(b) < key(a) : key(a) < key(b);
        });
    };
    switch (column) {
    case ReportColumn::node: by([](const auto& r) { return r.node; }, false); break;
    case ReportColumn::g: by([](const auto& r) { return r.g; }, true); break;
    case ReportColumn::community: by([](const auto& r) { return r.community; }, false); break;
    case ReportColumn::bc: by([](const auto& r) { return r.bc; }, true); break;
    case ReportColumn::bridgeness: by([](const auto& r) { return r.bridgeness; }, true); break;
    case ReportColumn::degree: by([](const auto& r) { return r.degree; }, true); break;
    }
}

ReportColumn parse_report_column(const std::string& name) {
    if (name == "node" || name == "node_id") return ReportColumn::node;
    if (name == "G" || name == "g") return ReportColumn::g;
    if (name == "community") return ReportColumn::community;
    if (name == "bc") return ReportColumn::bc;
    if (name == "bridgeness") return ReportColumn::bridgeness;
    if (name == "degree") return ReportColumn::degree;
    throw std::invalid_argument("unknown report column '" + name + "'");
}

}  // namespace bridgeness
