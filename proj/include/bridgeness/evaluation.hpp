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
#include <span>
#include <string>
#include <vector>

#include "bridgeness/centrality.hpp"
#include "bridgeness/graph.hpp"

namespace bridgeness {

/// y[r-1] = share of the best achievable top-r sum of the reference score
/// that the candidate's top-r nodes capture. x holds ranks 1..n.
struct RankingCurve {
    std::vector<double> x;
    std::vector<double> y;
    std::string name;
    std::size_t window = 1;  // 1 for raw curves

    std::size_t size() const noexcept { return y.size(); }
};

/// Ranks nodes by descending candidate score, ties by ascending index, and
/// compares top-r sums of `reference` with the best possible ones. Positions
/// where the best top-r sum is zero yield 1.
RankingCurve cumulative_ratio_curve(std::span<const double> reference,
                                    std::span<const double> candidate, std::string name = {});

/// Trailing moving average over `window` points, truncated at the start.
RankingCurve smooth(const RankingCurve& curve, std::size_t window = 200);

/// Mean of a.y - b.y.
double curve_advantage(const RankingCurve& a, const RankingCurve& b);

struct NodeReportRow {
    NodeId node = 0;
    std::string node_id;
    double g = 0.0;
    std::string community;
    double bc = 0.0;
    double bridgeness = 0.0;
    std::size_t degree = 0;
};

enum class ReportColumn { node, g, community, bc, bridgeness, degree };

/// One row per node, in node order.
std::vector<NodeReportRow> node_report(const Graph& g, const NodeTable& table,
                                       const Partition& partition,
                                       const CentralityResult& centrality,
                                       std::span<const double> indicator);

/// Stable sort; numeric columns descending, text columns ascending.
void sort_report(std::vector<NodeReportRow>& rows, ReportColumn column);

ReportColumn parse_report_column(const std::string& name);

}  // namespace bridgeness
