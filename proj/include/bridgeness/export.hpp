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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bridgeness/centrality.hpp"
#include "bridgeness/evaluation.hpp"
#include "bridgeness/graph.hpp"

namespace bridgeness {

/// Shortest decimal text that parses back to the same double.
std::string format_double(double x);

/// "node_id,degree,bc,bridgeness,local"
void write_centrality_csv(std::ostream& out, const Graph& g, const NodeTable& table,
                          const CentralityResult& result);

/// JSON array of {"node_id", "degree", "bc", "bridgeness", "local"} records.
void write_centrality_json(std::ostream& out, const Graph& g, const NodeTable& table,
                           const CentralityResult& result);

/// "node_id,community,G"
void write_indicator_csv(std::ostream& out, const NodeTable& table, const Partition& p,
                         std::span<const double> indicator);

/// "rank,ratio"
void write_curve_csv(std::ostream& out, const RankingCurve& curve);

/// Sidecar with name, window, length and mean ratio.
void write_curve_metadata(std::ostream& out, const RankingCurve& curve);

/// "node_id,G,community,bc,bridgeness,degree"
void write_report_csv(std::ostream& out, std::span<const NodeReportRow> rows);

}  // namespace bridgeness
