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

#include "bridgeness/export.hpp"

#include <array>
#include <charconv>
#include <json.hpp>
#include <ostream>

namespace bridgeness {

std::string format_double(double x) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

void write_centrality_csv(std::ostream& out, const Graph& g, const NodeTable& table,
                          const CentralityResult& result) {
    out << "node_id,degree,bc,bridgeness,local\n";
    for (NodeId v = 0; v < g.node_count(); ++v)
        out << table.id(v) << ',' << g.degree_unchecked(v) << ',' << format_double(result.bc[v])
            << ',' << format_double(result.bridgeness[v]) << ',' << format_double(result.local[v])
            << '\n';
}

void write_centrality_json(std::ostream& out, const Graph& g, const NodeTable& table,
                           const CentralityResult& result) {
    auto records = nlohmann::json::array();
    for (NodeId v = 0; v < g.node_count(); ++v)
        records.push_back({{"node_id", table.id(v)},
                           {"degree", g.degree_unchecked(v)},
                           {"bc", result.bc[v]},
                           {"bridgeness", result.bridgeness[v]},
                           {"local", result.local[v]}});
    out << records.dump(2) << '\n';
}

void write_indicator_csv(std::ostream& out, const NodeTable& table, const Partition& p,
                         std::span<const double> indicator) {
    out << "node_id,community,G\n";
    const auto names = p.names();
    for (NodeId v = 0; v < indicator.size(); ++v) {
        out << table.id(v) << ',';
        if (names.empty())
            out << p[v];
        else
            out << names[p[v]];
        out << ',' << format_double(indicator[v]) << '\n';
    }
}

void write_curve_csv(std::ostream& out, const RankingCurve& curve) {
    out << "rank,ratio\n";
    for (std::size_t i = 0; i < curve.size(); ++i)
        out << static_cast<std::size_t>(curve.x[i]) << ',' << format_double(curve.y[i]) << '\n';
}

void write_curve_metadata(std::ostream& out, const RankingCurve& curve) {
    double mean = 0.0;
    for (double y : curve.y) mean += y;
    if (curve.size() > 0) mean /= static_cast<double>(curve.size());
    const nlohmann::json meta = {{"name", curve.name},
                                 {"window", curve.window},
                                 {"points", curve.size()},
                                 {"mean_ratio", mean}};
    out << meta.dump(2) << '\n';
}

void write_report_csv(std::ostream& out, std::span<const NodeReportRow> rows) {
    out << "node_id,G,community,bc,bridgeness,degree\n";
    for (const auto& r : rows)
        out << r.node_id << ',' << format_double(r.g) << ',' << r.community << ','
            << format_double(r.bc) << ',' << format_double(r.bridgeness) << ',' << r.degree << '\n';
}

}  // namespace bridgeness
