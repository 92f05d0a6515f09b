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

#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bridgeness/centrality.hpp"
#include "bridgeness/community.hpp"
#include "bridgeness/evaluation.hpp"
#include "bridgeness/export.hpp"
#include "bridgeness/graph.hpp"
#include "bridgeness/indicator.hpp"
#include "bridgeness/netgen.hpp"

namespace bridgeness::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

#ifndef BRIDGENESS_VERSION
#define BRIDGENESS_VERSION "dev"
#endif

constexpr std::size_t bruteforce_warn_nodes = 2000;

// Runtime failure with a message for stderr; maps to exit code 1.
struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure("cannot read " + path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::array<char, 1 << 16> buf{};
    while (in) {
        in.read(buf.data(), buf.size());
        if (in.gcount() > 0) EVP_DigestUpdate(ctx, buf.data(), static_cast<std::size_t>(in.gcount()));
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest.data(), &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Failure("cannot write " + path);
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw Failure("write failed: " + path);
}

template <typename Fn>
void write_file(const std::string& path, Fn&& body) {
    auto out = open_out(path);
    body(out);
    finish(out, path);
}

struct GraphInput {
    std::string path;
    std::string delimiter = "whitespace";
    bool weights = false;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
    cmd->add_option("--input,-i", in.path, "Edge list file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--delimiter", in.delimiter, "Field separator")
        ->check(CLI::IsMember({"whitespace", "comma"}));
    cmd->add_flag("--weights", in.weights, "Third column holds a positive edge weight");
}

LoadedGraph read_graph(const GraphInput& in) {
    std::ifstream file(in.path);
    if (!file) throw Failure("cannot read " + in.path);
    EdgeListOptions opts;
    opts.delimiter = in.delimiter == "comma" ? Delimiter::comma : Delimiter::whitespace;
    opts.has_weights = in.weights;
    return load_edge_list(file, opts);
}

Partition read_partition(const std::string& path, const NodeTable& table) {
    std::ifstream file(path);
    if (!file) throw Failure("cannot read " + path);
    return load_partition(file, table);
}

json provenance(const std::string& command, const json& config,
                const std::vector<std::string>& inputs) {
    json inputs_json = json::array();
    for (const auto& path : inputs) inputs_json.push_back({{"path", path}, {"sha256", sha256_file(path)}});
    return {{"tool", "bridgeness"},
            {"version", BRIDGENESS_VERSION},
            {"command", command},
            {"config", config},
            {"inputs", inputs_json}};
}

void write_json(const std::string& path, const json& j) {
    write_file(path, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
}

// Partition from a metadata file or from Louvain; exactly one source allowed.
struct PartitionSource {
    std::string file;
    std::string detect;
    std::optional<std::uint64_t> seed;
};

void add_partition_options(CLI::App* cmd, PartitionSource& src) {
    cmd->add_option("--partition,-p", src.file, "Community CSV 'node_id,community'")
        ->check(CLI::ExistingFile);
    cmd->add_option("--detect", src.detect, "Detect communities instead of reading them")
        ->check(CLI::IsMember({"louvain"}));
    cmd->add_option("--seed", src.seed, "Seed for community detection");
}

Partition resolve_partition(const PartitionSource& src, const LoadedGraph& lg, json& config,
                            std::vector<std::string>& inputs) {
    if (!src.file.empty() && !src.detect.empty())
        throw Failure("give either --partition or --detect, not both");
    if (!src.file.empty()) {
        inputs.push_back(src.file);
        config["partition"] = src.file;
        return read_partition(src.file, lg.table);
    }
    if (src.detect.empty()) throw Failure("a partition is required: pass --partition or --detect louvain");
    if (!src.seed) throw Failure("--detect louvain requires --seed");
    config["detect"] = src.detect;
    config["seed"] = *src.seed;
    LouvainConfig lc;
    lc.seed = *src.seed;
    return louvain(lg.graph, lc);
}

std::string max_label(const std::vector<double>& score, const NodeTable& table) {
    if (score.empty()) return "-";
    const auto it = std::max_element(score.begin(), score.end());
    const auto v = static_cast<NodeId>(it - score.begin());
    return table.id(v) + " (" + format_double(*it) + ")";
}

// --- centrality -----------------------------------------------------------

struct CentralityArgs {
    GraphInput graph;
    std::string variant = "exact";
    std::string output;
    std::string json_output;
    int workers = 0;
};

int cmd_centrality(const CentralityArgs& a, std::ostream& out, std::ostream& err) {
    const auto lg = read_graph(a.graph);
    const auto& g = lg.graph;
    if (g.dropped_self_loops() > 0) err << "warning: dropped " << g.dropped_self_loops() << " self-loop(s)\n";

    CentralityOptions opts{a.workers};
    CentralityResult r;
    if (a.variant == "exact") {
        r = bridgeness_exact(g, opts);
    } else if (a.variant == "bruteforce") {
        if (g.node_count() > bruteforce_warn_nodes)
            err << "warning: bruteforce on " << g.node_count()
                << " nodes needs O(n^2) memory and O(n^3) time\n";
        r = bridgeness_bruteforce(g);
    } else {
        r.bc = betweenness(g, opts);
        r.bridgeness = bridgeness_si_compat(g, opts);
        r.local.resize(r.bc.size());
        for (std::size_t i = 0; i < r.bc.size(); ++i) r.local[i] = r.bc[i] - r.bridgeness[i];
    }

    write_file(a.output, [&](std::ostream& o) { write_centrality_csv(o, g, lg.table, r); });
    if (!a.json_output.empty())
        write_file(a.json_output, [&](std::ostream& o) { write_centrality_json(o, g, lg.table, r); });

    json config = {{"variant", a.variant},
                   {"workers", resolve_workers(opts)},
                   {"delimiter", a.graph.delimiter},
                   {"weights", a.graph.weights},
                   {"output", a.output}};
    write_json(a.output + ".provenance.json", provenance("centrality", config, {a.graph.path}));

    out << "nodes " << g.node_count() << ", edges " << g.edge_count() << '\n'
        << "max bc: " << max_label(r.bc, lg.table) << '\n'
        << "max bridgeness: " << max_label(r.bridgeness, lg.table) << '\n';
    return 0;
}

// --- indicator ------------------------------------------------------------

struct IndicatorArgs {
    GraphInput graph;
    PartitionSource partition;
    std::string output;
};

int cmd_indicator(const IndicatorArgs& a, std::ostream& out) {
    const auto lg = read_graph(a.graph);
    json config = {{"output", a.output}};
    std::vector<std::string> inputs{a.graph.path};
    const auto p = resolve_partition(a.partition, lg, config, inputs);
    const auto G = global_indicator(lg.graph, p);
    write_file(a.output, [&](std::ostream& o) { write_indicator_csv(o, lg.table, p, G); });
    write_json(a.output + ".provenance.json", provenance("indicator", config, inputs));
    out << "communities " << p.community_count() << ", inter-community fraction "
        << format_double(inter_community_fraction(lg.graph, p)) << '\n';
    return 0;
}

// --- communities ----------------------------------------------------------

struct CommunitiesArgs {
    GraphInput graph;
    std::uint64_t seed = 0;
    int max_passes = LouvainConfig{}.max_passes;
    double min_gain = LouvainConfig{}.min_gain;
    std::string output;
};

int cmd_communities(const CommunitiesArgs& a, std::ostream& out) {
    const auto lg = read_graph(a.graph);
    LouvainConfig cfg{a.seed, a.max_passes, a.min_gain};
    const auto res = louvain_detailed(lg.graph, cfg);
    write_file(a.output, [&](std::ostream& o) { write_partition(o, res.partition, lg.table); });
    const double q = res.pass_modularity.back();
    json config = {{"seed", a.seed},
                   {"max_passes", a.max_passes},
                   {"min_gain", a.min_gain},
                   {"output", a.output}};
    auto prov = provenance("communities", config, {a.graph.path});
    prov["modularity"] = q;
    prov["communities"] = res.partition.community_count();
    write_json(a.output + ".provenance.json", prov);
    out << "communities " << res.partition.community_count() << ", modularity " << format_double(q)
        << '\n';
    return 0;
}

// --- generate -------------------------------------------------------------

struct GenerateArgs {
    std::string config_file;
    std::string prefix;
    std::size_t nodes = 0;
    std::size_t communities = 0;
    double mu = 0.0;
    std::uint64_t seed = 0;
    double mean_degree = 0.0;
    double min_degree = 0.0;
    std::size_t max_degree = 0;
    double exponent = 0.0;
    std::string selection;
};

json lfr_json(const LfrConfig& c) {
    json j = {{"nodes", c.nodes},
              {"communities", c.communities},
              {"mu", c.mu},
              {"seed", c.seed},
              {"degree_exponent", c.degree_exponent},
              {"mean_degree", c.mean_degree},
              {"selection", c.selection == RewireSelection::node_uniform ? "node" : "link"}};
    if (c.min_degree) j["min_degree"] = *c.min_degree;
    if (c.max_degree) j["max_degree"] = *c.max_degree;
    return j;
}

int cmd_generate(const GenerateArgs& a, const CLI::App& cmd, std::ostream& out) {
    LfrConfig cfg;
    bool have_seed = false;
    std::vector<std::string> inputs;
    if (!a.config_file.empty()) {
        std::ifstream file(a.config_file);
        if (!file) throw Failure("cannot read " + a.config_file);
        std::vector<std::string> keys;
        cfg = read_lfr_config(file, cfg, &keys);
        have_seed = std::find(keys.begin(), keys.end(), "seed") != keys.end();
        inputs.push_back(a.config_file);
    }
    auto given = [&](const char* name) { return cmd.count(name) > 0; };
    if (given("--n")) cfg.nodes = a.nodes;
    if (given("--communities")) cfg.communities = a.communities;
    if (given("--mu")) cfg.mu = a.mu;
    if (given("--seed")) {
        cfg.seed = a.seed;
        have_seed = true;
    }
    if (given("--mean-degree")) cfg.mean_degree = a.mean_degree;
    if (given("--min-degree")) cfg.min_degree = a.min_degree;
    if (given("--max-degree")) cfg.max_degree = a.max_degree;
    if (given("--exponent")) cfg.degree_exponent = a.exponent;
    if (given("--selection"))
        cfg.selection = a.selection == "link" ? RewireSelection::link_uniform : RewireSelection::node_uniform;
    if (!have_seed) throw Failure("generate requires --seed (or 'seed' in the config file)");

    const auto net = generate(cfg);
    const auto table = NodeTable::identity(cfg.nodes);
    const std::string edges_path = a.prefix + ".edges";
    const std::string partition_path = a.prefix + ".partition.csv";
    write_file(edges_path, [&](std::ostream& o) { write_edge_list(o, net.graph, table); });
    write_file(partition_path, [&](std::ostream& o) { write_partition(o, net.ground_truth, table); });

    auto prov = provenance("generate", lfr_json(cfg), inputs);
    prov["achieved_mu"] = net.achieved_mu;
    prov["edges"] = net.graph.edge_count();
    prov["rewired_nodes"] = net.rewired_nodes.size();
    prov["rewire_steps"] = net.rewire_steps;
    prov["dropped_stubs"] = net.dropped_stubs;
    prov["outputs"] = {edges_path, partition_path};
    write_json(a.prefix + ".provenance.json", prov);

    out << "nodes " << net.graph.node_count() << ", edges " << net.graph.edge_count()
        << ", achieved_mu " << format_double(net.achieved_mu) << '\n';
    return 0;
}

// --- evaluate -------------------------------------------------------------

struct EvaluateArgs {
    GraphInput graph;
    PartitionSource partition;
    std::string output_dir;
    std::size_t window = 200;
    int workers = 0;
};

int cmd_evaluate(const EvaluateArgs& a, std::ostream& out) {
    const auto lg = read_graph(a.graph);
    const auto& g = lg.graph;
    if (g.node_count() == 0) throw Failure("graph is empty");
    json config = {{"window", a.window}};
    std::vector<std::string> inputs{a.graph.path};
    const auto p = resolve_partition(a.partition, lg, config, inputs);

    CentralityOptions opts{a.workers};
    config["workers"] = resolve_workers(opts);
    const auto r = bridgeness_exact(g, opts);
    const auto G = global_indicator(g, p);

    std::error_code ec;
    fs::create_directories(a.output_dir, ec);
    if (ec) throw Failure("cannot create " + a.output_dir + ": " + ec.message());
    const fs::path dir(a.output_dir);
    auto path = [&](const std::string& name) { return (dir / name).string(); };

    write_file(path("indicator.csv"), [&](std::ostream& o) { write_indicator_csv(o, lg.table, p, G); });
    write_file(path("centrality.csv"), [&](std::ostream& o) { write_centrality_csv(o, g, lg.table, r); });

    const auto curve_g = cumulative_ratio_curve(G, G, "G");
    const auto curve_bc = cumulative_ratio_curve(G, r.bc, "bc");
    const auto curve_bri = cumulative_ratio_curve(G, r.bridgeness, "bridgeness");
    auto emit = [&](const RankingCurve& c, const std::string& stem) {
        write_file(path(stem + ".csv"), [&](std::ostream& o) { write_curve_csv(o, c); });
        write_file(path(stem + ".json"), [&](std::ostream& o) { write_curve_metadata(o, c); });
    };
    const auto smooth_g = smooth(curve_g, a.window);
    const auto smooth_bc = smooth(curve_bc, a.window);
    const auto smooth_bri = smooth(curve_bri, a.window);
    emit(curve_g, "curve_g");
    emit(smooth_g, "curve_g_smoothed");
    emit(curve_bc, "curve_bc");
    emit(smooth_bc, "curve_bc_smoothed");
    emit(curve_bri, "curve_bridgeness");
    emit(smooth_bri, "curve_bridgeness_smoothed");

    const auto locterm = locterm_by_degree(r, g);
    write_file(path("locterm.csv"), [&](std::ostream& o) {
        o << "degree,mean_local_fraction\n";
        for (const auto& [k, v] : locterm) o << k << ',' << format_double(v) << '\n';
    });

    const double advantage = curve_advantage(curve_bri, curve_bc);
    const double advantage_smoothed = curve_advantage(smooth_bri, smooth_bc);
    json summary = {{"nodes", g.node_count()},
                    {"edges", g.edge_count()},
                    {"communities", p.community_count()},
                    {"inter_community_fraction", inter_community_fraction(g, p)},
                    {"curve_advantage", advantage},
                    {"curve_advantage_smoothed", advantage_smoothed}};
    if (g.edge_count() > 0) summary["modularity"] = modularity(g, p);
    write_json(path("summary.json"), summary);
    write_json(path("provenance.json"), provenance("evaluate", config, inputs));

    out << "curve_advantage(bridgeness, bc) = " << format_double(advantage) << " (smoothed "
        << format_double(advantage_smoothed) << ")\n";
    return 0;
}

// --- report ---------------------------------------------------------------

struct ReportArgs {
    GraphInput graph;
    PartitionSource partition;
    std::string output;
    std::string sort = "bc";
    int workers = 0;
};

int cmd_report(const ReportArgs& a, std::ostream& out) {
    const auto lg = read_graph(a.graph);
    json config = {{"sort", a.sort}, {"output", a.output}};
    std::vector<std::string> inputs{a.graph.path};
    const auto p = resolve_partition(a.partition, lg, config, inputs);
    CentralityOptions opts{a.workers};
    const auto r = bridgeness_exact(lg.graph, opts);
    const auto G = global_indicator(lg.graph, p);
    auto rows = node_report(lg.graph, lg.table, p, r, G);
    sort_report(rows, parse_report_column(a.sort));
    write_file(a.output, [&](std::ostream& o) { write_report_csv(o, rows); });
    write_json(a.output + ".provenance.json", provenance("report", config, inputs));
    out << "rows " << rows.size() << '\n';
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Betweenness, bridgeness and community bridge analysis"};
    app.set_version_flag("--version", BRIDGENESS_VERSION);
    app.require_subcommand(1);

    CentralityArgs centrality;
    auto* c = app.add_subcommand("centrality", "Betweenness, bridgeness and local term per node");
    add_graph_options(c, centrality.graph);
    c->add_option("--variant", centrality.variant, "exact | si-compat | bruteforce")
        ->check(CLI::IsMember({"exact", "si-compat", "bruteforce"}));
    c->add_option("--output,-o", centrality.output, "CSV output")->required();
    c->add_option("--json", centrality.json_output, "Also write JSON records here");
    c->add_option("--workers", centrality.workers, "Worker threads (default: all; 1 = serial reference)")
        ->check(CLI::NonNegativeNumber);

    IndicatorArgs indicator;
    auto* ind = app.add_subcommand("indicator", "Global bridging indicator G per node");
    add_graph_options(ind, indicator.graph);
    add_partition_options(ind, indicator.partition);
    ind->add_option("--output,-o", indicator.output, "CSV output")->required();

    CommunitiesArgs communities;
    auto* com = app.add_subcommand("communities", "Louvain modularity optimization");
    add_graph_options(com, communities.graph);
    com->add_option("--seed", communities.seed, "Random seed")->required();
    com->add_option("--max-passes", communities.max_passes)->check(CLI::PositiveNumber);
    com->add_option("--min-gain", communities.min_gain)->check(CLI::PositiveNumber);
    com->add_option("--output,-o", communities.output, "Partition CSV output")->required();

    GenerateArgs gen;
    auto* ge = app.add_subcommand("generate", "Unbiased LFR-style network with planted communities");
    ge->add_option("--config", gen.config_file, "key = value config file")->check(CLI::ExistingFile);
    ge->add_option("--output-prefix,-o", gen.prefix, "Writes PREFIX.edges, PREFIX.partition.csv, PREFIX.provenance.json")
        ->required();
    ge->add_option("--n", gen.nodes, "Node count");
    ge->add_option("--communities", gen.communities, "Community count");
    ge->add_option("--mu", gen.mu, "Target inter-community edge fraction");
    ge->add_option("--seed", gen.seed, "Random seed");
    ge->add_option("--mean-degree", gen.mean_degree);
    ge->add_option("--min-degree", gen.min_degree);
    ge->add_option("--max-degree", gen.max_degree);
    ge->add_option("--exponent", gen.exponent, "Degree power-law exponent");
    ge->add_option("--selection", gen.selection, "node (unbiased) | link (classic LFR bias)")
        ->check(CLI::IsMember({"node", "link"}));

    EvaluateArgs eval;
    auto* ev = app.add_subcommand("evaluate", "Ranking curves of bc and bridgeness against G");
    add_graph_options(ev, eval.graph);
    add_partition_options(ev, eval.partition);
    ev->add_option("--output-dir,-o", eval.output_dir, "Directory for curves and summaries")->required();
    ev->add_option("--window", eval.window, "Smoothing window")->check(CLI::PositiveNumber);
    ev->add_option("--workers", eval.workers)->check(CLI::NonNegativeNumber);

    ReportArgs report;
    auto* rep = app.add_subcommand("report", "Per-node table: G, community, bc, bridgeness, degree");
    add_graph_options(rep, report.graph);
    add_partition_options(rep, report.partition);
    rep->add_option("--output,-o", report.output, "CSV output")->required();
    rep->add_option("--sort", report.sort, "node | G | community | bc | bridgeness | degree")
        ->check(CLI::IsMember({"node", "node_id", "G", "g", "community", "bc", "bridgeness", "degree"}));
    rep->add_option("--workers", report.workers)->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << BRIDGENESS_VERSION << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (c->parsed()) return cmd_centrality(centrality, out, err);
        if (ind->parsed()) return cmd_indicator(indicator, out);
        if (com->parsed()) return cmd_communities(communities, out);
        if (ge->parsed()) return cmd_generate(gen, *ge, out);
        if (ev->parsed()) return cmd_evaluate(eval, out);
        if (rep->parsed()) return cmd_report(report, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace bridgeness::cli
