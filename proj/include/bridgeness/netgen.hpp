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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bridgeness/graph.hpp"

namespace bridgeness {

/// How phase 2 picks the intra-community link to turn into a bridge.
enum class RewireSelection {
    node_uniform,  // a random node, then one of its internal links
    link_uniform,  // a random internal link (degree-biased, as in classic LFR)
};

/// LFR-style generator parameters.
///
/// Degrees follow a power law with `degree_exponent`, truncated to
/// [min_degree, max_degree]. When `min_degree` is unset the lower cut-off is
/// solved so that the expected degree equals `mean_degree`. When
/// `max_degree` is unset it defaults to 50, clamped to fit the smallest
/// community. Communities have balanced sizes.
struct LfrConfig {
    std::size_t nodes = 1000;
    std::size_t communities = 30;
    double mu = 0.2;
    std::uint64_t seed = 1;
    double degree_exponent = 2.5;
    double mean_degree = 15.0;
    std::optional<double> min_degree;
    std::optional<std::size_t> max_degree;
    RewireSelection selection = RewireSelection::node_uniform;
    /// Rejected targets tolerated for one selected link before reselecting.
    std::size_t target_retries = 100;
};

class InfeasibleConfig : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GeneratedNetwork {
    Graph graph;
    Partition ground_truth;
    double achieved_mu = 0.0;
    /// Distinct nodes that kept their stub while one of their internal links
    /// was moved outside the community. Sorted ascending.
    std::vector<NodeId> rewired_nodes;
    std::size_t rewire_steps = 0;
    /// Degree sequence draw before phase 1 wiring.
    std::vector<std::size_t> target_degrees;
    /// Stubs that could not be wired without a self-loop or multi-edge.
    std::size_t dropped_stubs = 0;
};

/// Throws InfeasibleConfig for parameters that cannot be realized.
void validate(const LfrConfig& cfg);

GeneratedNetwork generate(const LfrConfig& cfg);

struct DegreeBias {
    double mean_degree_rewired = 0.0;
    double mean_degree_all = 0.0;
    double rank_sum_u = 0.0;  // Mann-Whitney U of the rewired sample
    double z = 0.0;
    double p_value = 1.0;     // two-sided, normal approximation with tie correction
};

/// Compares final degrees of rewired nodes against all nodes.
/// Throws std::invalid_argument if nothing was rewired.
DegreeBias bridge_degree_bias(const GeneratedNetwork& net);

/// Reads a flat "key = value" config (keys: nodes, communities, mu, seed,
/// degree_exponent, mean_degree, min_degree, max_degree, selection).
/// Unknown keys are errors. '#' starts a comment. Keys found are appended
/// to `keys` when given.
LfrConfig read_lfr_config(std::istream& in, LfrConfig base = {},
                          std::vector<std::string>* keys = nullptr);

}  // namespace bridgeness
