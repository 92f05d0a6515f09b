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

#include <cstdint>
#include <vector>

#include "bridgeness/graph.hpp"

namespace bridgeness {

struct LouvainConfig {
    std::uint64_t seed = 1;
    int max_passes = 100;
    double min_gain = 1e-7;  // stop when a pass improves Q by less than this
};

struct LouvainResult {
    Partition partition;
    /// Modularity of the flat partition after each completed pass; index 0
    /// is the singleton partition before the first pass.
    std::vector<double> pass_modularity;
};

/// Newman-Girvan modularity with resolution 1, ignoring edge weights.
/// Throws ValidationError for a graph without edges.
double modularity(const Graph& g, const Partition& p);

/// Louvain optimization: shuffled local moves, then aggregation, repeated.
/// A node moves only on strictly positive gain over staying; ties between
/// candidate communities go to the lowest label. Same seed, same result.
LouvainResult louvain_detailed(const Graph& g, const LouvainConfig& cfg = {});

inline Partition louvain(const Graph& g, const LouvainConfig& cfg = {}) {
    return louvain_detailed(g, cfg).partition;
}

/// Fraction of nodes on which `found` agrees with `truth` under the
/// one-to-one label matching that maximizes agreement.
double matched_agreement(const Partition& found, const Partition& truth);

}  // namespace bridgeness
