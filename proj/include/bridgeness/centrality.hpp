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
#include <map>
#include <vector>

#include "bridgeness/graph.hpp"

namespace bridgeness {

/// Per-node betweenness and its split into a bridgeness (global) part and a
/// local part. All sums run over unordered node pairs, unnormalized, on
/// unweighted shortest paths.
///
/// Invariants: bc[j] == bridgeness[j] + local[j] and 0 <= bridgeness[j] <= bc[j].
struct CentralityResult {
    std::vector<double> bc;
    std::vector<double> bridgeness;
    std::vector<double> local;

    std::size_t size() const noexcept { return bc.size(); }
};

struct CentralityOptions {
    /// 0 selects the OpenMP default (or BRIDGENESS_WORKERS when set);
    /// 1 runs the serial reference kernel.
    int workers = 0;
};

/// Brandes betweenness over unordered pairs.
std::vector<double> betweenness(const Graph& g, const CentralityOptions& options = {});

/// Exact decomposition: bridgeness counts only pairs {i,k} with neither
/// endpoint in N(j) (nor j itself). Runs in O(n*m) using one Brandes pass
/// per source plus a correction for neighbor pairs at distance two.
CentralityResult bridgeness_exact(const Graph& g, const CentralityOptions& options = {});

/// Direct evaluation of the pair sums from all-pairs distances and path
/// counts. O(n^3) time and O(n^2) memory; meant as a reference for n up to
/// a few hundred.
CentralityResult bridgeness_bruteforce(const Graph& g);

/// Variant that drops the dependency of source s on w only when s is within
/// distance one of w. Pairs with exactly one endpoint in N(w) therefore still
/// contribute half their weight, so the result is an upper bound on exact
/// bridgeness rather than equal to it.
std::vector<double> bridgeness_si_compat(const Graph& g, const CentralityOptions& options = {});

/// Mean of local/bc over nodes of each degree, skipping nodes with bc == 0.
std::map<std::size_t, double> locterm_by_degree(const CentralityResult& result, const Graph& g);

/// Worker count that `options` resolves to.
int resolve_workers(const CentralityOptions& options);

namespace kernels {

/// Raw ordered-pair sums produced by one sweep over all sources.
///   bc[w]        = sum_s delta_s(w)
///   near[w]      = sum_{s in N(w)} delta_s(w)
///   pairs[w]     = sum_{s != t in N(w), d(s,t) = 2} 1 / sigma_st
///   far[w]       = sum_{s : d(s,w) > 1} delta_s(w)
struct OrderedSums {
    std::vector<double> bc;
    std::vector<double> near;
    std::vector<double> pairs;
    std::vector<double> far;
};

/// Reference kernel: sources visited in ascending order on one thread.
OrderedSums accumulate_serial(const Graph& g);

/// OpenMP kernel: static source partition, per-thread partials reduced in
/// thread order. Bit-identical across runs for a fixed worker count.
OrderedSums accumulate_parallel(const Graph& g, int workers);

}  // namespace kernels

}  // namespace bridgeness
