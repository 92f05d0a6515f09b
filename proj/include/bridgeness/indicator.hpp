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
#include <vector>

#include "bridgeness/graph.hpp"

namespace bridgeness {

/// Symmetric C x C edge counts between communities; the diagonal holds
/// internal edge counts.
class CommunityLinkMatrix {
public:
    explicit CommunityLinkMatrix(std::size_t communities = 0)
        : size_(communities), counts_(communities * communities, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t operator()(std::size_t a, std::size_t b) const { return counts_[a * size_ + b]; }
    void add_edge(std::size_t a, std::size_t b);

    std::size_t internal_total() const;
    std::size_t external_total() const;  // upper triangle only

private:
    std::size_t size_;
    std::vector<std::size_t> counts_;
};

CommunityLinkMatrix community_link_matrix(const Graph& g, const Partition& p);

/// G(i) = sum over foreign communities J touched by i of 1 / links(I, J).
/// Zero exactly for nodes without an inter-community edge.
std::vector<double> global_indicator(const Graph& g, const Partition& p);

/// Share of edges whose endpoints lie in different communities; 0 for an
/// edgeless graph.
double inter_community_fraction(const Graph& g, const Partition& p);

}  // namespace bridgeness
