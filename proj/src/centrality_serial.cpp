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

#include "brandes_sweep.hpp"

namespace bridgeness::kernels {

OrderedSums accumulate_serial(const Graph& g) {
    const std::size_t n = g.node_count();
    auto sums = detail::zero_sums(n);
    detail::SweepState state(n);
    for (NodeId s = 0; s < n; ++s) detail::sweep(g, s, state, sums);
    return sums;
}

}  // namespace bridgeness::kernels
