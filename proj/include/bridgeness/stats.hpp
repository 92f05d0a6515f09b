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

namespace bridgeness::stats {

struct RankSumTest {
    double u = 0.0;        // Mann-Whitney U for the first sample
    double z = 0.0;
    double p_value = 1.0;  // two-sided
};

/// Wilcoxon rank-sum / Mann-Whitney U test, normal approximation with tie
/// correction. Both samples must be non-empty.
RankSumTest rank_sum(std::span<const double> a, std::span<const double> b);

struct Correlation {
    double r = 0.0;
    double t = 0.0;
    double p_value = 1.0;  // two-sided, Student t with n-2 degrees of freedom
    std::size_t n = 0;
};

/// Pearson correlation. Needs at least 3 points and non-constant inputs.
Correlation pearson(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> x);

}  // namespace bridgeness::stats
