// Copyright 2026 The Scriptogen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/fisher_f.hpp>

#include "scriptogen/errors.hpp"
#include "scriptogen/evaluation.hpp"

namespace scriptogen {

double anova_one_way(const std::vector<std::vector<double>>& groups) {
    if (groups.size() < 2) throw DomainError("ANOVA needs at least two groups");
    double total = 0.0;
    std::size_t n = 0;
    for (const auto& g : groups) {
        if (g.size() < 2) throw DomainError("every ANOVA group needs at least two values");
        for (double v : g) {
            if (!std::isfinite(v)) throw DomainError("ANOVA values must be finite");
            total += v;
        }
        n += g.size();
    }
    const double grand = total / static_cast<double>(n);

    double between = 0.0;
    double within = 0.0;
    for (const auto& g : groups) {
        const double mean = std::accumulate(g.begin(), g.end(), 0.0) / static_cast<double>(g.size());
        between += static_cast<double>(g.size()) * (mean - grand) * (mean - grand);
        for (double v : g) within += (v - mean) * (v - mean);
    }
    const double df_between = static_cast<double>(groups.size() - 1);
    const double df_within = static_cast<double>(n - groups.size());

    // relative to the data scale, so rounding noise in identical groups
    // reads as zero
    const double scale = std::max(1.0, grand * grand) * static_cast<double>(n);
    const double eps = 1e-24 * scale;
    if (between <= eps && within <= eps) return 1.0;
    if (within <= eps) return 0.0;
    if (between <= eps) return 1.0;

    const double F = (between / df_between) / (within / df_within);
    const boost::math::fisher_f dist(df_between, df_within);
    return std::clamp(boost::math::cdf(boost::math::complement(dist, F)), 0.0, 1.0);
}

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw DomainError("quantile of an empty sample");
    if (!(q >= 0.0 && q <= 1.0)) throw DomainError("quantile level must lie in [0, 1]");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    const double f = pos - static_cast<double>(lo);
    return values[lo] + f * (values[hi] - values[lo]);
}

}  // namespace scriptogen
