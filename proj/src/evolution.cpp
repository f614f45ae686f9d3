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

#include "scriptogen/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "scriptogen/errors.hpp"

namespace scriptogen {

namespace {

constexpr std::size_t kMinRetained = 5;

struct GlyphSelection {
    std::vector<std::size_t> indices;  // absolute indices into the plan
};

bool any_tagged(const TrajectoryPlan& plan, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
        if (plan.points[i].tag != GuideTag::none) return true;
    return false;
}

// A selection that puts two coinciding points next to each other would create
// a zero-length stroke.
bool selection_distinct(const TrajectoryPlan& plan, const std::vector<std::size_t>& sel) {
    for (std::size_t k = 1; k < sel.size(); ++k)
        if (plan.points[sel[k]].position == plan.points[sel[k - 1]].position) return false;
    return true;
}

bool selection_tagged(const TrajectoryPlan& plan, const std::vector<std::size_t>& sel) {
    return std::any_of(sel.begin(), sel.end(),
                       [&](std::size_t i) { return plan.points[i].tag != GuideTag::none; });
}

std::vector<std::size_t> select_glyph(const TrajectoryPlan& plan, std::size_t begin,
                                      std::size_t end, double E, int max_retries,
                                      std::mt19937_64& rng) {
    const std::size_t n = end - begin;
    const std::size_t L = target_count(n, E);

    std::vector<std::size_t> sel;
    if (L == n) {
        for (std::size_t i = begin; i < end; ++i) sel.push_back(i);
        return sel;
    }

    std::uniform_int_distribution<int> coin(0, 1);
    const std::size_t start = begin + static_cast<std::size_t>(coin(rng));

    // interior: everything except the first two and the last point
    const auto sizes = cluster_sizes(n - 3, L - 2);
    const bool must_tag = any_tagged(plan, begin, end);

    for (int attempt = 0;; ++attempt) {
        sel.clear();
        sel.push_back(start);
        std::size_t first = begin + 2;
        for (std::size_t size : sizes) {
            std::uniform_int_distribution<std::size_t> pick(0, size - 1);
            sel.push_back(first + pick(rng));
            first += size;
        }
        sel.push_back(end - 1);

        if ((!must_tag || selection_tagged(plan, sel)) && selection_distinct(plan, sel)) return sel;
        if (attempt >= max_retries) {
            const char letter = plan.points[begin].glyph < plan.letters.size()
                                    ? plan.letters[plan.points[begin].glyph]
                                    : '?';
            throw LegibilityError(letter, std::string("no guide-line point of glyph '") + letter +
                                              "' survived " + std::to_string(max_retries) +
                                              " resamplings");
        }
    }
}

}  // namespace

double minimum_maturity(std::size_t n_sl) {
    return 100.0 * static_cast<double>(kMinRetained) / static_cast<double>(n_sl);
}

std::size_t target_count(std::size_t n_sl, double E) {
    if (n_sl < kMinRetained)
        throw InfeasibleMaturityError("a plan needs at least 5 points, got " + std::to_string(n_sl));
    if (!std::isfinite(E) || E * static_cast<double>(n_sl) < 500.0 * (1.0 - 1e-12)) {
        throw InfeasibleMaturityError("E = " + std::to_string(E) + " is below the minimum " +
                                      std::to_string(minimum_maturity(n_sl)) + " for " +
                                      std::to_string(n_sl) + " points");
    }
    const double raw = std::round(static_cast<double>(n_sl) * E / 100.0);
    const auto L = static_cast<std::size_t>(std::max(raw, 0.0));
    return std::clamp(L, kMinRetained, n_sl);
}

std::vector<std::size_t> cluster_sizes(std::size_t n, std::size_t clusters) {
    if (clusters == 0 || clusters > n)
        throw DomainError("cannot split " + std::to_string(n) + " points into " +
                          std::to_string(clusters) + " non-empty clusters");
    std::vector<std::size_t> sizes(clusters, n / clusters);
    for (std::size_t i = 0; i < n % clusters; ++i) ++sizes[i];
    return sizes;
}

TrajectoryPlan evolve_plan(const TrajectoryPlan& plan, const EvolutionConfig& cfg) {
    std::mt19937_64 rng(cfg.rng_seed);
    return evolve_plan(plan, cfg, rng);
}

TrajectoryPlan evolve_plan(const TrajectoryPlan& plan, const EvolutionConfig& cfg,
                           std::mt19937_64& rng) {
    plan.validate();
    if (cfg.max_legibility_retries < 0) throw DomainError("max_legibility_retries must be >= 0");

    const std::size_t n_glyphs = std::max<std::size_t>(plan.glyph_count(), 1);
    std::vector<std::size_t> keep;
    keep.reserve(plan.n_sl());
    // Check feasibility of every glyph before drawing anything.
    for (std::size_t g = 0; g < n_glyphs; ++g) {
        const auto [b, e] = plan.glyph_range(g);
        target_count(e - b, cfg.E);
    }
    for (std::size_t g = 0; g < n_glyphs; ++g) {
        const auto [b, e] = plan.glyph_range(g);
        const auto sel = select_glyph(plan, b, e, cfg.E, cfg.max_legibility_retries, rng);
        keep.insert(keep.end(), sel.begin(), sel.end());
    }

    TrajectoryPlan out;
    out.letters = plan.letters;
    out.points.reserve(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) {
        out.points.push_back(plan.points[keep[k]]);
        if (k > 0) {
            // a link is pen-down only if every original link it spans is
            bool down = true;
            for (std::size_t i = keep[k - 1]; i < keep[k]; ++i) down = down && plan.pen_down[i];
            out.pen_down.push_back(down);
        }
    }
    return out;
}

NoiseLevels scale_noise(double E) {
    const double f = std::clamp((E - 20.0) / 80.0, 0.0, 1.0);
    return {0.3 * f, 0.02 * f};
}

double scale_k_sigma(double E) {
    return 0.04 * std::clamp((100.0 - E) / 80.0, 0.0, 1.0);
}

}  // namespace scriptogen
