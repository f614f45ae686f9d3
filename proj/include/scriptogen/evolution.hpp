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

#pragma once

// Maturity-driven simplification of trajectory plans.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "scriptogen/action_plan.hpp"

namespace scriptogen {

struct EvolutionConfig {
    double E = 100.0;  // percentage of plan points retained
    std::uint64_t rng_seed = 0;
    int max_legibility_retries = 1000;
};

/// Smallest admissible E for a glyph of `n_sl` points (keeps L >= 5).
double minimum_maturity(std::size_t n_sl);

/// Number of points retained out of `n_sl` at maturity `E`:
/// round(n_sl * E / 100) clamped to [5, n_sl].
std::size_t target_count(std::size_t n_sl, double E);

/// Sizes of `clusters` contiguous runs covering `n` items; sizes differ by at
/// most one and the remainder goes to the earliest runs.
std::vector<std::size_t> cluster_sizes(std::size_t n, std::size_t clusters);

/// Select target_count(n, E) points of every glyph of `plan`, in order:
/// a start point drawn from the first two, the final point, and one point
/// from each of L - 2 contiguous clusters of the remaining interior. A glyph
/// that had guide-tagged points keeps at least one of them; cluster draws are
/// repeated until it does. When L equals the glyph size the glyph is kept
/// whole.
TrajectoryPlan evolve_plan(const TrajectoryPlan& plan, const EvolutionConfig& cfg);

/// Same, drawing from a caller-supplied engine.
TrajectoryPlan evolve_plan(const TrajectoryPlan& plan, const EvolutionConfig& cfg,
                           std::mt19937_64& rng);

struct NoiseLevels {
    double eps_D = 0.0;  // fraction of d_ref
    double eps_t = 0.0;  // s
};

/// Execution noise for maturity E: linear from (0, 0) at E = 20 to
/// (0.3, 0.02) at E = 100, clamped outside that range.
NoiseLevels scale_noise(double E);

/// Writer stroke-width constant for maturity E: linear from 0.04 at E = 20
/// (adult) to 0 at E = 100 (child), clamped outside that range.
double scale_k_sigma(double E);

}  // namespace scriptogen
