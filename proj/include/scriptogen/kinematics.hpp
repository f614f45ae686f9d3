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

// Effector-dependent layer: lognormal parameters for each plan segment,
// velocity superposition and integration to a sampled trajectory.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "scriptogen/action_plan.hpp"
#include "scriptogen/evolution.hpp"
#include "scriptogen/lognormal.hpp"
#include "scriptogen/trajectory.hpp"

namespace scriptogen {

struct WriterProfile {
    double k_sigma = 0.04;        // sigma = 0.01 + k_sigma
    double k_t = 0.04;            // s, constant inter-onset time
    double k_alpha = 0.2;         // s, maximum angle-dependent delay
    std::optional<double> k_d;    // amplitude gain; d_ref when unset
    double eps_t = 0.0;           // s, std-dev of onset jitter
    double eps_D = 0.0;           // std-dev of amplitude jitter, fraction of d_ref
    double mu = 0.0;
    std::uint64_t rng_seed = 0;

    void validate() const;
    double sigma() const { return 0.01 + k_sigma; }
};

/// Angle in degrees at `vertex` between the rays towards `prev` and `next`:
/// 180 for a straight continuation, 0 for a full reversal.
double interior_angle(const Point& prev, const Point& vertex, const Point& next);

struct StrokeSet {
    std::vector<LognormalStroke> strokes;
    std::size_t dropped = 0;  // strokes whose noisy amplitude collapsed to zero
};

/// One stroke per link of a pen-down polyline. Onsets accumulate
/// k_t + delta + k_alpha * delay_factor(angle) per stroke, the first stroke
/// taking a 180 degree angle. Two normal draws per stroke, onset jitter then
/// amplitude jitter, are taken from `rng`.
StrokeSet assign_parameters(std::span<const Point> segment, const WriterProfile& profile,
                            double d_ref, std::mt19937_64& rng);

/// Per pen-down segment of `plan`, seeded from profile.rng_seed.
std::vector<StrokeSet> assign_parameters(const TrajectoryPlan& plan, const WriterProfile& profile,
                                         double d_ref);

/// Sum of the strokes' velocity vectors sampled every `dt` from t = 0 until
/// every pulse has decayed below 1e-6 of the largest amplitude. Positions are
/// left at zero.
SampledTrajectory synthesize_velocity(std::span<const LognormalStroke> strokes,
                                      double dt = kDefaultSampleInterval);

/// Same, on a caller-chosen number of samples.
SampledTrajectory synthesize_velocity(std::span<const LognormalStroke> strokes, double dt,
                                      Eigen::Index samples);

/// Cumulative trapezoidal integration of the velocity columns from `start`.
SampledTrajectory integrate_trajectory(SampledTrajectory vel, const Point& start);

/// Full pipeline for one word: plan, evolution, parameters, velocity and
/// positions. Pen-down segments are laid out one after another in time; the
/// first sample of each segment is a pen-up sample at its first plan point.
SampledTrajectory synthesize_word(std::string_view word, const WriterProfile& profile,
                                  const EvolutionConfig& cfg, const GlyphLibrary& glyphs,
                                  double dt = kDefaultSampleInterval);

/// Synthesize an already evolved plan.
SampledTrajectory synthesize_plan(const TrajectoryPlan& plan, const WriterProfile& profile,
                                  double d_ref, double dt = kDefaultSampleInterval);

}  // namespace scriptogen
