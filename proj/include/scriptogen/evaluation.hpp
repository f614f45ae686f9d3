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

// Measurement battery: velocity peaks, static stroke estimation, fuzzy
// feature similarity, one-way ANOVA and the maturity sweep that ties them
// together.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "scriptogen/action_plan.hpp"
#include "scriptogen/kinematics.hpp"
#include "scriptogen/raster.hpp"
#include "scriptogen/render.hpp"

namespace scriptogen {

// --- dynamics --------------------------------------------------------------

inline constexpr double kDefaultPeakProminence = 0.05;

/// Local maxima of `signal` whose topographic prominence exceeds
/// `prominence * max(signal)`. Flat-topped maxima count once; the end samples
/// are never peaks.
std::vector<Eigen::Index> find_peaks(const Eigen::Ref<const Eigen::ArrayXd>& signal,
                                     double prominence = kDefaultPeakProminence);

std::size_t count_velocity_peaks(const SampledTrajectory& traj,
                                  double prominence = kDefaultPeakProminence);

// --- static strokes --------------------------------------------------------

/// Curvature above which a skeleton polyline is cut into two strokes.
inline constexpr double kStrokeSplitCurvature = 60.0;  // deg/mm
/// Arc length on each side of a point used to estimate its turning angle.
inline constexpr double kCurvatureWindow = 1.4;  // mm
/// Skeleton branches from a free end to a junction shorter than this are
/// thinning artefacts and get pruned.
inline constexpr double kSpurLength = 0.6;  // mm
/// Two branches meeting at a junction are one stroke when the path through
/// the junction bends by less than this.
inline constexpr double kContinuationAngle = 60.0;  // deg

/// One-pixel-wide 8-connected skeleton (Zhang-Suen thinning).
Raster skeletonize(const Raster& image);

struct SkeletonPolyline {
    std::vector<Point> points;  // mm
    bool closed = false;
    int start_junction = -1;  // junction cluster id, -1 at a free end
    int end_junction = -1;
};

/// Polylines of a skeleton between free ends and junctions; closed loops
/// without junctions come out as one closed polyline.
std::vector<SkeletonPolyline> trace_skeleton(const Raster& skeleton);

/// Per-point turning curvature (deg/mm) using chords of `window` mm on each
/// side; NaN where the window does not fit on an open polyline.
std::vector<double> polyline_curvature(const SkeletonPolyline& line, double window = kCurvatureWindow);

/// Approximate stroke count of a static image: skeleton polylines are joined
/// across junctions where they continue smoothly, then cut at curvature
/// maxima above kStrokeSplitCurvature. Blank image gives 0.
std::size_t estimate_static_strokes(const Raster& image);

// --- fuzzy features --------------------------------------------------------

inline constexpr int kZoneCols = 9;
inline constexpr int kZoneRows = 5;
inline constexpr int kZoneFeatures = kZoneCols * kZoneRows;
inline constexpr int kCurvatureFeatures = 5;
inline constexpr int kShapeFeatures = 4;
inline constexpr int kFeatureCount = kZoneFeatures + kCurvatureFeatures + kShapeFeatures;

/// 54 memberships in [0, 1]: 45 zone densities, 5 turning-angle bins,
/// 4 word-shape cues (ascender, descender, aspect, ink fraction).
using FeatureVector = Eigen::Array<double, kFeatureCount, 1>;

FeatureVector extract_features(const Raster& image, const GuideLines& layout);

struct SimilarityWeights {
    double alpha = 1.0;
    double beta = 1.0;
};

/// Ratio-model contrast f(A^B) / (f(A^B) + alpha f(A-B) + beta f(B-A)) with
/// elementwise min, clipped differences and f = sum. Two all-zero vectors
/// score 1.
double similarity(const Eigen::Ref<const Eigen::ArrayXd>& a, const Eigen::Ref<const Eigen::ArrayXd>& b,
                  const SimilarityWeights& w = {});

// --- statistics ------------------------------------------------------------

/// p-value of the one-way ANOVA F test across `groups`.
double anova_one_way(const std::vector<std::vector<double>>& groups);

/// Linear-interpolated quantile (0 <= q <= 1) of unsorted data.
double quantile(std::vector<double> values, double q);

// --- maturity sweep --------------------------------------------------------

struct SimilaritySummary {
    double q1 = 0.0;
    double q2 = 0.0;
    double q3 = 0.0;
    double min = 0.0;
};

struct MaturityRow {
    double E = 0.0;
    double mean_peaks = 0.0;
    double mean_static_strokes = 0.0;
    std::optional<SimilaritySummary> similarity;  // absent with fewer than two samples

    std::vector<double> peaks;
    std::vector<double> static_strokes;
    std::vector<double> similarities;  // one per unordered pair of samples
};

struct MaturityOptions {
    std::uint64_t base_seed = 0;
    bool scale_noise_with_E = true;  // eps_D, eps_t from scale_noise(E)
    bool scale_sigma_with_E = true;  // k_sigma from scale_k_sigma(E)
    InkModel ink{};
    double resolution = kDefaultResolution;
    SimilarityWeights weights{};
    double prominence = kDefaultPeakProminence;
    double dt = kDefaultSampleInterval;
};

/// Synthesize `seeds` samples of `word` for every E and measure them. Sample s
/// uses selection seed base_seed + s. Cells are computed concurrently and
/// collected in (E, seed) order.
std::vector<MaturityRow> maturity_curve(std::string_view word, const WriterProfile& profile,
                                        const std::vector<double>& E_values, std::size_t seeds,
                                        const GlyphLibrary& glyphs, const MaturityOptions& opts = {});

/// Comma-separated table with header
/// `E,mean_peaks,mean_static_strokes,sim_q1,sim_q2,sim_q3,sim_min`; absent
/// similarity fields are left empty.
void write_maturity_table(std::ostream& out, const std::vector<MaturityRow>& rows);

}  // namespace scriptogen
