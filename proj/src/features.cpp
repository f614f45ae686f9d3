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

#include "scriptogen/evaluation.hpp"
#include "scriptogen/errors.hpp"

namespace scriptogen {

namespace {

constexpr double kZoneSaturation = 0.5;   // ink density giving full membership
constexpr double kTurnSampleStep = 0.5;   // mm between curvature samples
constexpr double kCorpusProjection = 0.5; // row ink >= this * max row ink is corpus

double ramp(double v, double full) { return std::clamp(v / full, 0.0, 1.0); }

struct Box {
    Eigen::Index r0, r1, c0, c1;  // inclusive
    Eigen::Index height() const { return r1 - r0 + 1; }
    Eigen::Index width() const { return c1 - c0 + 1; }
};

Box ink_box(const Raster& img) {
    Box b{img.rows(), -1, img.cols(), -1};
    for (Eigen::Index r = 0; r < img.rows(); ++r)
        for (Eigen::Index c = 0; c < img.cols(); ++c)
            if (img.ink(r, c)) {
                b.r0 = std::min(b.r0, r);
                b.r1 = std::max(b.r1, r);
                b.c0 = std::min(b.c0, c);
                b.c1 = std::max(b.c1, c);
            }
    return b;
}

}  // namespace

FeatureVector extract_features(const Raster& image, const GuideLines& layout) {
    layout.validate();
    FeatureVector fv = FeatureVector::Zero();
    if (image.empty() || image.ink_count() == 0) return fv;

    const Box box = ink_box(image);
    const auto ink = image.ink.block(box.r0, box.c0, box.height(), box.width()).cast<double>();

    // zones: kZoneRows x kZoneCols cells over the ink bounding box
    for (int zr = 0; zr < kZoneRows; ++zr) {
        const Eigen::Index r0 = box.height() * zr / kZoneRows;
        const Eigen::Index r1 = box.height() * (zr + 1) / kZoneRows;
        for (int zc = 0; zc < kZoneCols; ++zc) {
            const Eigen::Index c0 = box.width() * zc / kZoneCols;
            const Eigen::Index c1 = box.width() * (zc + 1) / kZoneCols;
            double density = 0.0;
            if (r1 > r0 && c1 > c0) {
                density = ink.block(r0, c0, r1 - r0, c1 - c0).sum() /
                          static_cast<double>((r1 - r0) * (c1 - c0));
            } else {
                // zone thinner than a pixel: sample the covering pixel
                const Eigen::Index rr = std::min(r0, box.height() - 1);
                const Eigen::Index cc = std::min(c0, box.width() - 1);
                density = ink(rr, cc);
            }
            fv(zr * kZoneCols + zc) = ramp(density, kZoneSaturation);
        }
    }

    // curvature: histogram of turning angles along the skeleton
    {
        Eigen::Array<double, kCurvatureFeatures, 1> hist = decltype(hist)::Zero();
        const auto lines = trace_skeleton(skeletonize(image));
        for (const auto& line : lines) {
            const auto kappa = polyline_curvature(line);
            double s = 0.0;
            double last_s = -1e300;
            for (std::size_t i = 0; i < line.points.size(); ++i) {
                if (i > 0) s += (line.points[i] - line.points[i - 1]).norm();
                if (std::isnan(kappa[i]) || s - last_s < kTurnSampleStep - 1e-9) continue;
                last_s = s;
                const double turn = std::clamp(kappa[i] * kCurvatureWindow, 0.0, 180.0);
                const int bin = std::min(kCurvatureFeatures - 1, static_cast<int>(turn / 36.0));
                hist(bin) += 1.0;
            }
        }
        const double total = hist.sum();
        if (total > 0.0) fv.segment<kCurvatureFeatures>(kZoneFeatures) = hist / total;
    }

    // word shape
    {
        const Eigen::ArrayXd rows = ink.rowwise().sum();
        const double peak = rows.maxCoeff();
        Eigen::Index top = 0, bottom = rows.size() - 1;
        while (top < bottom && rows(top) < kCorpusProjection * peak) ++top;
        while (bottom > top && rows(bottom) < kCorpusProjection * peak) --bottom;
        const double corpus = static_cast<double>(bottom - top + 1);

        const double body = layout.corpus_top - layout.baseline;
        const double asc_room = (layout.upper1 - layout.corpus_top) / body;
        const double desc_room = (layout.baseline - layout.lower2) / body;

        const double above = static_cast<double>(top);
        const double below = static_cast<double>(rows.size() - 1 - bottom);
        const double aspect = static_cast<double>(box.width()) / static_cast<double>(box.height());

        const int base = kZoneFeatures + kCurvatureFeatures;
        fv(base + 0) = ramp(above / corpus, asc_room);
        fv(base + 1) = ramp(below / corpus, desc_room);
        fv(base + 2) = ramp(aspect, 3.0);
        fv(base + 3) = std::clamp(ink.mean(), 0.0, 1.0);
    }
    return fv;
}

double similarity(const Eigen::Ref<const Eigen::ArrayXd>& a, const Eigen::Ref<const Eigen::ArrayXd>& b,
                  const SimilarityWeights& w) {
    if (a.size() != b.size())
        throw DimensionError("feature vectors differ in length: " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
    if (!(w.alpha >= 0.0) || !(w.beta >= 0.0) || !std::isfinite(w.alpha) || !std::isfinite(w.beta))
        throw DomainError("similarity weights must be finite and >= 0");
    const double common = a.min(b).sum();
    const double a_only = (a - b).max(0.0).sum();
    const double b_only = (b - a).max(0.0).sum();
    const double denom = common + w.alpha * a_only + w.beta * b_only;
    if (denom == 0.0) return 1.0;
    return common / denom;
}

}  // namespace scriptogen
