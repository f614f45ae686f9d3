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

#include "scriptogen/render.hpp"

#include <algorithm>
#include <cmath>

#include "scriptogen/errors.hpp"

namespace scriptogen {

void InkModel::validate() const {
    if (!(nib_radius > 0.0)) throw DomainError("nib_radius must be > 0");
    if (!(speed_thinning >= 0.0 && speed_thinning <= 1.0))
        throw DomainError("speed_thinning must lie in [0, 1]");
}

namespace {

void stamp(Raster& img, const Point& c, double radius_mm) {
    const double res = img.resolution;
    // continuous pixel coordinates of the disk center
    const double cu = (c.x() - img.top_left.x()) * res - 0.5;
    const double cv = (img.top_left.y() - c.y()) * res - 0.5;
    const double r = radius_mm * res;
    const double r2 = r * r;
    const auto c0 = std::max<Eigen::Index>(0, static_cast<Eigen::Index>(std::floor(cu - r)));
    const auto c1 = std::min<Eigen::Index>(img.cols() - 1, static_cast<Eigen::Index>(std::ceil(cu + r)));
    const auto r0 = std::max<Eigen::Index>(0, static_cast<Eigen::Index>(std::floor(cv - r)));
    const auto r1 = std::min<Eigen::Index>(img.rows() - 1, static_cast<Eigen::Index>(std::ceil(cv + r)));
    for (Eigen::Index row = r0; row <= r1; ++row) {
        const double dv = static_cast<double>(row) - cv;
        for (Eigen::Index col = c0; col <= c1; ++col) {
            const double du = static_cast<double>(col) - cu;
            if (du * du + dv * dv <= r2) img.ink(row, col) = 1;
        }
    }
}

}  // namespace

Raster render_offline(const SampledTrajectory& traj, const InkModel& ink, double resolution) {
    ink.validate();
    if (!(resolution > 0.0)) throw DomainError("resolution must be > 0");

    Raster img;
    img.resolution = resolution;
    if (traj.empty()) {
        img.ink = Raster::Pixels::Zero(1, 1);
        return img;
    }

    const double margin = ink.nib_radius;
    const double x0 = traj.x.minCoeff() - margin;
    const double x1 = traj.x.maxCoeff() + margin;
    const double y0 = traj.y.minCoeff() - margin;
    const double y1 = traj.y.maxCoeff() + margin;
    const auto cols = std::max<Eigen::Index>(1, static_cast<Eigen::Index>(std::ceil((x1 - x0) * resolution - 1e-9)));
    const auto rows = std::max<Eigen::Index>(1, static_cast<Eigen::Index>(std::ceil((y1 - y0) * resolution - 1e-9)));
    img.top_left = Point(x0, y1);
    img.ink = Raster::Pixels::Zero(rows, cols);

    double max_speed = 0.0;
    for (Eigen::Index k = 0; k < traj.size(); ++k)
        if (traj.pen_down(k)) max_speed = std::max(max_speed, traj.speed(k));

    auto radius = [&](Eigen::Index k) {
        const double rel = max_speed > 0.0 ? traj.speed(k) / max_speed : 0.0;
        return ink.nib_radius * (1.0 - ink.speed_thinning * rel);
    };

    for (Eigen::Index k = 0; k < traj.size(); ++k) {
        if (!traj.pen_down(k)) continue;
        const Point p(traj.x(k), traj.y(k));
        const double r = radius(k);
        stamp(img, p, r);
        if (k + 1 < traj.size() && traj.pen_down(k + 1)) {
            const Point q(traj.x(k + 1), traj.y(k + 1));
            const double rq = radius(k + 1);
            const double step = 0.25 * std::min(r, rq);
            const auto n = static_cast<int>(std::ceil((q - p).norm() / step));
            for (int i = 1; i < n; ++i) {
                const double f = static_cast<double>(i) / n;
                stamp(img, p + f * (q - p), r + f * (rq - r));
            }
        }
    }
    return img;
}

}  // namespace scriptogen
