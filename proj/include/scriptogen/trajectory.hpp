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

#include <Eigen/Core>

namespace scriptogen {

inline constexpr double kDefaultSampleInterval = 0.005;  // 200 Hz

/// Uniformly sampled pen trajectory. Columns are parallel arrays; sample k is
/// taken at t(k) = t(0) + k * dt.
struct SampledTrajectory {
    double dt = kDefaultSampleInterval;
    Eigen::ArrayXd t;
    Eigen::ArrayXd x;
    Eigen::ArrayXd y;
    Eigen::ArrayXd vx;
    Eigen::ArrayXd vy;
    Eigen::ArrayXd speed;
    Eigen::Array<bool, Eigen::Dynamic, 1> pen_down;

    Eigen::Index size() const { return t.size(); }
    bool empty() const { return t.size() == 0; }

    /// Allocate `n` zeroed, pen-down samples on the time grid starting at t0.
    void resize(Eigen::Index n, double t0 = 0.0);

    /// speed = hypot(vx, vy)
    void update_speed();

    double duration() const { return empty() ? 0.0 : t(size() - 1) - t(0); }
};

}  // namespace scriptogen
