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

#include <cstdint>

#include <Eigen/Core>

#include "scriptogen/action_plan.hpp"

namespace scriptogen {

inline constexpr double kDefaultResolution = 10.0;  // px/mm

/// Binary ink image. Pixel (row, col) has its center at
/// (top_left.x + (col + 0.5) / resolution, top_left.y - (row + 0.5) / resolution)
/// in mm; rows grow downward.
struct Raster {
    using Pixels = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

    Pixels ink;  // 1 = ink, 0 = paper
    double resolution = kDefaultResolution;
    Point top_left = Point::Zero();

    Eigen::Index rows() const { return ink.rows(); }
    Eigen::Index cols() const { return ink.cols(); }
    bool empty() const { return ink.size() == 0; }
    Eigen::Index ink_count() const { return ink.template cast<Eigen::Index>().sum(); }
    double pixel_size() const { return 1.0 / resolution; }
};

}  // namespace scriptogen
