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

// Offline rendering and file formats.

#include <string>

#include "scriptogen/raster.hpp"
#include "scriptogen/trajectory.hpp"

namespace scriptogen {

/// Disk-stamp pen: radius nib_radius * (1 - speed_thinning * speed / max_speed).
struct InkModel {
    double nib_radius = 0.2;     // mm
    double speed_thinning = 0.3;

    void validate() const;
};

/// Stamp the nib along every pen-down sample (and along the straight link to
/// the next pen-down sample, so fast strokes stay connected). The canvas is the
/// bounding box of the trajectory plus one nib radius.
Raster render_offline(const SampledTrajectory& traj, const InkModel& ink = {},
                      double resolution = kDefaultResolution);

/// `scriptogen-traj v1` text format:
///
///     scriptogen-traj v1
///     dt <seconds>
///     samples <count>
///     <t> <x> <y> <vx> <vy> <pen_down>     (one line per sample, 6 decimals)
void write_trajectory(std::ostream& out, const SampledTrajectory& traj);
SampledTrajectory read_trajectory(std::istream& in);

void export_trajectory(const SampledTrajectory& traj, const std::string& path);
SampledTrajectory import_trajectory(const std::string& path);

/// One <polyline> per pen-down run, millimetre user units, y flipped so the
/// image reads upright.
void write_svg(std::ostream& out, const SampledTrajectory& traj, const InkModel& ink = {});
void export_svg(const SampledTrajectory& traj, const InkModel& ink, const std::string& path);

/// 8-bit grayscale PNG, black ink on white. The resolution is stored in the
/// pHYs chunk and restored on read (default 10 px/mm when absent).
void export_png(const Raster& image, const std::string& path);
Raster import_png(const std::string& path);

/// Write `contents` to `path` through a temporary file and an atomic rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace scriptogen
