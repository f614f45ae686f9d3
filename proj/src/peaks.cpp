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

#include "scriptogen/evaluation.hpp"

namespace scriptogen {

std::vector<Eigen::Index> find_peaks(const Eigen::Ref<const Eigen::ArrayXd>& signal,
                                     double prominence) {
    std::vector<Eigen::Index> peaks;
    const Eigen::Index n = signal.size();
    if (n < 3) return peaks;
    const double top = signal.maxCoeff();
    if (!(top > 0.0)) return peaks;
    const double min_prominence = prominence * top;

    Eigen::Index i = 1;
    while (i < n - 1) {
        if (signal(i) > signal(i - 1)) {
            // walk across a possible plateau
            Eigen::Index j = i;
            while (j + 1 < n && signal(j + 1) == signal(i)) ++j;
            if (j + 1 < n && signal(j + 1) < signal(i)) {
                const Eigen::Index peak = (i + j) / 2;
                const double h = signal(i);

                double left_min = h;
                for (Eigen::Index k = i - 1; k >= 0 && signal(k) <= h; --k)
                    left_min = std::min(left_min, signal(k));
                double right_min = h;
                for (Eigen::Index k = j + 1; k < n && signal(k) <= h; ++k)
                    right_min = std::min(right_min, signal(k));

                if (h - std::max(left_min, right_min) > min_prominence) peaks.push_back(peak);
            }
            i = j + 1;
        } else {
            ++i;
        }
    }
    return peaks;
}

std::size_t count_velocity_peaks(const SampledTrajectory& traj, double prominence) {
    return find_peaks(traj.speed, prominence).size();
}

}  // namespace scriptogen
