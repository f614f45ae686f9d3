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
#include <iosfwd>
#include <optional>
#include <string>

#include "scriptogen/evolution.hpp"
#include "scriptogen/kinematics.hpp"
#include "scriptogen/render.hpp"

namespace scriptogen {

/// Everything one `synth` run needs. A JSON config file with the same keys
/// overrides command-line values.
struct RunConfig {
    std::string word;
    WriterProfile profile{};
    bool explicit_eps_t = false;  // otherwise derived from E
    bool explicit_eps_D = false;
    bool explicit_k_sigma = false;  // otherwise derived from E
    EvolutionConfig evolution{};
    std::uint64_t seed = 0;
    std::string glyphs_path;  // empty: built-in library
    std::string traj_path;
    std::string svg_path;
    std::string png_path;
    double resolution = kDefaultResolution;
    InkModel ink{};
    double dt = kDefaultSampleInterval;
};

/// Apply the keys present in a JSON config file to `cfg`.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Command-line entry point; returns the process exit status.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace scriptogen
