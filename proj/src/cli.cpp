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

#include "scriptogen/cli.hpp"

#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scriptogen/errors.hpp"
#include "scriptogen/evaluation.hpp"

namespace scriptogen {

namespace {

// The writer-noise stream is decorrelated from the point-selection stream
// that uses the seed directly.
constexpr std::uint64_t kProfileSeedMix = 0x9E3779B97F4A7C15ULL;

void add_profile_flags(CLI::App& cmd, RunConfig& cfg) {
    auto& p = cfg.profile;
    cmd.add_option_function<double>("--ksigma", [&](double v) { p.k_sigma = v; cfg.explicit_k_sigma = true; },
                                    "stroke-width constant, sigma = 0.01 + ksigma; default follows E");
    cmd.add_option("--kt", p.k_t, "constant inter-onset time (s)")->capture_default_str();
    cmd.add_option("--kalpha", p.k_alpha, "maximum angle-dependent delay (s)")->capture_default_str();
    cmd.add_option_function<double>("--kd", [&p](double v) { p.k_d = v; },
                                    "amplitude gain (default: grid pitch)");
    cmd.add_option_function<double>("--eps-t", [&](double v) { p.eps_t = v; cfg.explicit_eps_t = true; },
                                    "onset jitter std-dev (s); default follows E");
    cmd.add_option_function<double>("--eps-d", [&](double v) { p.eps_D = v; cfg.explicit_eps_D = true; },
                                    "amplitude jitter std-dev (fraction of pitch); default follows E");
    cmd.add_option("--glyphs", cfg.glyphs_path, "glyph library file (default: built-in)");
    cmd.add_option("--dt", cfg.dt, "sample interval (s)")->capture_default_str();
}

GlyphLibrary load_glyphs(const std::string& path) {
    return path.empty() ? default_glyph_library() : GlyphLibrary::load(path);
}

template <typename T>
void read_key(const nlohmann::json& j, const char* key, T& dst) {
    if (j.contains(key)) dst = j.at(key).get<T>();
}

WriterProfile resolved_profile(const RunConfig& cfg) {
    WriterProfile p = cfg.profile;
    const NoiseLevels noise = scale_noise(cfg.evolution.E);
    if (!cfg.explicit_eps_t) p.eps_t = noise.eps_t;
    if (!cfg.explicit_eps_D) p.eps_D = noise.eps_D;
    if (!cfg.explicit_k_sigma) p.k_sigma = scale_k_sigma(cfg.evolution.E);
    p.rng_seed = cfg.seed ^ kProfileSeedMix;
    return p;
}

int cmd_synth(RunConfig cfg, const std::string& config_path, std::ostream& out) {
    if (!config_path.empty()) apply_config_file(cfg, config_path);
    if (cfg.word.empty()) throw DomainError("synth needs --word");
    cfg.evolution.rng_seed = cfg.seed;

    const GlyphLibrary glyphs = load_glyphs(cfg.glyphs_path);
    const WriterProfile profile = resolved_profile(cfg);
    const SampledTrajectory traj = synthesize_word(cfg.word, profile, cfg.evolution, glyphs, cfg.dt);

    // produce everything in memory first so a failure leaves no output behind
    std::string traj_text, svg_text;
    if (!cfg.traj_path.empty()) {
        std::ostringstream s;
        write_trajectory(s, traj);
        traj_text = s.str();
    }
    if (!cfg.svg_path.empty()) {
        std::ostringstream s;
        write_svg(s, traj, cfg.ink);
        svg_text = s.str();
    }
    std::optional<Raster> image;
    if (!cfg.png_path.empty()) image = render_offline(traj, cfg.ink, cfg.resolution);

    if (!cfg.traj_path.empty()) write_file_atomic(cfg.traj_path, traj_text);
    if (!cfg.svg_path.empty()) write_file_atomic(cfg.svg_path, svg_text);
    if (image) export_png(*image, cfg.png_path);

    char line[256];
    std::snprintf(line, sizeof line, "word=%s E=%g seed=%llu samples=%lld duration=%.3f peaks=%zu\n",
                  cfg.word.c_str(), cfg.evolution.E, static_cast<unsigned long long>(cfg.seed),
                  static_cast<long long>(traj.size()), traj.duration(), count_velocity_peaks(traj));
    out << line;
    return 0;
}

}  // namespace

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError(path, "cannot open config file");
    nlohmann::json j;
    try {
        in >> j;
        read_key(j, "word", cfg.word);
        if (j.contains("k_sigma")) {
            cfg.profile.k_sigma = j.at("k_sigma").get<double>();
            cfg.explicit_k_sigma = true;
        }
        read_key(j, "k_t", cfg.profile.k_t);
        read_key(j, "k_alpha", cfg.profile.k_alpha);
        if (j.contains("k_d")) cfg.profile.k_d = j.at("k_d").get<double>();
        if (j.contains("eps_t")) {
            cfg.profile.eps_t = j.at("eps_t").get<double>();
            cfg.explicit_eps_t = true;
        }
        if (j.contains("eps_D")) {
            cfg.profile.eps_D = j.at("eps_D").get<double>();
            cfg.explicit_eps_D = true;
        }
        read_key(j, "E", cfg.evolution.E);
        read_key(j, "max_legibility_retries", cfg.evolution.max_legibility_retries);
        read_key(j, "seed", cfg.seed);
        read_key(j, "glyphs", cfg.glyphs_path);
        read_key(j, "traj", cfg.traj_path);
        read_key(j, "svg", cfg.svg_path);
        read_key(j, "png", cfg.png_path);
        read_key(j, "resolution", cfg.resolution);
        read_key(j, "nib_radius", cfg.ink.nib_radius);
        read_key(j, "speed_thinning", cfg.ink.speed_thinning);
        read_key(j, "dt", cfg.dt);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("config file " + path + ": " + e.what());
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"scriptogen: handwriting synthesis at a chosen graphic maturity"};
    app.require_subcommand(1);

    // synth
    RunConfig synth_cfg;
    std::string synth_config;
    auto* synth = app.add_subcommand("synth", "synthesize one word to trajectory / SVG / PNG files");
    synth->add_option("--word", synth_cfg.word, "text to write");
    synth->add_option("--E", synth_cfg.evolution.E, "maturity: percentage of plan points kept")
        ->capture_default_str();
    synth->add_option("--seed", synth_cfg.seed, "random seed")->capture_default_str();
    synth->add_option("--traj", synth_cfg.traj_path, "trajectory output (scriptogen-traj v1)");
    synth->add_option("--svg", synth_cfg.svg_path, "SVG output");
    synth->add_option("--png", synth_cfg.png_path, "PNG output");
    synth->add_option("--resolution", synth_cfg.resolution, "raster resolution (px/mm)")
        ->capture_default_str();
    synth->add_option("--nib", synth_cfg.ink.nib_radius, "nib radius (mm)")->capture_default_str();
    synth->add_option("--thinning", synth_cfg.ink.speed_thinning, "speed thinning of the nib")
        ->capture_default_str();
    synth->add_option("--config", synth_config, "JSON run config; its keys override flags");
    add_profile_flags(*synth, synth_cfg);

    // sweep
    RunConfig sweep_cfg;
    std::vector<double> sweep_E{100.0, 50.0, 20.0};
    std::size_t sweep_seeds = 10;
    std::string sweep_out;
    std::string sweep_config;
    bool fixed_noise = false;
    bool fixed_sigma = false;
    auto* sweep = app.add_subcommand("sweep", "maturity curve table over several E values");
    sweep->add_option("--word", sweep_cfg.word, "text to write")->default_val("aeiou");
    sweep->add_option("--E", sweep_E, "comma-separated E values")->delimiter(',')->capture_default_str();
    sweep->add_option("--seeds", sweep_seeds, "samples per E")->capture_default_str();
    sweep->add_option("--seed", sweep_cfg.seed, "base seed")->capture_default_str();
    sweep->add_option("--out", sweep_out, "CSV output (default: stdout)");
    sweep->add_flag("--fixed-noise", fixed_noise, "keep eps_t / eps_D from the profile for every E");
    sweep->add_flag("--fixed-sigma", fixed_sigma, "keep ksigma from the profile for every E");
    sweep->add_option("--config", sweep_config, "JSON run config; its keys override flags");
    add_profile_flags(*sweep, sweep_cfg);

    // analyze
    std::string analyze_path;
    double prominence = kDefaultPeakProminence;
    auto* analyze = app.add_subcommand("analyze", "count velocity peaks of a trajectory file");
    analyze->add_option("trajectory", analyze_path, "scriptogen-traj v1 file")->required();
    analyze->add_option("--prominence", prominence, "relative peak prominence")->capture_default_str();

    // compare
    std::string compare_a, compare_b, compare_glyphs;
    SimilarityWeights weights;
    auto* compare = app.add_subcommand("compare", "fuzzy similarity of two PNG images");
    compare->add_option("image_a", compare_a, "first PNG")->required();
    compare->add_option("image_b", compare_b, "second PNG")->required();
    compare->add_option("--alpha", weights.alpha, "weight of features only in A")->capture_default_str();
    compare->add_option("--beta", weights.beta, "weight of features only in B")->capture_default_str();
    compare->add_option("--glyphs", compare_glyphs, "glyph library supplying the guide lines");

    // glyphs
    std::string glyph_file;
    auto* glyphs_cmd = app.add_subcommand("glyphs", "validate and list a glyph library");
    glyphs_cmd->add_option("--file", glyph_file, "glyph library (default: built-in)");

    // accepted everywhere so scripts can pass one flag set; these commands draw no random numbers
    std::uint64_t unused_seed = 0;
    for (auto* cmd : {analyze, compare, glyphs_cmd})
        cmd->add_option("--seed", unused_seed, "accepted for uniformity; has no effect here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*synth) return cmd_synth(synth_cfg, synth_config, out);

        if (*sweep) {
            if (!sweep_config.empty()) apply_config_file(sweep_cfg, sweep_config);
            const GlyphLibrary glyphs = load_glyphs(sweep_cfg.glyphs_path);
            MaturityOptions opts;
            opts.base_seed = sweep_cfg.seed;
            opts.scale_noise_with_E = !fixed_noise && !sweep_cfg.explicit_eps_t && !sweep_cfg.explicit_eps_D;
            opts.scale_sigma_with_E = !fixed_sigma && !sweep_cfg.explicit_k_sigma;
            opts.dt = sweep_cfg.dt;
            opts.ink = sweep_cfg.ink;
            opts.resolution = sweep_cfg.resolution;
            const auto rows =
                maturity_curve(sweep_cfg.word, sweep_cfg.profile, sweep_E, sweep_seeds, glyphs, opts);
            std::ostringstream table;
            write_maturity_table(table, rows);
            if (sweep_out.empty()) {
                out << table.str();
            } else {
                write_file_atomic(sweep_out, table.str());
            }
            return 0;
        }

        if (*analyze) {
            const SampledTrajectory traj = import_trajectory(analyze_path);
            out << count_velocity_peaks(traj, prominence) << '\n';
            return 0;
        }

        if (*compare) {
            const GlyphLibrary glyphs = load_glyphs(compare_glyphs);
            const FeatureVector a = extract_features(import_png(compare_a), glyphs.guides());
            const FeatureVector b = extract_features(import_png(compare_b), glyphs.guides());
            char line[64];
            std::snprintf(line, sizeof line, "%.6f\n", similarity(a, b, weights));
            out << line;
            return 0;
        }

        if (*glyphs_cmd) {
            const GlyphLibrary glyphs = load_glyphs(glyph_file);
            const HexGrid& g = glyphs.grid();
            out << "grid " << g.n_cols << 'x' << g.n_rows << " pitch " << g.pitch << " mm\n";
            for (char c : glyphs.letters()) {
                const auto n = glyphs.at(c).nodes.size();
                char line[128];
                std::snprintf(line, sizeof line, "%c nodes=%zu E_min=%.2f\n", c, n, minimum_maturity(n));
                out << line;
            }
            out << glyphs.size() << " glyphs ok\n";
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace scriptogen
