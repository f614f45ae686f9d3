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
#include <atomic>
#include <cstdio>
#include <exception>
#include <thread>
#include <numeric>
#include <ostream>

#include "scriptogen/evaluation.hpp"

namespace scriptogen {

namespace {

struct CellResult {
    double peaks = 0.0;
    double static_strokes = 0.0;
    FeatureVector features = FeatureVector::Zero();
};

double mean(const std::vector<double>& v) {
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

std::vector<MaturityRow> maturity_curve(std::string_view word, const WriterProfile& profile,
                                        const std::vector<double>& E_values, std::size_t seeds,
                                        const GlyphLibrary& glyphs, const MaturityOptions& opts) {
    profile.validate();
    opts.ink.validate();

    // validate feasibility up front so a bad E fails before any work starts
    const TrajectoryPlan plan = build_word_plan(word, glyphs);
    for (double E : E_values) {
        for (std::size_t g = 0; g < plan.glyph_count(); ++g) {
            const auto [b, e] = plan.glyph_range(g);
            target_count(e - b, E);
        }
    }

    auto run_cell = [&](double E, std::size_t s) {
        WriterProfile p = profile;
        if (opts.scale_noise_with_E) {
            const NoiseLevels noise = scale_noise(E);
            p.eps_D = noise.eps_D;
            p.eps_t = noise.eps_t;
        }
        if (opts.scale_sigma_with_E) p.k_sigma = scale_k_sigma(E);
        const std::uint64_t seed = opts.base_seed + s;
        p.rng_seed = seed ^ 0x9E3779B97F4A7C15ULL;
        EvolutionConfig cfg;
        cfg.E = E;
        cfg.rng_seed = seed;

        const TrajectoryPlan evolved = evolve_plan(plan, cfg);
        const SampledTrajectory traj = synthesize_plan(evolved, p, glyphs.d_ref(), opts.dt);
        const Raster image = render_offline(traj, opts.ink, opts.resolution);

        CellResult r;
        r.peaks = static_cast<double>(count_velocity_peaks(traj, opts.prominence));
        r.static_strokes = static_cast<double>(estimate_static_strokes(image));
        r.features = extract_features(image, glyphs.guides());
        return r;
    };

    const std::size_t cells = E_values.size() * seeds;
    std::vector<CellResult> results(cells);
    std::vector<std::exception_ptr> errors(cells);
    std::atomic<std::size_t> next{0};
    {
        const std::size_t workers =
            std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), cells);
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < cells; c = next++) {
                    try {
                        results[c] = run_cell(E_values[c / seeds], c % seeds);
                    } catch (...) {
                        errors[c] = std::current_exception();
                    }
                }
            });
        }
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    std::vector<MaturityRow> rows;
    for (std::size_t e = 0; e < E_values.size(); ++e) {
        MaturityRow row;
        row.E = E_values[e];
        std::vector<FeatureVector> features;
        for (std::size_t s = 0; s < seeds; ++s) {
            const CellResult& r = results[e * seeds + s];
            row.peaks.push_back(r.peaks);
            row.static_strokes.push_back(r.static_strokes);
            features.push_back(r.features);
        }
        for (std::size_t i = 0; i < features.size(); ++i)
            for (std::size_t j = i + 1; j < features.size(); ++j)
                row.similarities.push_back(similarity(features[i], features[j], opts.weights));

        row.mean_peaks = mean(row.peaks);
        row.mean_static_strokes = mean(row.static_strokes);
        if (!row.similarities.empty()) {
            row.similarity = SimilaritySummary{quantile(row.similarities, 0.25),
                                               quantile(row.similarities, 0.5),
                                               quantile(row.similarities, 0.75),
                                               quantile(row.similarities, 0.0)};
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_maturity_table(std::ostream& out, const std::vector<MaturityRow>& rows) {
    out << "E,mean_peaks,mean_static_strokes,sim_q1,sim_q2,sim_q3,sim_min\n";
    char buf[256];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%g,%.4f,%.4f", r.E, r.mean_peaks, r.mean_static_strokes);
        out << buf;
        if (r.similarity) {
            std::snprintf(buf, sizeof buf, ",%.4f,%.4f,%.4f,%.4f", r.similarity->q1, r.similarity->q2,
                          r.similarity->q3, r.similarity->min);
            out << buf;
        } else {
            out << ",,,,";
        }
        out << '\n';
    }
}

}  // namespace scriptogen
