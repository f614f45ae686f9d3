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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "scriptogen/errors.hpp"
#include "scriptogen/evolution.hpp"

using namespace scriptogen;

namespace {

// n distinct points on a wavy line, all in one glyph, tagged where asked.
TrajectoryPlan line_plan(std::size_t n, const std::set<std::size_t>& tagged = {}) {
    TrajectoryPlan plan;
    plan.letters = "x";
    for (std::size_t i = 0; i < n; ++i) {
        PlanPoint p;
        p.position = Point(static_cast<double>(i), (i % 3 == 0) ? 1.0 : 0.0);
        p.tag = tagged.count(i) ? GuideTag::upper1 : GuideTag::none;
        plan.points.push_back(p);
    }
    plan.pen_down.assign(n - 1, true);
    return plan;
}

// Indices of `sub`'s points in `full`, relying on distinct positions.
std::vector<std::size_t> locate(const TrajectoryPlan& full, const TrajectoryPlan& sub) {
    std::vector<std::size_t> idx;
    for (const auto& p : sub.points) {
        auto it = std::find_if(full.points.begin(), full.points.end(),
                               [&](const PlanPoint& q) { return q.position == p.position && q.glyph == p.glyph; });
        REQUIRE(it != full.points.end());
        idx.push_back(static_cast<std::size_t>(it - full.points.begin()));
    }
    return idx;
}

}  // namespace

TEST_CASE("target count") {
    CHECK(target_count(25, 100) == 25);
    CHECK(target_count(25, 20) == 5);
    CHECK(target_count(30, 50) == 15);
    CHECK(target_count(40, 37) == static_cast<std::size_t>(std::round(40 * 0.37)));
    CHECK(minimum_maturity(25) == doctest::Approx(20.0));
    CHECK_THROWS_AS(target_count(25, 19.9), InfeasibleMaturityError);
    CHECK_THROWS_AS(target_count(4, 100), InfeasibleMaturityError);
}

TEST_CASE("cluster sizes hand the remainder to the earliest clusters") {
    CHECK(cluster_sizes(22, 3) == std::vector<std::size_t>{8, 7, 7});
    CHECK(cluster_sizes(10, 5) == std::vector<std::size_t>{2, 2, 2, 2, 2});
    CHECK(cluster_sizes(7, 7) == std::vector<std::size_t>(7, 1));
    CHECK_THROWS_AS(cluster_sizes(3, 4), DomainError);
}

TEST_CASE("noise schedule") {
    CHECK(scale_noise(100).eps_D == doctest::Approx(0.3));
    CHECK(scale_noise(100).eps_t == doctest::Approx(0.02));
    CHECK(scale_noise(20).eps_D == 0.0);
    CHECK(scale_noise(20).eps_t == 0.0);
    CHECK(scale_noise(60).eps_D == doctest::Approx(0.15));
    CHECK(scale_noise(60).eps_t == doctest::Approx(0.01));
    CHECK(scale_noise(150).eps_D == doctest::Approx(0.3));
    CHECK(scale_noise(5).eps_t == 0.0);
    CHECK(scale_k_sigma(100) == 0.0);
    CHECK(scale_k_sigma(20) == doctest::Approx(0.04));
    CHECK(scale_k_sigma(60) == doctest::Approx(0.02));
}

TEST_CASE("full maturity keeps the plan") {
    const auto plan = line_plan(25, {12});
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto out = evolve_plan(plan, {100.0, seed});
        REQUIRE(out.n_sl() == 25);
        for (std::size_t i = 0; i < 25; ++i) CHECK(out.points[i].position == plan.points[i].position);
    }
}

TEST_CASE("E = 20 on 25 points") {
    const auto plan = line_plan(25, {12});
    std::set<std::size_t> starts;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto out = evolve_plan(plan, {20.0, seed});
        REQUIRE(out.n_sl() == 5);
        const auto idx = locate(plan, out);
        CHECK(idx.front() <= 1);
        CHECK(idx.back() == 24);
        starts.insert(idx.front());
    }
    CHECK(starts == std::set<std::size_t>{0, 1});
}

TEST_CASE("a lone tagged point survives every accepted selection") {
    // clusters over interior 2..23 are [2,10) [10,17) [17,24); index 12 is
    // the only tagged point, so acceptance forces its pick
    const auto plan = line_plan(25, {12});
    std::mt19937_64 rng(2024);
    std::vector<int> picks_in_first(8, 0);
    for (int run = 0; run < 10'000; ++run) {
        const auto out = evolve_plan(plan, {20.0, 0}, rng);
        const auto idx = locate(plan, out);
        REQUIRE(std::find(idx.begin(), idx.end(), 12) != idx.end());
        REQUIRE(idx[1] >= 2);
        REQUIRE(idx[1] < 10);
        ++picks_in_first[idx[1] - 2];
    }
    // the unconstrained cluster stays uniform: each of 8 bins near 1250
    for (int c : picks_in_first) CHECK(std::abs(c - 1250) < 200);
}

TEST_CASE("untagged glyphs are not constrained") {
    const auto plan = line_plan(25);
    CHECK_NOTHROW(evolve_plan(plan, {20.0, 3}));
}

TEST_CASE("impossible legibility fails after the retry budget") {
    // the only tagged point is index 1, which the interior clusters never
    // reach; the start coin is fixed before the retries
    auto plan = line_plan(25, {1});
    EvolutionConfig cfg{20.0, 0, 50};
    bool threw = false, passed = false;
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        cfg.rng_seed = seed;
        try {
            evolve_plan(plan, cfg);
            passed = true;
        } catch (const LegibilityError&) {
            threw = true;
        }
    }
    CHECK(threw);
    CHECK(passed);
}

TEST_CASE("randomized sweep: length, order and legibility") {
    std::mt19937_64 meta(99);
    std::uniform_int_distribution<std::size_t> n_dist(5, 80);
    std::uniform_real_distribution<double> e_dist(0.0, 1.0);
    for (int c = 0; c < 200; ++c) {
        const std::size_t n = n_dist(meta);
        const double E_min = 500.0 / static_cast<double>(n);
        const double E = E_min + (100.0 - E_min) * e_dist(meta);
        std::set<std::size_t> tagged{std::uniform_int_distribution<std::size_t>(0, n - 1)(meta),
                                     std::uniform_int_distribution<std::size_t>(0, n - 1)(meta)};
        // a tag reachable only through index 1 may be infeasible; keep one interior tag
        if (n > 3) tagged.insert(2 + std::uniform_int_distribution<std::size_t>(0, n - 4)(meta));
        const auto plan = line_plan(n, tagged);
        const auto out = evolve_plan(plan, {E, static_cast<std::uint64_t>(c)});
        CHECK(out.n_sl() == target_count(n, E));
        const auto idx = locate(plan, out);
        CHECK(std::is_sorted(idx.begin(), idx.end()));
        CHECK(std::adjacent_find(idx.begin(), idx.end()) == idx.end());
        CHECK(std::any_of(out.points.begin(), out.points.end(),
                          [](const PlanPoint& p) { return p.tag != GuideTag::none; }));
    }
}

TEST_CASE("determinism") {
    const auto plan = build_word_plan("aeiou", default_glyph_library());
    for (double E : {20.0, 50.0, 100.0}) {
        const auto a = evolve_plan(plan, {E, 17});
        const auto b = evolve_plan(plan, {E, 17});
        REQUIRE(a.n_sl() == b.n_sl());
        for (std::size_t i = 0; i < a.n_sl(); ++i) CHECK(a.points[i].position == b.points[i].position);
        CHECK(a.pen_down == b.pen_down);
    }
}

TEST_CASE("word evolution works per glyph and keeps pen lifts") {
    const auto& lib = default_glyph_library();
    const auto plan = build_word_plan("aeiou", lib);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto out = evolve_plan(plan, {20.0, seed});
        CHECK(out.n_sl() == 25);
        CHECK(out.pen_down_segments().size() == 5);
        for (std::size_t g = 0; g < 5; ++g) {
            auto [b, e] = out.glyph_range(g);
            CHECK(e - b == 5);
            bool tagged = false;
            for (auto i = b; i < e; ++i) tagged = tagged || out.points[i].tag != GuideTag::none;
            CHECK(tagged);
        }
    }
    CHECK_THROWS_AS(evolve_plan(plan, {19.0, 0}), InfeasibleMaturityError);
}

TEST_CASE("mean retained length falls with E") {
    const auto plan = build_word_plan("aeiou", default_glyph_library());
    double prev = 1e9;
    for (double E : {100.0, 80.0, 60.0, 40.0, 20.0}) {
        double sum = 0.0;
        for (std::uint64_t s = 0; s < 30; ++s) sum += static_cast<double>(evolve_plan(plan, {E, s}).n_sl());
        CHECK(sum / 30.0 < prev);
        prev = sum / 30.0;
    }
}
