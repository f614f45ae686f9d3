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
#include <numbers>
#include <random>
#include <sstream>

#include "scriptogen/errors.hpp"
#include "scriptogen/evaluation.hpp"

using namespace scriptogen;

namespace {

// Brute-force peak prominence: for every strict local maximum (plateaus
// collapsed to their middle), walk outwards until a higher sample.
std::vector<Eigen::Index> peaks_oracle(const std::vector<double>& x, double rel) {
    std::vector<Eigen::Index> out;
    const double top = *std::max_element(x.begin(), x.end());
    const auto n = static_cast<Eigen::Index>(x.size());
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        if (!(x[i] > x[i - 1])) continue;
        Eigen::Index j = i;
        while (j + 1 < n && x[j + 1] == x[i]) ++j;
        if (j + 1 >= n || !(x[j + 1] < x[i])) continue;
        double lmin = x[i], rmin = x[i];
        for (Eigen::Index k = i; k >= 0 && x[k] <= x[i]; --k) lmin = std::min(lmin, x[k]);
        for (Eigen::Index k = j; k < n && x[k] <= x[i]; ++k) rmin = std::min(rmin, x[k]);
        if (x[i] - std::max(lmin, rmin) > rel * top) out.push_back((i + j) / 2);
    }
    return out;
}

Raster canvas(Eigen::Index rows, Eigen::Index cols, double res = 10.0) {
    Raster r;
    r.ink = Raster::Pixels::Zero(rows, cols);
    r.resolution = res;
    r.top_left = Point(0.0, 0.0);
    return r;
}

// Ink every pixel within `half` pixels of the segment (r0,c0)-(r1,c1).
void draw(Raster& img, double r0, double c0, double r1, double c1, double half = 2.0) {
    const Eigen::Vector2d a(r0, c0), b(r1, c1);
    for (Eigen::Index r = 0; r < img.rows(); ++r) {
        for (Eigen::Index c = 0; c < img.cols(); ++c) {
            const Eigen::Vector2d p(static_cast<double>(r), static_cast<double>(c));
            const double t = std::clamp((p - a).dot(b - a) / (b - a).squaredNorm(), 0.0, 1.0);
            if ((p - (a + t * (b - a))).norm() <= half) img.ink(r, c) = 1;
        }
    }
}

void draw_circle(Raster& img, double rc, double cc, double radius, double half = 2.0) {
    for (Eigen::Index r = 0; r < img.rows(); ++r)
        for (Eigen::Index c = 0; c < img.cols(); ++c)
            if (std::abs(std::hypot(r - rc, c - cc) - radius) <= half) img.ink(r, c) = 1;
}

Eigen::ArrayXd unit_vector(std::size_t n, std::size_t hot, double v = 1.0) {
    Eigen::ArrayXd a = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(n));
    a(static_cast<Eigen::Index>(hot)) = v;
    return a;
}

}  // namespace

// --- peaks ------------------------------------------------------------------

TEST_CASE("peaks on hand-made signals") {
    Eigen::ArrayXd x(9);
    x << 0, 1, 0, 2, 0, 0.5, 0.45, 0.6, 0;
    // prominences: 1, 2, 0.05 (0.5 over the 0.45 saddle), 0.6
    CHECK(find_peaks(x, 0.0) == std::vector<Eigen::Index>{1, 3, 5, 7});
    CHECK(find_peaks(x, 0.05) == std::vector<Eigen::Index>{1, 3, 7});
    Eigen::ArrayXd plateau(7);
    plateau << 0, 1, 3, 3, 3, 1, 0;
    CHECK(find_peaks(plateau) == std::vector<Eigen::Index>{3});
    CHECK(find_peaks(Eigen::ArrayXd::Zero(10)).empty());
    CHECK(find_peaks(Eigen::ArrayXd::LinSpaced(10, 0, 1)).empty());
}

TEST_CASE("peaks agree with a brute-force scan on random signals") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        std::vector<double> v(200);
        double acc = 0.0;
        for (auto& e : v) e = acc = std::max(0.0, acc + u(rng) - 0.5);
        const Eigen::ArrayXd x = Eigen::Map<Eigen::ArrayXd>(v.data(), 200);
        CHECK(find_peaks(x, 0.05) == peaks_oracle(v, 0.05));
        CHECK(find_peaks(x, 0.2) == peaks_oracle(v, 0.2));
    }
}

TEST_CASE("peak count ignores uniform speed scaling") {
    LognormalStroke s[3];
    for (int i = 0; i < 3; ++i) {
        s[i].t0 = 0.15 * i;
        s[i].sigma = 0.05;
        s[i].amplitude = 1.0 + i;
        s[i].phi = 0.8 * i;
    }
    auto traj = synthesize_velocity(s);
    const auto before = count_velocity_peaks(traj);
    traj.speed *= 37.0;
    CHECK(count_velocity_peaks(traj) == before);
    LognormalStroke one = s[0];
    CHECK(count_velocity_peaks(synthesize_velocity(std::span<const LognormalStroke>(&one, 1))) == 1);
}

// --- static strokes -----------------------------------------------------------

TEST_CASE("static strokes of simple shapes") {
    Raster blank = canvas(40, 40);
    CHECK(estimate_static_strokes(blank) == 0);

    Raster line = canvas(60, 200);
    draw(line, 30, 10, 30, 190);
    CHECK(estimate_static_strokes(line) == 1);

    Raster diag = canvas(160, 160);
    draw(diag, 10, 10, 150, 140);
    CHECK(estimate_static_strokes(diag) == 1);

    Raster ell = canvas(160, 160);
    draw(ell, 10, 20, 140, 20);
    draw(ell, 140, 20, 140, 150);
    CHECK(estimate_static_strokes(ell) == 2);

    Raster cross = canvas(160, 160);
    draw(cross, 10, 80, 150, 80);
    draw(cross, 80, 10, 80, 150);
    CHECK(estimate_static_strokes(cross) == 2);

    Raster tee = canvas(160, 160);
    draw(tee, 20, 10, 20, 150);
    draw(tee, 20, 80, 150, 80);
    CHECK(estimate_static_strokes(tee) == 2);

    Raster ring = canvas(200, 200);
    draw_circle(ring, 100, 100, 70);
    CHECK(estimate_static_strokes(ring) == 1);
}

TEST_CASE("skeleton is one pixel thin and traced in millimetres") {
    Raster line = canvas(40, 120);
    line.top_left = Point(5.0, 2.0);
    draw(line, 20, 10, 20, 110, 3.0);
    const Raster sk = skeletonize(line);
    for (Eigen::Index c = 15; c < 105; ++c) CHECK(sk.ink.col(c).cast<int>().sum() == 1);
    const auto lines = trace_skeleton(sk);
    REQUIRE(lines.size() == 1);
    for (const auto& p : lines[0].points) CHECK(p.y() == doctest::Approx(2.0 - 2.05));
}

TEST_CASE("curvature of a circle") {
    SkeletonPolyline circle;
    circle.closed = true;
    const double R = 3.0;
    for (int i = 0; i < 720; ++i) {
        const double a = 2 * std::numbers::pi * i / 720;
        circle.points.emplace_back(R * std::cos(a), R * std::sin(a));
    }
    // chords spanning arc w on either side turn by w / R
    const double expected = 180.0 / (std::numbers::pi * R);
    for (double k : polyline_curvature(circle, 1.0)) CHECK(k == doctest::Approx(expected).epsilon(0.01));
}

// --- features -----------------------------------------------------------------

TEST_CASE("features of blank and full images") {
    const auto& layout = default_glyph_library().guides();
    CHECK((extract_features(canvas(30, 30), layout) == 0.0).all());
    Raster full = canvas(30, 45);
    full.ink.setOnes();
    const auto fv = extract_features(full, layout);
    CHECK((fv.head<kZoneFeatures>() == 1.0).all());
    CHECK(fv(kFeatureCount - 1) == 1.0);
    CHECK(fv.size() == 54);
    CHECK((fv >= 0.0).all());
    CHECK((fv <= 1.0).all());
}

TEST_CASE("features are deterministic and translation invariant") {
    const auto& lib = default_glyph_library();
    WriterProfile p;
    const auto traj = synthesize_word("aeiou", p, {50.0, 4}, lib);
    const Raster img = render_offline(traj);
    const auto a = extract_features(img, lib.guides());
    CHECK((a == extract_features(img, lib.guides())).all());

    auto moved = traj;
    moved.x += 7.3;
    moved.y -= 2.1;
    const auto b = extract_features(render_offline(moved), lib.guides());
    CHECK((a - b).abs().maxCoeff() < 1e-12);

    Raster padded = canvas(img.rows() + 13, img.cols() + 29);
    padded.ink.block(13, 29, img.rows(), img.cols()) = img.ink;
    CHECK((extract_features(padded, lib.guides()) - a).abs().maxCoeff() < 1e-12);
}

// --- similarity -----------------------------------------------------------------

TEST_CASE("similarity worked examples") {
    const Eigen::ArrayXd a = unit_vector(54, 0, 1.0);
    CHECK(similarity(a, a) == 1.0);
    CHECK(similarity(unit_vector(54, 0), unit_vector(54, 1)) == 0.0);
    CHECK(similarity(a, unit_vector(54, 0, 0.5)) == doctest::Approx(0.5));
    CHECK(similarity(Eigen::ArrayXd::Zero(54), Eigen::ArrayXd::Zero(54)) == 1.0);
    CHECK_THROWS_AS(similarity(Eigen::ArrayXd::Ones(54), Eigen::ArrayXd::Ones(53)), DimensionError);
}

TEST_CASE("similarity properties on random vectors") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 100; ++k) {
        Eigen::ArrayXd a(54), b(54);
        for (Eigen::Index i = 0; i < 54; ++i) a(i) = u(rng), b(i) = u(rng) < 0.3 ? 0.0 : u(rng);
        CHECK(similarity(a, a) == 1.0);
        const double s = similarity(a, b);
        CHECK(s >= 0.0);
        CHECK(s <= 1.0);
        CHECK(s < 1.0);
        CHECK(s == doctest::Approx(similarity(b, a)).epsilon(1e-14));
        const SimilarityWeights w{2.0, 2.0};
        CHECK(similarity(a, b, w) == doctest::Approx(similarity(b, a, w)).epsilon(1e-14));
        // independent evaluation of the ratio
        const double common = a.min(b).sum();
        const double oracle = common / (common + (a - b).max(0.0).sum() + (b - a).max(0.0).sum());
        CHECK(s == doctest::Approx(oracle).epsilon(1e-14));
    }
}

// --- statistics -----------------------------------------------------------------

TEST_CASE("anova") {
    CHECK(anova_one_way({{1, 2, 3, 4}, {1, 2, 3, 4}}) == 1.0);
    CHECK(anova_one_way({{5, 5, 5}, {5, 5, 5}, {5, 5, 5}}) == 1.0);
    CHECK(anova_one_way({{0, 0, 0, 0}, {10, 10, 10, 10.0001}}) < 0.001);
    // F = 13 on (2, 6) degrees of freedom; with two numerator degrees of
    // freedom the upper tail is (1 + 2F/d2)^(-d2/2)
    CHECK(anova_one_way({{1, 2, 3}, {2, 3, 4}, {5, 6, 7}}) ==
          doctest::Approx(std::pow(1.0 + 26.0 / 6.0, -3.0)).epsilon(1e-10));
    // two groups: p equals the two-sided t-test, F = t^2 on (1, d2); for
    // d2 = 2 the t distribution has a closed form
    {
        const std::vector<std::vector<double>> g{{0, 1}, {3, 4}};
        const double ssb = 2 * (0.5 - 2) * (0.5 - 2) + 2 * (3.5 - 2) * (3.5 - 2);  // 9
        const double ssw = 0.5 + 0.5;                                             // 1
        const double F = ssb / (ssw / 2.0);                                       // 18
        const double t = std::sqrt(F);
        const double p = 1.0 - t / std::sqrt(2.0 + t * t);  // two-sided, nu = 2
        CHECK(anova_one_way(g) == doctest::Approx(p).epsilon(1e-10));
    }
    std::mt19937_64 rng(1234);
    std::normal_distribution<double> z(0.0, 1.0);
    std::vector<std::vector<double>> groups(3);
    for (auto& g : groups)
        for (int i = 0; i < 50; ++i) g.push_back(z(rng));
    const double p = anova_one_way(groups);
    CHECK(p > 0.001);
    CHECK(p <= 1.0);
    std::swap(groups[0], groups[2]);
    CHECK(anova_one_way(groups) == doctest::Approx(p).epsilon(1e-14));
    CHECK_THROWS_AS(anova_one_way({{1, 2}}), DomainError);
}

TEST_CASE("quantiles interpolate linearly") {
    const std::vector<double> v{4, 1, 3, 2};
    CHECK(quantile(v, 0.0) == 1.0);
    CHECK(quantile(v, 1.0) == 4.0);
    CHECK(quantile(v, 0.5) == 2.5);
    CHECK(quantile(v, 0.25) == doctest::Approx(1.75));
    CHECK_THROWS_AS(quantile({}, 0.5), DomainError);
}

// --- maturity curve ---------------------------------------------------------------

TEST_CASE("maturity curve shape") {
    const auto& lib = default_glyph_library();
    const auto rows = maturity_curve("aeiou", WriterProfile{}, {100, 50, 20}, 10, lib);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) {
        CHECK(r.peaks.size() == 10);
        CHECK(r.similarities.size() == 45);
        REQUIRE(r.similarity.has_value());
        CHECK(r.similarity->min <= r.similarity->q1);
        CHECK(r.similarity->q1 <= r.similarity->q2);
        CHECK(r.similarity->q2 <= r.similarity->q3);
    }
    const auto single = maturity_curve("ae", WriterProfile{}, {60}, 1, lib);
    CHECK_FALSE(single[0].similarity.has_value());
    std::ostringstream out;
    write_maturity_table(out, single);
    CHECK(out.str().find(",,,,") != std::string::npos);
    CHECK_THROWS_AS(maturity_curve("aeiou", WriterProfile{}, {10}, 2, lib), InfeasibleMaturityError);
}

TEST_CASE("maturity curve is reproducible") {
    const auto& lib = default_glyph_library();
    std::ostringstream a, b;
    write_maturity_table(a, maturity_curve("aeiou", WriterProfile{}, {100, 20}, 8, lib));
    write_maturity_table(b, maturity_curve("aeiou", WriterProfile{}, {100, 20}, 8, lib));
    CHECK(a.str() == b.str());
}
