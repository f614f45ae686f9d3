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

#include "scriptogen/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scriptogen/errors.hpp"

namespace scriptogen {

void SampledTrajectory::resize(Eigen::Index n, double t0) {
    t = t0 + Eigen::ArrayXd::LinSpaced(n, 0.0, static_cast<double>(n - 1)) * dt;
    if (n == 0) t.resize(0);
    x = Eigen::ArrayXd::Zero(n);
    y = Eigen::ArrayXd::Zero(n);
    vx = Eigen::ArrayXd::Zero(n);
    vy = Eigen::ArrayXd::Zero(n);
    speed = Eigen::ArrayXd::Zero(n);
    pen_down = Eigen::Array<bool, Eigen::Dynamic, 1>::Constant(n, true);
}

void SampledTrajectory::update_speed() { speed = (vx.square() + vy.square()).sqrt(); }

void WriterProfile::validate() const {
    if (!(k_sigma >= 0.0 && k_sigma <= 0.04)) throw DomainError("k_sigma must lie in [0, 0.04]");
    if (!(k_t > 0.0)) throw DomainError("k_t must be > 0");
    if (!(k_alpha >= 0.0)) throw DomainError("k_alpha must be >= 0");
    if (k_d && !(*k_d > 0.0)) throw DomainError("k_d must be > 0");
    if (!(eps_t >= 0.0)) throw DomainError("eps_t must be >= 0");
    if (!(eps_D >= 0.0)) throw DomainError("eps_D must be >= 0");
    if (!std::isfinite(mu)) throw DomainError("mu must be finite");
}

double interior_angle(const Point& prev, const Point& vertex, const Point& next) {
    const Point a = prev - vertex;
    const Point b = next - vertex;
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) throw DegenerateSegmentError("zero-length segment at plan vertex");
    const double c = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
    return std::acos(c) * 180.0 / std::numbers::pi;
}

StrokeSet assign_parameters(std::span<const Point> segment, const WriterProfile& profile,
                            double d_ref, std::mt19937_64& rng) {
    profile.validate();
    if (!(d_ref > 0.0)) throw DomainError("d_ref must be > 0");
    if (segment.size() < 2) throw DomainError("a pen-down segment needs at least 2 points");

    const double k_d = profile.k_d.value_or(d_ref);
    std::normal_distribution<double> unit(0.0, 1.0);

    StrokeSet out;
    double onset = 0.0;
    for (std::size_t j = 0; j + 1 < segment.size(); ++j) {
        const Point& from = segment[j];
        const Point& to = segment[j + 1];
        const Point delta = to - from;
        const double d_act = delta.norm();
        if (d_act == 0.0) throw DegenerateSegmentError("zero-length plan link");

        const double alpha = j == 0 ? 180.0 : interior_angle(segment[j - 1], from, to);
        const double jitter_t = profile.eps_t * unit(rng);
        const double jitter_d = profile.eps_D * d_ref * unit(rng);
        onset += profile.k_t + jitter_t + profile.k_alpha * delay_factor(alpha);

        LognormalStroke s;
        s.t0 = std::max(onset, 0.0);
        s.mu = profile.mu;
        s.sigma = profile.sigma();
        s.amplitude = std::max(k_d * (d_act + jitter_d) / d_ref, 0.0);
        s.phi = std::atan2(std::abs(delta.y()), std::abs(delta.x()));
        s.sgn_x = delta.x() < 0.0 ? -1 : 1;
        s.sgn_y = delta.y() < 0.0 ? -1 : 1;
        if (s.amplitude == 0.0) {
            ++out.dropped;
            continue;
        }
        out.strokes.push_back(s);
    }
    return out;
}

std::vector<StrokeSet> assign_parameters(const TrajectoryPlan& plan, const WriterProfile& profile,
                                         double d_ref) {
    std::mt19937_64 rng(profile.rng_seed);
    std::vector<StrokeSet> out;
    for (const auto& seg : plan.pen_down_segments())
        out.push_back(assign_parameters(std::span<const Point>(seg), profile, d_ref, rng));
    return out;
}

namespace {

constexpr double kTailFraction = 1e-6;

void accumulate(SampledTrajectory& traj, const LognormalStroke& s) {
    const double cx = s.sgn_x * std::cos(s.phi);
    const double cy = s.sgn_y * std::sin(s.phi);
    const Eigen::Index n = traj.size();
    const auto first = std::clamp<Eigen::Index>(
        static_cast<Eigen::Index>(std::floor((s.t0 - traj.t(0)) / traj.dt)), 0, n);
    if (first >= n) return;
    const auto speed = lognormal_speed(s, traj.t.segment(first, n - first));
    traj.vx.segment(first, n - first) += cx * speed;
    traj.vy.segment(first, n - first) += cy * speed;
}

}  // namespace

SampledTrajectory synthesize_velocity(std::span<const LognormalStroke> strokes, double dt,
                                      Eigen::Index samples) {
    if (!(dt > 0.0)) throw DomainError("dt must be > 0");
    SampledTrajectory traj;
    traj.dt = dt;
    traj.resize(samples);
    for (const auto& s : strokes) accumulate(traj, s);
    traj.update_speed();
    return traj;
}

SampledTrajectory synthesize_velocity(std::span<const LognormalStroke> strokes, double dt) {
    if (!(dt > 0.0)) throw DomainError("dt must be > 0");
    double max_d = 0.0;
    for (const auto& s : strokes) {
        validate(s);
        max_d = std::max(max_d, s.amplitude);
    }
    double t_end = 0.0;
    for (const auto& s : strokes)
        if (s.amplitude > 0.0) t_end = std::max(t_end, lognormal_tail_end(s, kTailFraction * max_d));
    const auto samples = static_cast<Eigen::Index>(std::ceil(t_end / dt)) + 1;
    return synthesize_velocity(strokes, dt, samples);
}

SampledTrajectory integrate_trajectory(SampledTrajectory vel, const Point& start) {
    const Eigen::Index n = vel.size();
    if (n == 0) return vel;
    const double half_dt = 0.5 * vel.dt;
    vel.x(0) = start.x();
    vel.y(0) = start.y();
    for (Eigen::Index k = 1; k < n; ++k) {
        vel.x(k) = vel.x(k - 1) + half_dt * (vel.vx(k - 1) + vel.vx(k));
        vel.y(k) = vel.y(k - 1) + half_dt * (vel.vy(k - 1) + vel.vy(k));
    }
    return vel;
}

namespace {

void append(SampledTrajectory& dst, const SampledTrajectory& src) {
    const Eigen::Index n0 = dst.size();
    const Eigen::Index n1 = src.size();
    auto grow = [&](Eigen::ArrayXd& a, const Eigen::ArrayXd& b) {
        a.conservativeResize(n0 + n1);
        a.segment(n0, n1) = b;
    };
    grow(dst.t, src.t);
    grow(dst.x, src.x);
    grow(dst.y, src.y);
    grow(dst.vx, src.vx);
    grow(dst.vy, src.vy);
    grow(dst.speed, src.speed);
    dst.pen_down.conservativeResize(n0 + n1);
    dst.pen_down.segment(n0, n1) = src.pen_down;
}

}  // namespace

SampledTrajectory synthesize_plan(const TrajectoryPlan& plan, const WriterProfile& profile,
                                  double d_ref, double dt) {
    profile.validate();
    SampledTrajectory out;
    out.dt = dt;
    out.resize(0);

    std::mt19937_64 rng(profile.rng_seed);
    for (const auto& seg : plan.pen_down_segments()) {
        const StrokeSet set = assign_parameters(std::span<const Point>(seg), profile, d_ref, rng);
        SampledTrajectory part = synthesize_velocity(set.strokes, dt);
        part = integrate_trajectory(std::move(part), seg.front());
        // continue the global time grid after the previous segment
        const double t0 = out.empty() ? 0.0 : out.t(out.size() - 1) + dt;
        part.t = t0 + Eigen::ArrayXd::LinSpaced(part.size(), 0.0, static_cast<double>(part.size() - 1)) * dt;
        part.pen_down(0) = false;
        append(out, part);
    }
    return out;
}

SampledTrajectory synthesize_word(std::string_view word, const WriterProfile& profile,
                                  const EvolutionConfig& cfg, const GlyphLibrary& glyphs,
                                  double dt) {
    const TrajectoryPlan plan = build_word_plan(word, glyphs);
    const TrajectoryPlan evolved = evolve_plan(plan, cfg);
    return synthesize_plan(evolved, profile, glyphs.d_ref(), dt);
}

}  // namespace scriptogen
