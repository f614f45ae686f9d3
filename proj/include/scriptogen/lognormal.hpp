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

// Scaled lognormal speed pulses and the angle-dependent onset delay law.
//
// Every function here is a pure function of value types and is templated on
// the scalar type so it can be evaluated on plain scalars or on Eigen array
// expressions of time samples.

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Core>

#include "scriptogen/errors.hpp"

namespace scriptogen {

/// Slope (1/deg) and center (deg) of the fitted delay sigmoid.
inline constexpr double kDelaySlope = 0.06;
inline constexpr double kDelayCenter = 65.0;

/// One ballistic stroke: a lognormal speed pulse of area `amplitude` starting
/// at `t0`, travelling along the direction given by `phi` (folded into the
/// first quadrant) and the per-axis signs.
template <typename Scalar>
struct BasicLognormalStroke {
    Scalar t0{0};
    Scalar mu{0};
    Scalar sigma{Scalar(0.05)};
    Scalar amplitude{0};  // D
    Scalar phi{0};        // radians in [0, pi/2]
    int sgn_x{1};
    int sgn_y{1};
};

using LognormalStroke = BasicLognormalStroke<double>;

template <typename Scalar>
void validate(const BasicLognormalStroke<Scalar>& s) {
    if (!(s.sigma > Scalar(0)) || !std::isfinite(s.sigma))
        throw DomainError("lognormal stroke requires sigma > 0");
    if (!(s.amplitude >= Scalar(0)) || !std::isfinite(s.amplitude))
        throw DomainError("lognormal stroke requires amplitude >= 0");
    if (!(s.t0 >= Scalar(0)) || !std::isfinite(s.t0))
        throw DomainError("lognormal stroke requires t0 >= 0");
    if (!std::isfinite(s.mu)) throw DomainError("lognormal stroke requires finite mu");
}

namespace detail {

inline constexpr double kSpeedFloor = 1e-300;

// Evaluated fully in log space; the raw form divides by (t - t0) and
// overflows as t -> t0+.
template <typename Scalar>
Scalar lognormal_speed_unchecked(const BasicLognormalStroke<Scalar>& s, Scalar t) {
    using std::exp;
    using std::log;
    const Scalar tau = t - s.t0;
    if (!(tau > Scalar(0)) || s.amplitude == Scalar(0)) return Scalar(0);
    const Scalar log_tau = log(tau);
    const Scalar z = (log_tau - s.mu) / s.sigma;
    const Scalar log_v = log(s.amplitude) - log(s.sigma) -
                         Scalar(0.5) * log(Scalar(2) * std::numbers::pi_v<Scalar>) - log_tau -
                         Scalar(0.5) * z * z;
    const Scalar v = exp(log_v);
    return v < Scalar(kSpeedFloor) ? Scalar(0) : v;
}

}  // namespace detail

/// Speed of the stroke at time `t`; exactly zero for t <= t0.
template <typename Scalar>
Scalar lognormal_speed(const BasicLognormalStroke<Scalar>& s, Scalar t) {
    validate(s);
    return detail::lognormal_speed_unchecked(s, t);
}

/// Vectorized form over an Eigen array of sample times.
template <typename Derived>
Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1> lognormal_speed(
    const BasicLognormalStroke<typename Derived::Scalar>& s, const Eigen::ArrayBase<Derived>& t) {
    using Scalar = typename Derived::Scalar;
    validate(s);
    return t.derived().unaryExpr(
        [&s](Scalar ti) { return detail::lognormal_speed_unchecked(s, ti); });
}

/// Time of maximum speed, t0 + exp(mu - sigma^2).
template <typename Scalar>
Scalar lognormal_mode(const BasicLognormalStroke<Scalar>& s) {
    using std::exp;
    return s.t0 + exp(s.mu - s.sigma * s.sigma);
}

/// Smallest time after the mode at which the speed falls below `threshold`.
template <typename Scalar>
Scalar lognormal_tail_end(const BasicLognormalStroke<Scalar>& s, Scalar threshold) {
    using std::exp;
    validate(s);
    if (s.amplitude == Scalar(0) || s.amplitude <= threshold) return lognormal_mode(s);
    Scalar z = Scalar(0);
    const Scalar step = Scalar(0.125);
    for (;;) {
        const Scalar t = s.t0 + exp(s.mu + s.sigma * z);
        if (detail::lognormal_speed_unchecked(s, t) < threshold) return t;
        z += step;
    }
}

/// Logistic curve 1 / (1 + exp(-b (alpha - c))).
template <typename Scalar>
Scalar sigmoid(Scalar alpha, Scalar b, Scalar c) {
    using std::exp;
    return Scalar(1) / (Scalar(1) + exp(-b * (alpha - c)));
}

/// Fraction of the maximum onset delay added at a vertex with interior angle
/// `alpha_deg`: near 1 for a reversal (0 deg), near 0 for a straight
/// continuation (180 deg).
template <typename Scalar>
Scalar delay_factor(Scalar alpha_deg) {
    if (!(alpha_deg >= Scalar(0) && alpha_deg <= Scalar(180)))
        throw DomainError("delay_factor requires an angle in [0, 180] degrees");
    return sigmoid(alpha_deg, Scalar(-kDelaySlope), Scalar(kDelayCenter));
}

}  // namespace scriptogen
