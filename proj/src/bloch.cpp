// Copyright 2026 The entsphere Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entsphere/bloch.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace entsphere {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this the azimuth carries no information.
constexpr double kAxisEpsilon = 1e-15;

double wrap_azimuth(double phi) {
    double w = std::fmod(phi, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    if (w >= kTwoPi) w = 0.0;
    return w;
}

void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " is not finite");
    }
}

}  // namespace

double dot(Cartesian a, Cartesian b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Cartesian cross(Cartesian a, Cartesian b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm(Cartesian a) { return std::sqrt(dot(a, a)); }

BlochPoint::BlochPoint(double r, double theta, double phi) {
    require_finite(r, "BlochPoint radius");
    require_finite(theta, "BlochPoint theta");
    require_finite(phi, "BlochPoint phi");
    if (r < 0.0 || r > 1.0 + kAlgebraicTolerance) {
        throw std::invalid_argument("BlochPoint radius " + std::to_string(r) + " outside [0, 1]");
    }
    if (theta < -kAlgebraicTolerance || theta > kPi + kAlgebraicTolerance) {
        throw std::invalid_argument("BlochPoint theta " + std::to_string(theta) + " outside [0, pi]");
    }
    r_ = std::min(r, 1.0);
    theta_ = std::clamp(theta, 0.0, kPi);
    phi_ = wrap_azimuth(phi);
    if (r_ == 0.0) {
        theta_ = 0.0;
        phi_ = 0.0;
    } else if (theta_ == 0.0 || theta_ == kPi) {
        phi_ = 0.0;
    }
}

BlochPoint BlochPoint::from_cartesian(Cartesian p) {
    const double transverse = std::hypot(p.x, p.y);
    const double r = std::hypot(transverse, p.z);
    if (r < kAxisEpsilon) {
        return BlochPoint(0.0, 0.0, 0.0);
    }
    const double theta = std::atan2(transverse, p.z);
    if (transverse < kAxisEpsilon) {
        return BlochPoint(r, p.z > 0.0 ? 0.0 : kPi, 0.0);
    }
    return BlochPoint(r, theta, std::atan2(p.y, p.x));
}

Cartesian BlochPoint::cartesian() const {
    const double s = std::sin(theta_);
    return {r_ * s * std::cos(phi_), r_ * s * std::sin(phi_), r_ * std::cos(theta_)};
}

SpinPureState::SpinPureState(double theta, double phi) : theta_(theta), phi_(phi) {
    require_finite(theta, "spin state theta");
    require_finite(phi, "spin state phi");
}

Vector2 SpinPureState::amplitudes() const {
    const Complex half_phase = std::polar(1.0, 0.5 * phi_);
    return Vector2{std::cos(0.5 * theta_) * std::conj(half_phase), std::sin(0.5 * theta_) * half_phase};
}

SpinPureState SpinPureState::antipode() const { return SpinPureState(kPi - theta_, phi_ + kPi); }

SpinPureState spin_state_of(const Vector2 &v) {
    const double n = norm(v);
    if (!(n > 0.0) || !is_finite(v)) {
        throw std::invalid_argument("spin_state_of: zero or non-finite vector");
    }
    const double theta = 2.0 * std::atan2(std::abs(v[1]), std::abs(v[0]));
    if (std::abs(v[0]) < kAxisEpsilon * n || std::abs(v[1]) < kAxisEpsilon * n) {
        return SpinPureState(theta, 0.0);
    }
    return SpinPureState(theta, wrap_azimuth(std::arg(v[1]) - std::arg(v[0])));
}

MeasurementDirection::MeasurementDirection(double theta, double phi) : theta_(theta), phi_(phi) {
    require_finite(theta, "measurement theta");
    require_finite(phi, "measurement phi");
}

Cartesian MeasurementDirection::axis() const {
    const double s = std::sin(theta_);
    return {s * std::cos(phi_), s * std::sin(phi_), std::cos(theta_)};
}

MeasurementDirection MeasurementDirection::reversed() const { return MeasurementDirection(kPi - theta_, phi_ + kPi); }

Matrix2 density_from_bloch(const BlochPoint &p) {
    const auto [x, y, z] = p.cartesian();
    return Matrix2{0.5 * (1.0 + z), Complex(0.5 * x, -0.5 * y), Complex(0.5 * x, 0.5 * y), 0.5 * (1.0 - z)};
}

BlochPoint bloch_from_density(const Matrix2 &d) {
    require_density(d);
    const Complex off = 0.5 * (d(1, 0) + std::conj(d(0, 1)));
    return BlochPoint::from_cartesian({2.0 * off.real(), 2.0 * off.imag(), (d(0, 0) - d(1, 1)).real()});
}

Matrix2 luder_single(const Matrix2 &d, const MeasurementDirection &dir) {
    const Matrix2 p = projector(dir.up().amplitudes());
    const Matrix2 q = Matrix2::identity() - p;
    return p * d * p + q * d * q;
}

BlochPoint geometric_projection(const BlochPoint &u, const MeasurementDirection &dir) {
    const Cartesian a = dir.axis();
    return BlochPoint::from_cartesian(dot(u.cartesian(), a) * a);
}

ReachableSphere reachable_sphere(const BlochPoint &u) { return {0.5 * u.cartesian(), 0.5 * u.r()}; }

double overlap_from_points(const BlochPoint &p, const BlochPoint &q) {
    if (std::abs(p.r() - 1.0) > kAlgebraicTolerance || std::abs(q.r() - 1.0) > kAlgebraicTolerance) {
        throw std::invalid_argument("overlap_from_points: both points must lie on the surface");
    }
    return 0.5 * (1.0 + dot(p.cartesian(), q.cartesian()));
}

}  // namespace entsphere
