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

#include "entsphere/measurement.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace entsphere {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

CollapseResult collapse_outcome(const ConstraintMap &f, const Vector2 &x, Subsystem measured) {
    CollapseResult out;
    out.measured = measured;
    out.measured_state = x;
    const Vector2 image = f(x);
    out.partner_norm2 = norm_squared(image);
    out.probability = out.partner_norm2;
    if (out.partner_norm2 > kImpossibleNorm2) {
        out.partner_state = (1.0 / std::sqrt(out.partner_norm2)) * image;
    }
    return out;
}

}  // namespace

Vector4 CollapseResult::post_state() const {
    if (!partner_state) {
        throw std::logic_error("post_state: outcome is impossible");
    }
    return measured == Subsystem::first ? tensor(measured_state, *partner_state)
                                        : tensor(*partner_state, measured_state);
}

CollapsePair collapse(const TwoQubitState &psi, const MeasurementDirection &dir, Subsystem measured) {
    const ConstraintMap f = constraint_from(psi, measured);
    return {collapse_outcome(f, dir.up().amplitudes(), measured),
            collapse_outcome(f, dir.down().amplitudes(), measured)};
}

CollapsePair collapse_on_first(const TwoQubitState &psi, const MeasurementDirection &dir) {
    return collapse(psi, dir, Subsystem::first);
}

Matrix4 luder(const TwoQubitState &psi, const MeasurementDirection &dir, Subsystem measured) {
    const Matrix2 p = projector(dir.up().amplitudes());
    const Matrix2 q = Matrix2::identity() - p;
    const Matrix2 id = Matrix2::identity();
    const Matrix4 keep = measured == Subsystem::first ? tensor(p, id) : tensor(id, p);
    const Matrix4 flip = measured == Subsystem::first ? tensor(q, id) : tensor(id, q);
    const Matrix4 d = density_of(psi);
    return keep * d * keep + flip * d * flip;
}

Matrix4 luder_on_first(const TwoQubitState &psi, const MeasurementDirection &dir) {
    return luder(psi, dir, Subsystem::first);
}

RemoteInvariance remote_invariance_check(const TwoQubitState &psi, const MeasurementDirection &dir,
                                         Subsystem measured) {
    const Subsystem remote = other(measured);
    return {partial_trace(density_of(psi), remote), partial_trace(luder(psi, dir, measured), remote)};
}

Vector2 to_frame(const Basis &basis, const Vector2 &v) { return Vector2{inner(basis[0], v), inner(basis[1], v)}; }

Vector2 from_frame(const Basis &basis, const Vector2 &coords) {
    return coords[0] * basis[0] + coords[1] * basis[1];
}

Matrix2 to_frame(const Basis &basis, const Matrix2 &m) {
    Matrix2 r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) r(i, j) = inner(basis[i], m * basis[j]);
    }
    return r;
}

SphereMap::SphereMap(const TwoQubitState &psi) : f12_(constraint_f12(psi)), schmidt_(schmidt_decompose(psi)) {}

Vector2 SphereMap::schmidt_vector(const SpinPureState &x) const {
    return from_frame(schmidt_.basis1, x.amplitudes());
}

ImagePoint SphereMap::image(const SpinPureState &x, Frame frame) const {
    return image_of(schmidt_vector(x), frame);
}

ImagePoint SphereMap::image_of(const Vector2 &x, Frame frame) const {
    const Vector2 image = f12_(x);
    ImagePoint p;
    p.norm2 = norm_squared(image);
    if (p.norm2 <= kImpossibleNorm2) {
        p.degenerate = true;
        p.theta2 = p.phi2 = p.axis_projection = kNaN;
        p.pole_inproduct = Complex(kNaN, kNaN);
        return p;
    }
    const Vector2 y = (1.0 / std::sqrt(p.norm2)) * image;
    const Vector2 coords = to_frame(schmidt_.basis2, y);
    p.axis_projection = std::norm(coords[0]) - std::norm(coords[1]);
    p.pole_inproduct = inner(y, schmidt_.basis2[0]);
    const SpinPureState angles = spin_state_of(frame == Frame::schmidt ? coords : y);
    p.theta2 = angles.theta();
    p.phi2 = angles.phi();
    return p;
}

std::optional<Cartesian> SphereMap::image_point(const SpinPureState &x) const {
    const ImagePoint p = image(x);
    if (p.degenerate) {
        return std::nullopt;
    }
    return BlochPoint(1.0, p.theta2, p.phi2).cartesian();
}

ImagePoint normalized_image(const TwoQubitState &psi, const SpinPureState &x) { return SphereMap(psi).image(x); }

ConeResult cone_of_equator(const TwoQubitState &psi) { return {std::acos(schmidt_decompose(psi).r)}; }

double LineImage::collinearity_residual() const { return norm(cross(y_plus - pivot, y_minus - pivot)); }

LineImage line_image_check(const TwoQubitState &psi, const SpinPureState &x) {
    const SphereMap map(psi);
    const auto plus = map.image_point(x);
    const auto minus = map.image_point(x.antipode());
    if (!plus || !minus) {
        throw std::domain_error("line_image_check: an endpoint has a zero image");
    }
    return {*plus, *minus, Cartesian{0.0, 0.0, map.r()}};
}

Complex orthogonality_image(const TwoQubitState &psi, const SpinPureState &x) {
    const SphereMap map(psi);
    const Vector2 a = map.f12()(map.schmidt_vector(x));
    const Vector2 b = map.f12()(map.schmidt_vector(x.antipode()));
    return inner(a, b);
}

std::vector<GridRow> sphere_deformation_grid(const TwoQubitState &psi, std::size_t n_theta, std::size_t n_phi,
                                             Frame frame) {
    if (n_theta < 2 || n_phi < 1) {
        throw std::invalid_argument("sphere_deformation_grid: need n_theta >= 2 and n_phi >= 1");
    }
    const SphereMap map(psi);
    std::vector<GridRow> rows;
    rows.reserve(n_theta * n_phi);
    for (std::size_t i = 0; i < n_theta; ++i) {
        const double theta1 = std::numbers::pi * static_cast<double>(i) / static_cast<double>(n_theta - 1);
        for (std::size_t j = 0; j < n_phi; ++j) {
            const double phi1 = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n_phi);
            const SpinPureState x(theta1, phi1);
            const ImagePoint p = frame == Frame::schmidt ? map.image(x) : map.image_of(x.amplitudes(), frame);
            rows.push_back({theta1, phi1, p.theta2, p.phi2, p.norm2, p.axis_projection, p.degenerate});
        }
    }
    return rows;
}

}  // namespace entsphere
