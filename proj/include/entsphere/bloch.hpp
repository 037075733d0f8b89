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

#ifndef ENTSPHERE_BLOCH_HPP
#define ENTSPHERE_BLOCH_HPP

#include <numbers>

#include "entsphere/linalg.hpp"

namespace entsphere {

/// Cartesian point in the Bloch ball.
struct Cartesian {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Cartesian operator+(Cartesian a, Cartesian b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Cartesian operator-(Cartesian a, Cartesian b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Cartesian operator*(double s, Cartesian a) { return {s * a.x, s * a.y, s * a.z}; }
};

double dot(Cartesian a, Cartesian b);
Cartesian cross(Cartesian a, Cartesian b);
double norm(Cartesian a);

/// Point u(r, theta, phi) of the closed unit ball.
///
/// Construction canonicalizes the angles: phi is wrapped into [0, 2pi), and
/// phi is forced to 0 on the axis (theta in {0, pi}) and both angles are
/// forced to 0 at the center. A radius overshooting 1 by at most 1e-12 is
/// clamped; anything else outside [0, 1] or theta outside [0, pi] throws.
class BlochPoint {
   public:
    BlochPoint() = default;
    BlochPoint(double r, double theta, double phi);

    static BlochPoint from_cartesian(Cartesian p);

    double r() const { return r_; }
    double theta() const { return theta_; }
    double phi() const { return phi_; }
    Cartesian cartesian() const;

   private:
    double r_ = 0.0;
    double theta_ = 0.0;
    double phi_ = 0.0;
};

/// Pure spin state (cos(theta/2) e^{-i phi/2}, sin(theta/2) e^{i phi/2}).
class SpinPureState {
   public:
    SpinPureState(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    Vector2 amplitudes() const;
    BlochPoint point() const { return BlochPoint(1.0, theta_, phi_); }
    /// The orthogonal state at (pi - theta, phi + pi).
    SpinPureState antipode() const;

   private:
    double theta_;
    double phi_;
};

/// Bloch angles of the ray spanned by a nonzero vector.
SpinPureState spin_state_of(const Vector2 &v);

/// Spin measurement along the unit axis u(1, theta, phi).
class MeasurementDirection {
   public:
    MeasurementDirection(double theta, double phi);

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    Cartesian axis() const;
    /// Ray of the "+" outcome.
    SpinPureState up() const { return SpinPureState(theta_, phi_); }
    /// Ray of the "-" outcome.
    SpinPureState down() const { return up().antipode(); }
    MeasurementDirection reversed() const;

   private:
    double theta_;
    double phi_;
};

/// D(r, theta, phi) = (1/2)[[1 + r cos, r sin e^{-i phi}], [r sin e^{i phi}, 1 - r cos]].
Matrix2 density_from_bloch(const BlochPoint &p);

/// Inverse of density_from_bloch. Throws std::invalid_argument for a matrix
/// that is not a density matrix.
BlochPoint bloch_from_density(const Matrix2 &d);

/// Non-selective measurement: P D P + (1 - P) D (1 - P).
Matrix2 luder_single(const Matrix2 &d, const MeasurementDirection &dir);

/// (u . a) a for the measurement axis a.
BlochPoint geometric_projection(const BlochPoint &u, const MeasurementDirection &dir);

struct ReachableSphere {
    Cartesian center;
    double radius = 0.0;
};

/// The sphere with diameter from the origin to u: every measurement sends u
/// to a point on it.
ReachableSphere reachable_sphere(const BlochPoint &u);

/// |<psi_p, psi_q>|^2 = (1 + p . q) / 2 for two surface points. Throws
/// std::invalid_argument if either point is off the surface.
double overlap_from_points(const BlochPoint &p, const BlochPoint &q);

}  // namespace entsphere

#endif  // ENTSPHERE_BLOCH_HPP
