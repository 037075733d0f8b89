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

#ifndef ENTSPHERE_MEASUREMENT_HPP
#define ENTSPHERE_MEASUREMENT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "entsphere/bloch.hpp"
#include "entsphere/entangle.hpp"
#include "entsphere/linalg.hpp"

namespace entsphere {

/// Images whose squared norm is at or below this are treated as the zero
/// vector: the outcome cannot occur and has no normalized partner state.
inline constexpr double kImpossibleNorm2 = 1e-20;

/// One outcome of a collapse measurement on one spin of the pair.
struct CollapseResult {
    Subsystem measured = Subsystem::first;
    double probability = 0.0;
    /// Ray the measured spin collapses to.
    Vector2 measured_state;
    /// Normalized constraint-function image; empty for an impossible outcome.
    std::optional<Vector2> partner_state;
    /// Squared norm of the unnormalized image.
    double partner_norm2 = 0.0;

    bool possible() const { return partner_state.has_value(); }
    /// Post-measurement product state in computational order. Requires possible().
    Vector4 post_state() const;
};

struct CollapsePair {
    CollapseResult up;    ///< outcome along +dir
    CollapseResult down;  ///< outcome along -dir
};

CollapsePair collapse(const TwoQubitState &psi, const MeasurementDirection &dir, Subsystem measured);
CollapsePair collapse_on_first(const TwoQubitState &psi, const MeasurementDirection &dir);

/// Non-selective measurement of one spin applied to |psi><psi|:
/// (P (x) 1) D (P (x) 1) + ((1 - P) (x) 1) D ((1 - P) (x) 1), or the mirror.
Matrix4 luder(const TwoQubitState &psi, const MeasurementDirection &dir, Subsystem measured);
Matrix4 luder_on_first(const TwoQubitState &psi, const MeasurementDirection &dir);

struct RemoteInvariance {
    Matrix2 before;
    Matrix2 after;
    double delta() const { return max_abs_diff(before, after); }
};

/// Reduced density of the spin that is not measured, before and after a
/// Luder measurement on `measured`.
RemoteInvariance remote_invariance_check(const TwoQubitState &psi, const MeasurementDirection &dir,
                                         Subsystem measured);

/// Coordinates relative to a basis, and back.
Vector2 to_frame(const Basis &basis, const Vector2 &v);
Vector2 from_frame(const Basis &basis, const Vector2 &coords);
/// U^dagger M U with U the matrix whose columns are the basis vectors.
Matrix2 to_frame(const Basis &basis, const Matrix2 &m);

/// Which coordinates reported angles live in.
enum class Frame { schmidt, input };

/// Normalized image y = F12(x) / |F12(x)| on the second sphere.
struct ImagePoint {
    double theta2 = 0.0;
    double phi2 = 0.0;
    double norm2 = 0.0;
    /// z-coordinate of y along the Schmidt axis of the second sphere.
    double axis_projection = 0.0;
    /// <y, x2^1>
    Complex pole_inproduct;
    /// Zero image: angles and axis_projection are NaN.
    bool degenerate = false;
};

/// Collapse geometry of F12(psi) with the Schmidt frames precomputed.
/// Angles (theta1, phi1) given to `image` are relative to the first Schmidt
/// basis unless Frame::input is requested.
class SphereMap {
   public:
    explicit SphereMap(const TwoQubitState &psi);

    const SchmidtForm &schmidt() const { return schmidt_; }
    double r() const { return schmidt_.r; }
    const ConstraintMap &f12() const { return f12_; }

    /// Vector of the first spin at Schmidt-frame angles of x.
    Vector2 schmidt_vector(const SpinPureState &x) const;

    ImagePoint image(const SpinPureState &x, Frame frame = Frame::schmidt) const;
    /// Image of a first-spin vector given in computational coordinates.
    ImagePoint image_of(const Vector2 &x, Frame frame) const;
    /// Bloch vector of the image in the second Schmidt frame; nullopt when degenerate.
    std::optional<Cartesian> image_point(const SpinPureState &x) const;

   private:
    ConstraintMap f12_;
    SchmidtForm schmidt_;
};

/// x is given in the Schmidt frame of the first sphere.
ImagePoint normalized_image(const TwoQubitState &psi, const SpinPureState &x);

struct ConeResult {
    double beta = 0.0;  ///< half-angle with the north-south axis, cos(beta) = r
};

ConeResult cone_of_equator(const TwoQubitState &psi);

struct LineImage {
    Cartesian y_plus;
    Cartesian y_minus;
    Cartesian pivot;
    /// |(y_plus - pivot) x (y_minus - pivot)|
    double collinearity_residual() const;
};

/// Images of x and of its antipode, with the pivot (0, 0, r), all in the
/// second Schmidt frame. Throws std::domain_error if either image is zero.
LineImage line_image_check(const TwoQubitState &psi, const SpinPureState &x);

/// <F12(x), F12(x')> for x' the antipode of x (Schmidt frame).
Complex orthogonality_image(const TwoQubitState &psi, const SpinPureState &x);

struct GridRow {
    double theta1 = 0.0;
    double phi1 = 0.0;
    double theta2 = 0.0;
    double phi2 = 0.0;
    double norm2 = 0.0;
    double axis_projection = 0.0;
    bool degenerate = false;
};

/// theta1 = pi i / (n_theta - 1), phi1 = 2 pi j / n_phi, theta-major.
/// Throws std::invalid_argument if n_theta < 2 or n_phi < 1.
std::vector<GridRow> sphere_deformation_grid(const TwoQubitState &psi, std::size_t n_theta, std::size_t n_phi,
                                             Frame frame = Frame::schmidt);

}  // namespace entsphere

#endif  // ENTSPHERE_MEASUREMENT_HPP
