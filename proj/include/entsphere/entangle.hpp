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

#ifndef ENTSPHERE_ENTANGLE_HPP
#define ENTSPHERE_ENTANGLE_HPP

#include <array>

#include "entsphere/linalg.hpp"

namespace entsphere {

/// Ordered orthonormal pair of vectors spanning one spin's space.
using Basis = std::array<Vector2, 2>;

Basis computational_basis();

/// max |<b_i, b_j> - delta_ij|
double orthonormality_defect(const Basis &b);

/// Pure state of the pair, stored as the coefficient grid lambda_ij of
/// |e1^i> (x) |e2^j> with respect to a pair of orthonormal bases.
class TwoQubitState {
   public:
    /// Amplitudes in the computational order |00>, |01>, |10>, |11>.
    explicit TwoQubitState(const Vector4 &amplitudes);
    TwoQubitState(const Matrix2 &coefficients, const Basis &basis1, const Basis &basis2);

    static TwoQubitState singlet();
    static TwoQubitState product(const Vector2 &a, const Vector2 &b);

    const Matrix2 &coefficients() const { return lambda_; }
    const Basis &basis1() const { return basis1_; }
    const Basis &basis2() const { return basis2_; }

    /// Amplitudes in the computational basis.
    Vector4 amplitudes() const;
    /// The same vector re-expanded in another pair of bases.
    TwoQubitState expanded_in(const Basis &basis1, const Basis &basis2) const;

   private:
    Matrix2 lambda_;
    Basis basis1_;
    Basis basis2_;
};

/// (U1 (x) U2) |psi>, expressed in the computational basis.
TwoQubitState apply_local(const TwoQubitState &psi, const Matrix2 &u1, const Matrix2 &u2);

/// |psi><psi| in the computational basis.
Matrix4 density_of(const TwoQubitState &psi);

/// Partial trace of |psi><psi| keeping `keep`.
Matrix2 reduced_density(const TwoQubitState &psi, Subsystem keep);

/// Which spin a constraint function takes its argument from.
enum class MapDirection { first_to_second, second_to_first };

/// Conjugate-linear map x -> M conj(x) between the two spin spaces, with M
/// written in the computational bases.
class ConstraintMap {
   public:
    ConstraintMap(const Matrix2 &matrix, MapDirection direction) : matrix_(matrix), direction_(direction) {}

    const Matrix2 &matrix() const { return matrix_; }
    MapDirection direction() const { return direction_; }
    Subsystem source() const;
    Subsystem target() const;

    Vector2 operator()(const Vector2 &x) const { return matrix_ * conj(x); }

   private:
    Matrix2 matrix_;
    MapDirection direction_;
};

/// F12(psi): x1 -> sum_ij lambda_ij <x1, e1^i> e2^j, built from the state's
/// own expansion.
ConstraintMap constraint_f12(const TwoQubitState &psi);
/// F21(psi): x2 -> sum_ij lambda_ij <x2, e2^j> e1^i.
ConstraintMap constraint_f21(const TwoQubitState &psi);
/// The constraint function taking the state of `measured` to its partner.
ConstraintMap constraint_from(const TwoQubitState &psi, Subsystem measured);

Vector2 apply_constraint(const ConstraintMap &f, const Vector2 &x);

/// Matrix of the linear map outer o inner. Throws std::invalid_argument
/// unless inner's target is outer's source.
Matrix2 compose_constraints(const ConstraintMap &outer, const ConstraintMap &inner);

struct AdjointPair {
    Complex lhs;  ///< <F12(x1), x2>
    Complex rhs;  ///< <x1, F21(x2)>*
};

AdjointPair adjoint_relation_check(const TwoQubitState &psi, const Vector2 &x1, const Vector2 &x2);

/// r at or above 1 - kProductThreshold is treated as a product state when
/// completing the second Schmidt basis.
inline constexpr double kProductThreshold = 1e-10;

/// psi = sqrt((1+r)/2) x1^1 (x) x2^1 + sqrt((1-r)/2) x1^2 (x) x2^2.
struct SchmidtForm {
    double r = 1.0;
    Basis basis1;
    Basis basis2;

    /// (sqrt((1+r)/2), sqrt((1-r)/2))
    std::array<double, 2> coefficients() const;
};

/// Schmidt form through the constraint functions: basis1 diagonalizes
/// F21 o F12 = D1, and basis2 is the normalized image of basis1 under F12.
SchmidtForm schmidt_decompose(const TwoQubitState &psi);

TwoQubitState reconstruct_state(const SchmidtForm &s);

/// 2 lambda_max(D1) - 1, clamped to [0, 1].
double entanglement_parameter(const TwoQubitState &psi);

}  // namespace entsphere

#endif  // ENTSPHERE_ENTANGLE_HPP
