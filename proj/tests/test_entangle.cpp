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

#include <gtest/gtest.h>

#include <stdexcept>

#include "entsphere/entangle.hpp"
#include "support.hpp"

namespace entsphere {
namespace {

using testing::diag;
using testing::ket0;
using testing::ket1;

TEST(TwoQubitState, Validation) {
    EXPECT_THROW(TwoQubitState(Vector4{{1.0, 1.0, 0.0, 0.0}}), std::invalid_argument);
    Basis skew{Vector2{{1.0, 0.0}}, Vector2{{1.0, 0.0}}};
    EXPECT_THROW(TwoQubitState(diag(1.0, 0.0), skew, computational_basis()), std::invalid_argument);
}

TEST(TwoQubitState, ExpansionPreservesVector) {
    oracle::RandomSource rng(31);
    for (int k = 0; k < 200; ++k) {
        const TwoQubitState psi = oracle::random_two_qubit_state(rng);
        const TwoQubitState re = psi.expanded_in(oracle::random_basis(rng), oracle::random_basis(rng));
        EXPECT_LE(max_abs_diff(re.amplitudes(), psi.amplitudes()), 1e-14);
        EXPECT_LE(max_abs_diff(re.amplitudes(), oracle::computational_amplitudes(re)), 1e-14);
    }
}

TEST(ConstraintF12, Examples) {
    const TwoQubitState psi = testing::skewed_state();
    EXPECT_LE(max_abs_diff(constraint_f12(psi)(ket0()), Vector2{{0.6, 0.0}}), 1e-15);
    const Vector2 s = constraint_f12(TwoQubitState::singlet())(ket0());
    EXPECT_LE(max_abs_diff(s, Vector2{{0.0, 1.0 / std::sqrt(2.0)}}), 1e-15);
    EXPECT_EQ(apply_constraint(constraint_f12(psi), Vector2{}), Vector2{});
}

TEST(ConstraintF21, Examples) {
    const TwoQubitState psi = testing::skewed_state();
    EXPECT_LE(max_abs_diff(constraint_f21(psi)(ket1()), Vector2{{0.0, 0.8}}), 1e-15);
    oracle::RandomSource rng(32);
    for (int k = 0; k < 50; ++k) {
        const Vector2 x = oracle::random_unit_vector2(rng);
        EXPECT_NEAR(norm_squared(constraint_f21(TwoQubitState::singlet())(x)), 0.5, 1e-15);
    }
}

TEST(ConstraintMap, ProductImageOnFirstFactor) {
    oracle::RandomSource rng(33);
    for (int k = 0; k < 100; ++k) {
        const Vector2 a = oracle::random_unit_vector2(rng), b = oracle::random_unit_vector2(rng);
        const TwoQubitState psi = TwoQubitState::product(a, b);
        const Vector2 y = constraint_f21(psi)(oracle::random_unit_vector2(rng));
        EXPECT_LE(std::abs(std::abs(inner(a, y)) - norm(y)), 1e-14);
        const Vector2 z = constraint_f12(psi)(oracle::random_unit_vector2(rng));
        EXPECT_LE(std::abs(std::abs(inner(b, z)) - norm(z)), 1e-14);
    }
}

TEST(ConstraintMap, Directions) {
    const TwoQubitState psi = testing::skewed_state();
    EXPECT_EQ(constraint_f12(psi).source(), Subsystem::first);
    EXPECT_EQ(constraint_f12(psi).target(), Subsystem::second);
    EXPECT_EQ(constraint_from(psi, Subsystem::second).direction(), MapDirection::second_to_first);
    EXPECT_THROW(compose_constraints(constraint_f12(psi), constraint_f12(psi)), std::invalid_argument);
}

TEST(ConstraintMap, CanonicalUnderBasisChangeProperty) {
    oracle::RandomSource rng(34);
    for (int k = 0; k < 1000; ++k) {
        const TwoQubitState psi = testing::edgy_state(rng);
        const TwoQubitState re = psi.expanded_in(oracle::random_basis(rng), oracle::random_basis(rng));
        EXPECT_LE(max_abs_diff(constraint_f12(psi).matrix(), constraint_f12(re).matrix()), 1e-12);
        EXPECT_LE(max_abs_diff(constraint_f21(psi).matrix(), constraint_f21(re).matrix()), 1e-12);
    }
}

TEST(ConstraintMap, ConjugateLinearProperty) {
    oracle::RandomSource rng(35);
    for (int k = 0; k < 1000; ++k) {
        const TwoQubitState psi = testing::edgy_state(rng);
        const Vector2 x = oracle::random_unit_vector2(rng), y = oracle::random_unit_vector2(rng);
        const Complex a = rng.complex_normal(), b = rng.complex_normal();
        for (const ConstraintMap &f : {constraint_f12(psi), constraint_f21(psi)}) {
            const Vector2 lhs = f(a * x + b * y);
            const Vector2 rhs = std::conj(a) * f(x) + std::conj(b) * f(y);
            EXPECT_LE(max_abs_diff(lhs, rhs), 1e-12 * (1.0 + std::abs(a) + std::abs(b)));
        }
    }
}

TEST(Composition, SkewedExample) {
    const TwoQubitState psi = testing::skewed_state();
    const Matrix2 d1 = compose_constraints(constraint_f21(psi), constraint_f12(psi));
    EXPECT_LE(max_abs_diff(d1, diag(0.36, 0.64)), 1e-15);
}

TEST(Composition, PartialTracesProperty) {
    oracle::RandomSource rng(36);
    for (int k = 0; k < 1000; ++k) {
        const TwoQubitState psi = testing::edgy_state(rng);
        const ConstraintMap f12 = constraint_f12(psi), f21 = constraint_f21(psi);
        const Matrix2 d1 = compose_constraints(f21, f12), d2 = compose_constraints(f12, f21);
        EXPECT_LE(max_abs_diff(d1, reduced_density(psi, Subsystem::first)), 1e-12);
        EXPECT_LE(max_abs_diff(d2, reduced_density(psi, Subsystem::second)), 1e-12);
        const Vector2 x = oracle::random_unit_vector2(rng);
        EXPECT_LE(max_abs_diff(d1 * x, f21(f12(x))), 1e-12);
    }
}

TEST(AdjointRelation, Examples) {
    const AdjointPair s = adjoint_relation_check(TwoQubitState::singlet(), ket0(), ket1());
    EXPECT_NEAR(std::abs(s.lhs - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(s.rhs - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
    const AdjointPair t = adjoint_relation_check(TwoQubitState::singlet(), ket1(), ket0());
    EXPECT_NEAR(std::abs(t.lhs + 1.0 / std::sqrt(2.0)), 0.0, 1e-15);

    oracle::RandomSource rng(37);
    const TwoQubitState psi = oracle::random_two_qubit_state(rng);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const Basis e = computational_basis();
            const AdjointPair p = adjoint_relation_check(psi, e[i], e[j]);
            EXPECT_LE(std::abs(p.lhs - std::conj(psi.amplitudes()[2 * i + j])), 1e-15);
        }
    }
}

TEST(AdjointRelation, ProductFactorization) {
    oracle::RandomSource rng(38);
    for (int k = 0; k < 100; ++k) {
        const Vector2 a = oracle::random_unit_vector2(rng), b = oracle::random_unit_vector2(rng);
        const Vector2 x1 = oracle::random_unit_vector2(rng), x2 = oracle::random_unit_vector2(rng);
        const AdjointPair p = adjoint_relation_check(TwoQubitState::product(a, b), x1, x2);
        EXPECT_LE(std::abs(p.lhs - inner(a, x1) * inner(b, x2)), 1e-14);
        EXPECT_LE(std::abs(p.lhs - p.rhs), 1e-14);
    }
}

TEST(AdjointRelation, HoldsProperty) {
    oracle::RandomSource rng(39);
    for (int k = 0; k < 1000; ++k) {
        const TwoQubitState psi = testing::edgy_state(rng);
        const AdjointPair p =
            adjoint_relation_check(psi, oracle::random_unit_vector2(rng), oracle::random_unit_vector2(rng));
        EXPECT_LE(std::abs(p.lhs - p.rhs), 1e-12);
    }
}

TEST(Schmidt, Landmarks) {
    EXPECT_NEAR(schmidt_decompose(TwoQubitState::singlet()).r, 0.0, 1e-12);
    EXPECT_NEAR(schmidt_decompose(TwoQubitState::product(ket0(), ket1())).r, 1.0, 1e-12);
    const SchmidtForm s = schmidt_decompose(testing::skewed_state());
    EXPECT_NEAR(s.r, 0.28, 1e-12);
    EXPECT_NEAR(s.coefficients()[0], 0.8, 1e-12);
    EXPECT_NEAR(s.coefficients()[1], 0.6, 1e-12);
    EXPECT_LE(ray_distance(s.basis1[0], ket1()), 1e-12);
    EXPECT_LE(ray_distance(s.basis2[0], ket1()), 1e-12);
}

TEST(Schmidt, EntanglementParameter) {
    EXPECT_NEAR(entanglement_parameter(TwoQubitState::singlet()), 0.0, 1e-12);
    EXPECT_NEAR(entanglement_parameter(TwoQubitState(Vector4{{0.0, 1.0, 0.0, 0.0}})), 1.0, 1e-12);
    EXPECT_NEAR(entanglement_parameter(testing::skewed_state()), 0.28, 1e-12);
}

TEST(Schmidt, Reconstruction) {
    SchmidtForm product{1.0, computational_basis(), computational_basis()};
    EXPECT_LE(max_abs_diff(reconstruct_state(product).amplitudes(), Vector4{{1.0, 0.0, 0.0, 0.0}}), 1e-15);
    SchmidtForm bell{0.0, computational_basis(), computational_basis()};
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_LE(max_abs_diff(reconstruct_state(bell).amplitudes(), Vector4{{h, 0.0, 0.0, h}}), 1e-15);
    const TwoQubitState psi = testing::skewed_state();
    const Vector4 back = reconstruct_state(schmidt_decompose(psi)).amplitudes();
    EXPECT_LE(ray_distance(back, psi.amplitudes()), 1e-12);
}

TEST(Schmidt, SoundnessProperty) {
    oracle::RandomSource rng(40);
    for (int k = 0; k < 1000; ++k) {
        const TwoQubitState psi = testing::edgy_state(rng);
        const SchmidtForm s = schmidt_decompose(psi);
        ASSERT_GE(s.r, 0.0);
        ASSERT_LE(s.r, 1.0);
        EXPECT_LE(orthonormality_defect(s.basis1), 1e-9);
        EXPECT_LE(orthonormality_defect(s.basis2), 1e-9);
        EXPECT_LE(ray_distance(reconstruct_state(s).amplitudes(), psi.amplitudes()), 1e-9);
        // Near the product limit the second coefficient is sqrt((1-r)/2), so
        // amplitudes are only good to about sqrt(ulp); check them elsewhere.
        if (s.r < 1.0 - 1e-6) EXPECT_LE(max_abs_diff(reconstruct_state(s).amplitudes(), psi.amplitudes()), 1e-9);
        EXPECT_NEAR(s.r, entanglement_parameter(psi), 1e-9);
        EXPECT_NEAR(s.r, oracle::brute_force_schmidt(psi).r, 1e-9);
    }
}

TEST(Schmidt, PolesMapToPoles) {
    oracle::RandomSource rng(41);
    for (int k = 0; k < 1000; ++k) {
        const TwoQubitState psi = testing::edgy_state(rng);
        const SchmidtForm s = schmidt_decompose(psi);
        const Vector2 y = constraint_f12(psi)(s.basis1[0]);
        EXPECT_LE(max_abs_diff(y, s.coefficients()[0] * s.basis2[0]), 1e-9);
        if (s.r < 1.0 - kProductThreshold) {
            const Vector2 z = constraint_f12(psi)(s.basis1[1]);
            EXPECT_LE(max_abs_diff(z, s.coefficients()[1] * s.basis2[1]), 1e-9);
        }
    }
}

TEST(Schmidt, LocalUnitaryInvariance) {
    oracle::RandomSource rng(42);
    for (int k = 0; k < 300; ++k) {
        const TwoQubitState psi = oracle::random_two_qubit_state(rng);
        const TwoQubitState moved = apply_local(psi, oracle::random_unitary2(rng), oracle::random_unitary2(rng));
        EXPECT_NEAR(schmidt_decompose(psi).r, schmidt_decompose(moved).r, 1e-9);
    }
}

}  // namespace
}  // namespace entsphere
