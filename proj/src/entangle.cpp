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

#include "entsphere/entangle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace entsphere {

namespace {

void require_basis(const Basis &b, const char *which) {
    if (!is_finite(b[0]) || !is_finite(b[1])) {
        throw std::invalid_argument(std::string(which) + " has a non-finite component");
    }
    if (orthonormality_defect(b) > kAlgebraicTolerance) {
        throw std::invalid_argument(std::string(which) + " is not orthonormal");
    }
}

double squared_weight(const Matrix2 &m) {
    double s = 0.0;
    for (const auto &x : m.e) s += std::norm(x);
    return s;
}

}  // namespace

Basis computational_basis() { return {Vector2{1.0, 0.0}, Vector2{0.0, 1.0}}; }

double orthonormality_defect(const Basis &b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const Complex expected = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(inner(b[i], b[j]) - expected));
        }
    }
    return worst;
}

TwoQubitState::TwoQubitState(const Vector4 &amplitudes)
    : TwoQubitState(Matrix2{amplitudes[0], amplitudes[1], amplitudes[2], amplitudes[3]}, computational_basis(),
                    computational_basis()) {}

TwoQubitState::TwoQubitState(const Matrix2 &coefficients, const Basis &basis1, const Basis &basis2)
    : lambda_(coefficients), basis1_(basis1), basis2_(basis2) {
    if (!is_finite(lambda_)) {
        throw std::invalid_argument("TwoQubitState: non-finite amplitude");
    }
    const double w = squared_weight(lambda_);
    if (std::abs(w - 1.0) > kAlgebraicTolerance) {
        throw std::invalid_argument("TwoQubitState: squared amplitudes sum to " + std::to_string(w) + ", expected 1");
    }
    require_basis(basis1_, "TwoQubitState basis1");
    require_basis(basis2_, "TwoQubitState basis2");
}

TwoQubitState TwoQubitState::singlet() {
    const double h = std::numbers::sqrt2 / 2.0;
    return TwoQubitState(Vector4{0.0, h, -h, 0.0});
}

TwoQubitState TwoQubitState::product(const Vector2 &a, const Vector2 &b) { return TwoQubitState(tensor(a, b)); }

Vector4 TwoQubitState::amplitudes() const {
    Vector4 psi;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) psi = psi + lambda_(i, j) * tensor(basis1_[i], basis2_[j]);
    }
    return psi;
}

TwoQubitState TwoQubitState::expanded_in(const Basis &basis1, const Basis &basis2) const {
    require_basis(basis1, "expanded_in basis1");
    require_basis(basis2, "expanded_in basis2");
    const Vector4 psi = amplitudes();
    Matrix2 lambda;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) lambda(i, j) = inner(tensor(basis1[i], basis2[j]), psi);
    }
    return TwoQubitState(lambda, basis1, basis2);
}

TwoQubitState apply_local(const TwoQubitState &psi, const Matrix2 &u1, const Matrix2 &u2) {
    return TwoQubitState(tensor(u1, u2) * psi.amplitudes());
}

Matrix4 density_of(const TwoQubitState &psi) {
    const Vector4 a = psi.amplitudes();
    return outer(a, a);
}

Matrix2 reduced_density(const TwoQubitState &psi, Subsystem keep) { return partial_trace(density_of(psi), keep); }

Subsystem ConstraintMap::source() const {
    return direction_ == MapDirection::first_to_second ? Subsystem::first : Subsystem::second;
}

Subsystem ConstraintMap::target() const { return other(source()); }

ConstraintMap constraint_f12(const TwoQubitState &psi) {
    // <x, e> = e^T conj(x), so each term contributes e2^j (e1^i)^T.
    Matrix2 m;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const Vector2 &in = psi.basis1()[i];
            const Vector2 &out = psi.basis2()[j];
            for (std::size_t a = 0; a < 2; ++a) {
                for (std::size_t b = 0; b < 2; ++b) m(a, b) += psi.coefficients()(i, j) * out[a] * in[b];
            }
        }
    }
    return ConstraintMap(m, MapDirection::first_to_second);
}

ConstraintMap constraint_f21(const TwoQubitState &psi) {
    Matrix2 m;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const Vector2 &in = psi.basis2()[j];
            const Vector2 &out = psi.basis1()[i];
            for (std::size_t a = 0; a < 2; ++a) {
                for (std::size_t b = 0; b < 2; ++b) m(a, b) += psi.coefficients()(i, j) * out[a] * in[b];
            }
        }
    }
    return ConstraintMap(m, MapDirection::second_to_first);
}

ConstraintMap constraint_from(const TwoQubitState &psi, Subsystem measured) {
    return measured == Subsystem::first ? constraint_f12(psi) : constraint_f21(psi);
}

Vector2 apply_constraint(const ConstraintMap &f, const Vector2 &x) { return f(x); }

Matrix2 compose_constraints(const ConstraintMap &outer, const ConstraintMap &inner) {
    if (inner.target() != outer.source()) {
        throw std::invalid_argument("compose_constraints: inner map does not land in the outer map's domain");
    }
    // outer(inner(x)) = Mo conj(Mi conj(x)) = Mo conj(Mi) x
    return outer.matrix() * conj(inner.matrix());
}

AdjointPair adjoint_relation_check(const TwoQubitState &psi, const Vector2 &x1, const Vector2 &x2) {
    const Vector2 image1 = constraint_f12(psi)(x1);
    const Vector2 image2 = constraint_f21(psi)(x2);
    return {inner(image1, x2), std::conj(inner(x1, image2))};
}

std::array<double, 2> SchmidtForm::coefficients() const {
    return {std::sqrt(0.5 * (1.0 + r)), std::sqrt(std::max(0.0, 0.5 * (1.0 - r)))};
}

SchmidtForm schmidt_decompose(const TwoQubitState &psi) {
    const ConstraintMap f12 = constraint_f12(psi);
    const ConstraintMap f21 = constraint_f21(psi);
    const EigenSystem2 eig = hermitian_eigen2(compose_constraints(f21, f12));

    SchmidtForm s;
    s.r = std::clamp(2.0 * eig.values[0] - 1.0, 0.0, 1.0);
    s.basis1 = eig.vectors;
    s.basis2[0] = std::sqrt(2.0 / (1.0 + s.r)) * f12(s.basis1[0]);
    if (s.r < 1.0 - kProductThreshold) {
        s.basis2[1] = std::sqrt(2.0 / (1.0 - s.r)) * f12(s.basis1[1]);
    } else {
        // Second coefficient vanishes; any orthogonal completion reproduces psi.
        s.basis2[1] = orthogonal_complement(s.basis2[0]);
    }
    return s;
}

TwoQubitState reconstruct_state(const SchmidtForm &s) {
    const auto [c1, c2] = s.coefficients();
    return TwoQubitState(c1 * tensor(s.basis1[0], s.basis2[0]) + c2 * tensor(s.basis1[1], s.basis2[1]));
}

double entanglement_parameter(const TwoQubitState &psi) {
    const EigenSystem2 eig = hermitian_eigen2(reduced_density(psi, Subsystem::first));
    return std::clamp(2.0 * eig.values[0] - 1.0, 0.0, 1.0);
}

}  // namespace entsphere
