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

#ifndef ENTSPHERE_TESTS_SUPPORT_HPP
#define ENTSPHERE_TESTS_SUPPORT_HPP

#include <cmath>
#include <numbers>

#include "entsphere/bloch.hpp"
#include "entsphere/entangle.hpp"
#include "entsphere/linalg.hpp"
#include "entsphere/oracle.hpp"

namespace entsphere::testing {

inline constexpr double kPi = std::numbers::pi;

// 0.6|00> + 0.8|11>
inline TwoQubitState skewed_state() { return TwoQubitState(Vector4{{0.6, 0.0, 0.0, 0.8}}); }

inline Vector2 ket0() { return Vector2{{1.0, 0.0}}; }
inline Vector2 ket1() { return Vector2{{0.0, 1.0}}; }

inline Matrix2 diag(double a, double b) {
    Matrix2 m;
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

inline double distance(Cartesian a, Cartesian b) { return norm(a - b); }

// Bloch point distance that ignores the angle ambiguity on the axis.
inline double distance(const BlochPoint &a, const BlochPoint &b) { return distance(a.cartesian(), b.cartesian()); }

// Draws a state whose Schmidt parameter is near the extremes as often as in
// the bulk, so edge behavior is exercised by every property test.
inline TwoQubitState edgy_state(oracle::RandomSource &rng) {
    const double u = rng.uniform();
    if (u < 0.1) return oracle::random_product_state(rng);
    if (u < 0.2) {
        return apply_local(TwoQubitState::singlet(), oracle::random_unitary2(rng), oracle::random_unitary2(rng));
    }
    return oracle::random_two_qubit_state(rng);
}

}  // namespace entsphere::testing

#endif  // ENTSPHERE_TESTS_SUPPORT_HPP
