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

#include "entsphere/linalg.hpp"

#include <stdexcept>
#include <string>

namespace entsphere {

Vector4 tensor(const Vector2 &a, const Vector2 &b) {
    Vector4 r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) r[2 * i + j] = a[i] * b[j];
    }
    return r;
}

Matrix4 tensor(const Matrix2 &a, const Matrix2 &b) {
    Matrix4 r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) r(2 * i + j, 2 * k + l) = a(i, k) * b(j, l);
            }
        }
    }
    return r;
}

Matrix2 partial_trace(const Matrix4 &d, Subsystem keep) {
    const Complex t = trace(d);
    if (std::abs(t - 1.0) > kAlgebraicTolerance) {
        throw std::invalid_argument("partial_trace: input trace is " + std::to_string(t.real()) + " + " +
                                    std::to_string(t.imag()) + "i, expected 1");
    }
    Matrix2 r;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            for (std::size_t s = 0; s < 2; ++s) {
                if (keep == Subsystem::first) {
                    r(a, b) += d(2 * a + s, 2 * b + s);
                } else {
                    r(a, b) += d(2 * s + a, 2 * s + b);
                }
            }
        }
    }
    return r;
}

Matrix2 projector(const Vector2 &x) {
    if (!is_finite(x)) {
        throw std::invalid_argument("projector: non-finite component");
    }
    const double n2 = norm_squared(x);
    if (std::abs(n2 - 1.0) > kAlgebraicTolerance) {
        throw std::invalid_argument("projector: |x|^2 = " + std::to_string(n2) + ", expected a unit vector");
    }
    return outer(x, x);
}

Vector2 phase_normalized(const Vector2 &v) {
    const std::size_t k = std::abs(v[1]) > std::abs(v[0]) ? 1 : 0;
    const double m = std::abs(v[k]);
    if (m == 0.0) {
        return v;
    }
    return (std::conj(v[k]) / m) * v;
}

Vector2 orthogonal_complement(const Vector2 &v) {
    return phase_normalized(Vector2{-std::conj(v[1]), std::conj(v[0])});
}

EigenSystem2 hermitian_eigen2(const Matrix2 &h) {
    if (!is_finite(h)) {
        throw std::invalid_argument("hermitian_eigen2: non-finite entry");
    }
    const double defect = hermiticity_defect(h);
    if (defect > kAlgebraicTolerance) {
        throw std::invalid_argument("hermitian_eigen2: matrix is not Hermitian (defect " + std::to_string(defect) +
                                    ")");
    }
    // Symmetrize so tiny anti-Hermitian noise cannot leak into the result.
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const Complex b = 0.5 * (h(0, 1) + std::conj(h(1, 0)));

    const double mean = 0.5 * (a + d);
    const double half_diff = 0.5 * (a - d);
    const double gap = std::hypot(half_diff, std::abs(b));
    const double scale = std::max({1.0, std::abs(a), std::abs(d), std::abs(b)});

    EigenSystem2 out;
    out.values = {mean + gap, mean - gap};
    if (gap <= 1e-14 * scale) {
        out.vectors = {Vector2{1.0, 0.0}, Vector2{0.0, 1.0}};
        return out;
    }

    // Top eigenvector from whichever row of H - lambda I avoids cancellation.
    Vector2 top = half_diff >= 0.0 ? Vector2{half_diff + gap, std::conj(b)} : Vector2{b, gap - half_diff};
    top = (1.0 / norm(top)) * top;
    out.vectors = {phase_normalized(top), orthogonal_complement(top)};
    return out;
}

namespace {

// D + eps I admits a Cholesky factorization iff every eigenvalue of D exceeds -eps.
template <std::size_t N>
bool shifted_cholesky_succeeds(const Matrix<N> &d, double eps) {
    Matrix<N> l;
    for (std::size_t j = 0; j < N; ++j) {
        double diag = d(j, j).real() + eps;
        for (std::size_t k = 0; k < j; ++k) diag -= std::norm(l(j, k));
        if (!(diag > 0.0)) {
            return false;
        }
        l(j, j) = std::sqrt(diag);
        for (std::size_t i = j + 1; i < N; ++i) {
            Complex s = d(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / l(j, j).real();
        }
    }
    return true;
}

template <std::size_t N>
void require_density_impl(const Matrix<N> &d) {
    if (!is_finite(d)) {
        throw std::invalid_argument("density matrix has a non-finite entry");
    }
    const double defect = hermiticity_defect(d);
    if (defect > kAlgebraicTolerance) {
        throw std::invalid_argument("density matrix is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    if (std::abs(trace(d) - 1.0) > kAlgebraicTolerance) {
        throw std::invalid_argument("density matrix trace differs from 1");
    }
    if (!shifted_cholesky_succeeds(d, kAlgebraicTolerance)) {
        throw std::invalid_argument("density matrix has an eigenvalue below -1e-12");
    }
}

}  // namespace

void require_density(const Matrix2 &d) { require_density_impl(d); }
void require_density(const Matrix4 &d) { require_density_impl(d); }

}  // namespace entsphere
