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

#ifndef ENTSPHERE_LINALG_HPP
#define ENTSPHERE_LINALG_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace entsphere {

using Complex = std::complex<double>;

/// Tolerance for exact algebraic identities.
inline constexpr double kAlgebraicTolerance = 1e-12;
/// Tolerance for quantities derived from eigenvectors or frame changes.
inline constexpr double kEigenTolerance = 1e-9;

/// Which half of the pair an operation refers to. Subsystem 1 is the left
/// tensor factor, so |ij> has index 2i + j.
enum class Subsystem { first = 1, second = 2 };

constexpr Subsystem other(Subsystem s) {
    return s == Subsystem::first ? Subsystem::second : Subsystem::first;
}

/// Fixed-size complex column vector (dimension 2 for one spin, 4 for the pair).
template <std::size_t N>
struct Vector {
    std::array<Complex, N> c{};

    static constexpr std::size_t size() { return N; }
    Complex &operator[](std::size_t i) { return c[i]; }
    const Complex &operator[](std::size_t i) const { return c[i]; }
    bool operator==(const Vector &) const = default;
};

/// Fixed-size complex matrix, row-major.
template <std::size_t N>
struct Matrix {
    std::array<Complex, N * N> e{};

    static constexpr std::size_t rows() { return N; }
    Complex &operator()(std::size_t i, std::size_t j) { return e[i * N + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return e[i * N + j]; }
    bool operator==(const Matrix &) const = default;

    static Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
};

using Vector2 = Vector<2>;
using Vector4 = Vector<4>;
using Matrix2 = Matrix<2>;
using Matrix4 = Matrix<4>;

template <std::size_t N>
Vector<N> operator+(const Vector<N> &a, const Vector<N> &b) {
    Vector<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
    return r;
}

template <std::size_t N>
Vector<N> operator-(const Vector<N> &a, const Vector<N> &b) {
    Vector<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
    return r;
}

template <std::size_t N>
Vector<N> operator*(Complex s, const Vector<N> &a) {
    Vector<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
    return r;
}

template <std::size_t N>
Matrix<N> operator+(const Matrix<N> &a, const Matrix<N> &b) {
    Matrix<N> r;
    for (std::size_t k = 0; k < N * N; ++k) r.e[k] = a.e[k] + b.e[k];
    return r;
}

template <std::size_t N>
Matrix<N> operator-(const Matrix<N> &a, const Matrix<N> &b) {
    Matrix<N> r;
    for (std::size_t k = 0; k < N * N; ++k) r.e[k] = a.e[k] - b.e[k];
    return r;
}

template <std::size_t N>
Matrix<N> operator*(Complex s, const Matrix<N> &a) {
    Matrix<N> r;
    for (std::size_t k = 0; k < N * N; ++k) r.e[k] = s * a.e[k];
    return r;
}

template <std::size_t N>
Vector<N> operator*(const Matrix<N> &m, const Vector<N> &v) {
    Vector<N> r;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) r[i] += m(i, j) * v[j];
    }
    return r;
}

template <std::size_t N>
Matrix<N> operator*(const Matrix<N> &a, const Matrix<N> &b) {
    Matrix<N> r;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t k = 0; k < N; ++k) {
            for (std::size_t j = 0; j < N; ++j) r(i, j) += a(i, k) * b(k, j);
        }
    }
    return r;
}

template <std::size_t N>
Vector<N> conj(const Vector<N> &v) {
    Vector<N> r;
    for (std::size_t i = 0; i < N; ++i) r[i] = std::conj(v[i]);
    return r;
}

template <std::size_t N>
Matrix<N> conj(const Matrix<N> &m) {
    Matrix<N> r;
    for (std::size_t k = 0; k < N * N; ++k) r.e[k] = std::conj(m.e[k]);
    return r;
}

template <std::size_t N>
Matrix<N> transpose(const Matrix<N> &m) {
    Matrix<N> r;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) r(i, j) = m(j, i);
    }
    return r;
}

template <std::size_t N>
Matrix<N> adjoint(const Matrix<N> &m) {
    return conj(transpose(m));
}

template <std::size_t N>
Complex trace(const Matrix<N> &m) {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += m(i, i);
    return t;
}

/// <a, b>, conjugate-linear in the first argument.
template <std::size_t N>
Complex inner(const Vector<N> &a, const Vector<N> &b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += std::conj(a[i]) * b[i];
    return s;
}

template <std::size_t N>
double norm_squared(const Vector<N> &v) {
    double s = 0.0;
    for (const auto &x : v.c) s += std::norm(x);
    return s;
}

template <std::size_t N>
double norm(const Vector<N> &v) {
    return std::sqrt(norm_squared(v));
}

/// |a><b|
template <std::size_t N>
Matrix<N> outer(const Vector<N> &a, const Vector<N> &b) {
    Matrix<N> r;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) r(i, j) = a[i] * std::conj(b[j]);
    }
    return r;
}

/// Largest entrywise modulus of a - b.
template <std::size_t N>
double max_abs_diff(const Matrix<N> &a, const Matrix<N> &b) {
    double m = 0.0;
    for (std::size_t k = 0; k < N * N; ++k) m = std::max(m, std::abs(a.e[k] - b.e[k]));
    return m;
}

template <std::size_t N>
double max_abs_diff(const Vector<N> &a, const Vector<N> &b) {
    double m = 0.0;
    for (std::size_t k = 0; k < N; ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

template <std::size_t N>
bool is_finite(const Vector<N> &v) {
    for (const auto &x : v.c) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    }
    return true;
}

template <std::size_t N>
bool is_finite(const Matrix<N> &m) {
    for (const auto &x : m.e) {
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    }
    return true;
}

/// max |M - M^dagger| entry.
template <std::size_t N>
double hermiticity_defect(const Matrix<N> &m) {
    return max_abs_diff(m, adjoint(m));
}

/// Distance of two unit vectors from representing the same ray: 1 - |<a,b>|.
template <std::size_t N>
double ray_distance(const Vector<N> &a, const Vector<N> &b) {
    return std::abs(1.0 - std::abs(inner(a, b)));
}

/// Component (2i + j) is a_i b_j.
Vector4 tensor(const Vector2 &a, const Vector2 &b);

/// Entry (2i + j, 2k + l) is A(i,k) B(j,l).
Matrix4 tensor(const Matrix2 &a, const Matrix2 &b);

/// Reduced density matrix of subsystem `keep`, summing over the other index.
/// Throws std::invalid_argument if trace(d) differs from 1 by more than 1e-12.
Matrix2 partial_trace(const Matrix4 &d, Subsystem keep);

/// |x><x| for a unit vector x. Throws std::invalid_argument if |x|^2 != 1.
Matrix2 projector(const Vector2 &x);

/// Multiplies v by the phase that makes its first largest-modulus component
/// real and non-negative.
Vector2 phase_normalized(const Vector2 &v);

/// A unit vector orthogonal to the unit vector v, phase-normalized.
Vector2 orthogonal_complement(const Vector2 &v);

struct EigenSystem2 {
    std::array<double, 2> values;    ///< descending
    std::array<Vector2, 2> vectors;  ///< orthonormal, paired with values
};

/// Closed-form eigensolver for a 2x2 Hermitian matrix.
///
/// Eigenvalues come from the trace and the discriminant; eigenvectors are
/// taken from the better-conditioned row of H - lambda I and phase-normalized.
/// When the spectral gap is below roughly 1e-14 times the matrix scale the
/// eigenvalues are treated as degenerate and the computational basis is
/// returned. Throws std::invalid_argument for non-Hermitian or non-finite input.
EigenSystem2 hermitian_eigen2(const Matrix2 &h);

/// Throws std::invalid_argument unless d is Hermitian, unit trace and PSD
/// (all within 1e-12).
void require_density(const Matrix2 &d);
void require_density(const Matrix4 &d);

}  // namespace entsphere

#endif  // ENTSPHERE_LINALG_HPP
