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

#include "entsphere/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace entsphere::oracle {

namespace {

using Vec2 = Eigen::Vector2cd;
using Vec4 = Eigen::Vector4cd;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kChunkSize = 1u << 16;
constexpr double kZeroNorm2 = 1e-20;

Vec2 to_eigen(const Vector2 &v) { return Vec2(v[0], v[1]); }

Vector2 from_eigen(const Vec2 &v) { return Vector2{v(0), v(1)}; }

Vector4 from_eigen(const Vec4 &v) { return Vector4{v(0), v(1), v(2), v(3)}; }

Matrix2 from_eigen(const Mat2 &m) { return Matrix2{m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

Vec4 kron(const Vec2 &a, const Vec2 &b) {
    Vec4 r;
    r << a(0) * b(0), a(0) * b(1), a(1) * b(0), a(1) * b(1);
    return r;
}

Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 r;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) r.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
    return r;
}

Vec4 state_vector(const TwoQubitState &psi) {
    Vec4 v = Vec4::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            v += psi.coefficients()(i, j) * kron(to_eigen(psi.basis1()[i]), to_eigen(psi.basis2()[j]));
        }
    }
    return v;
}

// Projector onto the "+" ray of a direction, written out from its angles.
Mat2 up_projector(const MeasurementDirection &dir) {
    const double c = std::cos(0.5 * dir.theta());
    const double s = std::sin(0.5 * dir.theta());
    const Vec2 v(c * std::polar(1.0, -0.5 * dir.phi()), s * std::polar(1.0, 0.5 * dir.phi()));
    return v * v.adjoint();
}

Mat4 lift(const Mat2 &op, Subsystem where) {
    return where == Subsystem::first ? kron(op, Mat2::Identity()) : kron(Mat2::Identity(), op);
}

Mat2 reduce(const Mat4 &d, Subsystem keep) {
    Mat2 r = Mat2::Zero();
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int s = 0; s < 2; ++s) {
                r(a, b) += keep == Subsystem::first ? d(2 * a + s, 2 * b + s) : d(2 * s + a, 2 * s + b);
            }
        }
    }
    return r;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double RandomSource::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double RandomSource::normal() {
    if (spare_normal_) {
        const double v = *spare_normal_;
        spare_normal_.reset();
        return v;
    }
    // 1 - u lies in (0, 1], keeping the logarithm finite.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    return radius * std::cos(angle);
}

Complex RandomSource::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

RandomSource RandomSource::derive(std::uint64_t index) const {
    return RandomSource(splitmix64(seed_ ^ splitmix64(index)));
}

TwoQubitState random_two_qubit_state(RandomSource &rng) {
    Vector4 a;
    for (auto &x : a.c) x = rng.complex_normal();
    return TwoQubitState((1.0 / norm(a)) * a);
}

TwoQubitState random_product_state(RandomSource &rng) {
    const Vector2 a = random_unit_vector2(rng);
    const Vector2 b = random_unit_vector2(rng);
    return TwoQubitState::product(a, b);
}

Vector2 random_unit_vector2(RandomSource &rng) {
    Vector2 v;
    for (auto &x : v.c) x = rng.complex_normal();
    return (1.0 / norm(v)) * v;
}

Basis random_basis(RandomSource &rng) {
    const Vector2 first = random_unit_vector2(rng);
    const Complex phase = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    return {first, phase * Vector2{-std::conj(first[1]), std::conj(first[0])}};
}

Matrix2 random_unitary2(RandomSource &rng) {
    const Basis b = random_basis(rng);
    return Matrix2{b[0][0], b[1][0], b[0][1], b[1][1]};
}

Matrix2 random_hermitian2(RandomSource &rng) {
    const double a = rng.normal();
    const double d = rng.normal();
    const Complex b = rng.complex_normal();
    return Matrix2{a, b, std::conj(b), d};
}

MeasurementDirection random_direction(RandomSource &rng) {
    const double theta = std::acos(std::clamp(1.0 - 2.0 * rng.uniform(), -1.0, 1.0));
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    return MeasurementDirection(theta, phi);
}

BlochPoint random_bloch_point(RandomSource &rng) {
    const MeasurementDirection d = random_direction(rng);
    return BlochPoint(std::cbrt(rng.uniform()), d.theta(), d.phi());
}

Vector4 computational_amplitudes(const TwoQubitState &psi) { return from_eigen(state_vector(psi)); }

std::array<BruteForceOutcome, 2> brute_force_collapse(const TwoQubitState &psi, const MeasurementDirection &dir,
                                                      Subsystem measured) {
    const Vec4 v = state_vector(psi);
    const Mat2 p = up_projector(dir);
    const std::array<Mat4, 2> ops = {lift(p, measured), lift(Mat2::Identity() - p, measured)};
    std::array<BruteForceOutcome, 2> out;
    for (std::size_t k = 0; k < 2; ++k) {
        const Vec4 w = ops[k] * v;
        out[k].probability = w.squaredNorm();
        out[k].unnormalized = from_eigen(w);
        if (out[k].probability > kZeroNorm2) {
            out[k].post = from_eigen(Vec4(w / std::sqrt(out[k].probability)));
        }
    }
    return out;
}

Matrix2 brute_force_luder_reduced(const TwoQubitState &psi, const MeasurementDirection &dir, Subsystem measured,
                                  Subsystem keep) {
    const Vec4 v = state_vector(psi);
    const Mat4 d = v * v.adjoint();
    const Mat2 p = up_projector(dir);
    const Mat4 a = lift(p, measured);
    const Mat4 b = lift(Mat2::Identity() - p, measured);
    return from_eigen(reduce(a * d * a + b * d * b, keep));
}

BruteForceSchmidt brute_force_schmidt(const TwoQubitState &psi) {
    const Vec4 v = state_vector(psi);
    Mat2 grid;
    grid << v(0), v(1), v(2), v(3);
    const Eigen::JacobiSVD<Mat2> svd(grid, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Vector2d s = svd.singularValues();
    BruteForceSchmidt out;
    out.singular_values = {s(0), s(1)};
    out.r = std::clamp(s(0) * s(0) - s(1) * s(1), 0.0, 1.0);
    // grid = U S V^dagger, so psi = sum_k s_k u_k (x) conj(v_k).
    for (int k = 0; k < 2; ++k) {
        out.basis1[static_cast<std::size_t>(k)] = from_eigen(Vec2(svd.matrixU().col(k)));
        out.basis2[static_cast<std::size_t>(k)] = from_eigen(Vec2(svd.matrixV().col(k).conjugate()));
    }
    return out;
}

EmpiricalDistribution monte_carlo_outcomes(const TwoQubitState &psi, const MeasurementDirection &dir, std::uint64_t n,
                                           RandomSource &rng, Subsystem measured) {
    if (n == 0) {
        throw std::invalid_argument("monte_carlo_outcomes: need at least one sample");
    }
    const double p_up = brute_force_collapse(psi, dir, measured)[0].probability;
    const std::uint64_t base = rng.next_u64();
    const std::uint64_t chunks = (n + kChunkSize - 1) / kChunkSize;
    std::vector<std::uint64_t> ups(chunks, 0);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t k = next++; k < chunks; k = next++) {
            RandomSource stream(splitmix64(base ^ splitmix64(k)));
            const std::uint64_t begin = k * kChunkSize;
            const std::uint64_t count = std::min(kChunkSize, n - begin);
            std::uint64_t hits = 0;
            for (std::uint64_t i = 0; i < count; ++i) hits += stream.uniform() < p_up ? 1 : 0;
            ups[k] = hits;
        }
    };
    const std::uint64_t workers =
        std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, std::min<std::uint64_t>(chunks, 16));
    std::vector<std::thread> pool;
    for (std::uint64_t w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto &t : pool) t.join();

    EmpiricalDistribution out;
    out.total = n;
    for (const auto u : ups) out.counts[0] += u;
    out.counts[1] = n - out.counts[0];
    return out;
}

}  // namespace entsphere::oracle
