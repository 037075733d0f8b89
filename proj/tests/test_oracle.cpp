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

#include <cmath>
#include <random>
#include <stdexcept>

#include "entsphere/measurement.hpp"
#include "entsphere/oracle.hpp"
#include "entsphere/verify.hpp"
#include "support.hpp"

namespace entsphere::oracle {
namespace {

TEST(RandomSource, IsSeededMersenneTwister) {
    RandomSource a(42);
    std::mt19937_64 ref(42);
    for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next_u64(), ref());
    RandomSource d(5489);
    for (int k = 1; k < 10000; ++k) d.next_u64();
    EXPECT_EQ(d.next_u64(), 9981545732273789042ull);
}

TEST(RandomSource, UniformUsesTop53Bits) {
    RandomSource a(7);
    std::mt19937_64 ref(7);
    for (int k = 0; k < 100; ++k) {
        const double u = a.uniform();
        EXPECT_EQ(u, static_cast<double>(ref() >> 11) * 0x1.0p-53);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(RandomSource, Reproducible) {
    RandomSource a(42), b(42);
    for (int k = 0; k < 50; ++k) {
        EXPECT_EQ(a.normal(), b.normal());
        EXPECT_EQ(a.complex_normal(), b.complex_normal());
    }
    const TwoQubitState x = random_two_qubit_state(a), y = random_two_qubit_state(b);
    EXPECT_EQ(x.amplitudes(), y.amplitudes());
}

TEST(RandomSource, DerivedStreamsDiffer) {
    const RandomSource root(42);
    RandomSource a = root.derive(0), b = root.derive(1), c = root.derive(0);
    EXPECT_EQ(a.seed(), splitmix64(42 ^ splitmix64(0)));
    const std::uint64_t first = a.next_u64();
    EXPECT_NE(first, b.next_u64());
    EXPECT_EQ(first, c.next_u64());
}

TEST(RandomSource, SplitMixReferenceValues) {
    // Successive outputs of the reference SplitMix64 stream seeded with 0.
    std::uint64_t state = 0;
    auto next = [&] {
        state += 0x9e3779b97f4a7c15ull;
        return splitmix64(state - 0x9e3779b97f4a7c15ull);
    };
    EXPECT_EQ(next(), 0xe220a8397b1dcdafull);
    EXPECT_EQ(next(), 0x6e789e6aa1b965f4ull);
    EXPECT_EQ(next(), 0x06c45d188009454full);
}

TEST(RandomSource, NormalMoments) {
    RandomSource rng(3);
    const int n = 200000;
    double s = 0.0, s2 = 0.0;
    for (int k = 0; k < n; ++k) {
        const double z = rng.normal();
        s += z;
        s2 += z * z;
    }
    EXPECT_NEAR(s / n, 0.0, 0.01);
    EXPECT_NEAR(s2 / n, 1.0, 0.01);
}

TEST(Generators, ProduceValidObjects) {
    RandomSource rng(4);
    for (int k = 0; k < 500; ++k) {
        EXPECT_NEAR(norm(random_unit_vector2(rng)), 1.0, 1e-14);
        EXPECT_LE(orthonormality_defect(random_basis(rng)), 1e-14);
        const Matrix2 u = random_unitary2(rng);
        EXPECT_LE(max_abs_diff(adjoint(u) * u, Matrix2::identity()), 1e-14);
        EXPECT_LE(hermiticity_defect(random_hermitian2(rng)), 0.0);
        EXPECT_NEAR(norm(random_direction(rng).axis()), 1.0, 1e-14);
        EXPECT_LE(random_bloch_point(rng).r(), 1.0);
        EXPECT_NEAR(norm(random_two_qubit_state(rng).amplitudes()), 1.0, 1e-14);
    }
}

TEST(Generators, DirectionsAreIsotropic) {
    RandomSource rng(5);
    Cartesian mean;
    double zz = 0.0;
    const int n = 100000;
    for (int k = 0; k < n; ++k) {
        const Cartesian a = random_direction(rng).axis();
        mean = mean + a;
        zz += a.z * a.z;
    }
    EXPECT_LE(norm((1.0 / n) * mean), 0.01);
    EXPECT_NEAR(zz / n, 1.0 / 3.0, 0.01);
}

TEST(BruteForce, SkewedCollapse) {
    const auto out = brute_force_collapse(testing::skewed_state(), MeasurementDirection(0.0, 0.0));
    EXPECT_NEAR(out[0].probability, 0.36, 1e-15);
    EXPECT_NEAR(out[1].probability, 0.64, 1e-15);
    EXPECT_LE(ray_distance(*out[0].post, Vector4{{1.0, 0.0, 0.0, 0.0}}), 1e-15);
}

TEST(BruteForce, SingletProjectorNorm) {
    const auto out = brute_force_collapse(TwoQubitState::singlet(), MeasurementDirection(testing::kPi / 2, 0.0));
    EXPECT_NEAR(norm_squared(out[0].unnormalized), 0.5, 1e-15);
}

TEST(BruteForce, SchmidtLandmarks) {
    EXPECT_NEAR(brute_force_schmidt(TwoQubitState::singlet()).r, 0.0, 1e-12);
    EXPECT_NEAR(brute_force_schmidt(testing::skewed_state()).r, 0.28, 1e-12);
    const BruteForceSchmidt s = brute_force_schmidt(TwoQubitState::product(testing::ket1(), testing::ket0()));
    EXPECT_NEAR(s.r, 1.0, 1e-12);
    EXPECT_NEAR(s.singular_values[0], 1.0, 1e-12);
}

// Serial re-derivation of the chunked sampler: the counts must not depend on
// how chunks are spread over threads.
TEST(MonteCarlo, MatchesSerialReplay) {
    const TwoQubitState psi = testing::skewed_state();
    const MeasurementDirection dir(1.0, 0.5);
    const double p = brute_force_collapse(psi, dir)[0].probability;
    for (std::uint64_t n : {1ull, 1000ull, 65536ull, 65537ull, 300001ull}) {
        RandomSource a(99), b(99);
        const EmpiricalDistribution got = monte_carlo_outcomes(psi, dir, n, a);
        const std::uint64_t base = b.next_u64();
        std::uint64_t ups = 0;
        for (std::uint64_t k = 0; k * 65536 < n; ++k) {
            RandomSource stream(splitmix64(base ^ splitmix64(k)));
            const std::uint64_t count = std::min<std::uint64_t>(65536, n - k * 65536);
            for (std::uint64_t i = 0; i < count; ++i) ups += stream.uniform() < p ? 1 : 0;
        }
        EXPECT_EQ(got.counts[0], ups);
        EXPECT_EQ(got.counts[0] + got.counts[1], n);
        EXPECT_EQ(a.next_u64(), b.next_u64());
    }
}

TEST(MonteCarlo, RejectsEmptyRun) {
    RandomSource rng(1);
    EXPECT_THROW(monte_carlo_outcomes(TwoQubitState::singlet(), MeasurementDirection(0.0, 0.0), 0, rng),
                 std::invalid_argument);
}

TEST(MonteCarlo, DeterministicOutcomes) {
    RandomSource rng(1);
    const auto c = monte_carlo_outcomes(TwoQubitState::product(testing::ket0(), testing::ket0()),
                                        MeasurementDirection(0.0, 0.0), 5000, rng);
    EXPECT_EQ(c.counts[0], 5000u);
    EXPECT_EQ(c.counts[1], 0u);
}

// Standardized deviations across many independent cases should look like a
// standard normal; the 3 sigma excursion rate should sit near 0.27 %.
TEST(MonteCarlo, CalibrationAcrossSeeds) {
    const int cases = 4000;
    const std::uint64_t n = 10000;
    RandomSource rng(2024);
    double s = 0.0, s2 = 0.0;
    int beyond = 0;
    for (int k = 0; k < cases; ++k) {
        const TwoQubitState psi = random_two_qubit_state(rng);
        const MeasurementDirection dir = random_direction(rng);
        const double p = collapse_on_first(psi, dir).up.probability;
        const double sigma = std::sqrt(p * (1 - p) / n);
        if (sigma < 1e-3) continue;
        const double z = (monte_carlo_outcomes(psi, dir, n, rng).frequency(0) - p) / sigma;
        s += z;
        s2 += z * z;
        beyond += std::abs(z) > 3.0 ? 1 : 0;
    }
    EXPECT_NEAR(s / cases, 0.0, 0.08);
    EXPECT_NEAR(s2 / cases, 1.0, 0.1);
    EXPECT_LE(beyond, 30);
}

}  // namespace
}  // namespace entsphere::oracle
