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

#ifndef ENTSPHERE_ORACLE_HPP
#define ENTSPHERE_ORACLE_HPP

// Brute-force reference computations on the full four-dimensional space.
// Nothing here calls into the constraint-function or measurement code; the
// only shared pieces are the plain value types used to pass states around.

#include <array>
#include <cstdint>
#include <optional>
#include <random>

#include "entsphere/bloch.hpp"
#include "entsphere/entangle.hpp"
#include "entsphere/linalg.hpp"

namespace entsphere::oracle {

/// Reproducible random stream.
///
/// The generator is std::mt19937_64 seeded with the 64-bit seed. Uniform
/// doubles in [0, 1) use the top 53 bits of one draw; normal deviates use the
/// Box-Muller transform on two uniforms (both outputs are consumed in order).
/// All of this is specified exactly, so a seed reproduces the same stream on
/// every conforming platform.
class RandomSource {
   public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t next_u64() { return engine_(); }
    double uniform();
    double normal();
    Complex complex_normal();

    /// Independent stream for sub-task `index`, seeded by SplitMix64.
    RandomSource derive(std::uint64_t index) const;

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::optional<double> spare_normal_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Normalized complex-Gaussian amplitudes in the computational basis.
TwoQubitState random_two_qubit_state(RandomSource &rng);
/// Computational-basis product of two random spin states.
TwoQubitState random_product_state(RandomSource &rng);
Vector2 random_unit_vector2(RandomSource &rng);
/// Haar-random orthonormal pair.
Basis random_basis(RandomSource &rng);
/// Random unitary whose columns are random_basis.
Matrix2 random_unitary2(RandomSource &rng);
/// Hermitian matrix with complex-Gaussian entries.
Matrix2 random_hermitian2(RandomSource &rng);
/// Uniform over the sphere of directions.
MeasurementDirection random_direction(RandomSource &rng);
/// Uniform over the unit ball.
BlochPoint random_bloch_point(RandomSource &rng);

/// Amplitudes of psi in the computational basis, assembled independently of
/// TwoQubitState::amplitudes.
Vector4 computational_amplitudes(const TwoQubitState &psi);

struct BruteForceOutcome {
    double probability = 0.0;
    /// (P (x) 1)|psi>, or the mirror when measuring the second spin.
    Vector4 unnormalized;
    /// Normalized post-measurement vector; empty for a zero-probability outcome.
    std::optional<Vector4> post;
};

/// Both outcomes (+dir, -dir) of a projective measurement, using 4x4
/// operators only.
std::array<BruteForceOutcome, 2> brute_force_collapse(const TwoQubitState &psi, const MeasurementDirection &dir,
                                                      Subsystem measured = Subsystem::first);

/// Reduced density of `keep` after a Luder measurement of `measured`.
Matrix2 brute_force_luder_reduced(const TwoQubitState &psi, const MeasurementDirection &dir, Subsystem measured,
                                  Subsystem keep);

struct BruteForceSchmidt {
    double r = 1.0;
    std::array<double, 2> singular_values{};  ///< descending
    Basis basis1;                             ///< left singular vectors
    Basis basis2;                             ///< conjugated right singular vectors
};

/// Schmidt data from a Jacobi SVD of the computational coefficient grid.
BruteForceSchmidt brute_force_schmidt(const TwoQubitState &psi);

struct EmpiricalDistribution {
    std::array<std::uint64_t, 2> counts{};  ///< {+dir, -dir}
    std::uint64_t total = 0;

    double frequency(std::size_t outcome) const {
        return static_cast<double>(counts[outcome]) / static_cast<double>(total);
    }
};

/// Samples n outcomes with the brute-force probabilities. The draws are split
/// into fixed-size chunks, each with its own derived stream, so the result
/// depends only on (psi, dir, n, rng state) and not on the worker count.
/// Throws std::invalid_argument for n == 0.
EmpiricalDistribution monte_carlo_outcomes(const TwoQubitState &psi, const MeasurementDirection &dir, std::uint64_t n,
                                           RandomSource &rng, Subsystem measured = Subsystem::first);

}  // namespace entsphere::oracle

#endif  // ENTSPHERE_ORACLE_HPP
