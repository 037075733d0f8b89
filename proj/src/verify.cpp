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

#include "entsphere/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "entsphere/io.hpp"
#include "entsphere/measurement.hpp"

namespace entsphere::verify {

namespace {

using oracle::RandomSource;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

std::string num(double v) { return io::format_number(v); }

std::string describe_vector(const Vector2 &v) {
    return "[" + num(v[0].real()) + "," + num(v[0].imag()) + "; " + num(v[1].real()) + "," + num(v[1].imag()) + "]";
}

std::string describe_point(const BlochPoint &p) {
    return "u(" + num(p.r()) + "," + num(p.theta()) + "," + num(p.phi()) + ")";
}

std::string case_label(std::size_t k) { return "case " + std::to_string(k) + ":"; }

Vector2 random_vector2(RandomSource &rng) { return Vector2{rng.complex_normal(), rng.complex_normal()}; }

Matrix2 random_matrix2(RandomSource &rng) { return oracle::random_unitary2(rng) * oracle::random_hermitian2(rng); }

Subsystem random_side(RandomSource &rng) { return rng.uniform() < 0.5 ? Subsystem::first : Subsystem::second; }

SpinPureState random_spin_state(RandomSource &rng) {
    const MeasurementDirection d = oracle::random_direction(rng);
    return SpinPureState(d.theta(), d.phi());
}

double wrapped_angle_diff(double a, double b) {
    const double d = std::fmod(std::abs(a - b), 2.0 * kPi);
    return std::min(d, 2.0 * kPi - d);
}

double cartesian_distance(Cartesian a, Cartesian b) { return norm(a - b); }

const Basis &schmidt_basis(const SchmidtForm &s, Subsystem side) {
    return side == Subsystem::first ? s.basis1 : s.basis2;
}

// ---- linear algebra ----

SuiteReport eigen_reconstruction(SuiteContext &ctx) {
    Tally t("linalg.eigen_reconstruction", kEigenTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const Matrix2 h = oracle::random_hermitian2(ctx.rng);
        const EigenSystem2 e = hermitian_eigen2(h);
        Matrix2 rebuilt;
        double residual = e.values[0] >= e.values[1] ? 0.0 : kInf;
        for (std::size_t i = 0; i < 2; ++i) {
            rebuilt = rebuilt + Complex(e.values[i]) * outer(e.vectors[i], e.vectors[i]);
            residual = std::max(residual, max_abs_diff(h * e.vectors[i], Complex(e.values[i]) * e.vectors[i]));
        }
        residual = std::max({residual, max_abs_diff(rebuilt, h), orthonormality_defect(e.vectors)});
        t.record(residual, [&] { return case_label(k) + " hermitian diag=" + num(h(0, 0).real()); });
    }
    return t.finish();
}

SuiteReport tensor_consistency(SuiteContext &ctx) {
    Tally t("linalg.tensor_consistency", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const Matrix2 a = random_matrix2(ctx.rng);
        const Matrix2 b = random_matrix2(ctx.rng);
        const Vector2 x = oracle::random_unit_vector2(ctx.rng);
        const Vector2 y = oracle::random_unit_vector2(ctx.rng);
        const double residual = max_abs_diff(tensor(a, b) * tensor(x, y), tensor(a * x, b * y));
        t.record(residual, [&] { return case_label(k) + " x=" + describe_vector(x) + " y=" + describe_vector(y); });
    }
    return t.finish();
}

SuiteReport partial_trace_laws(SuiteContext &ctx) {
    Tally t("linalg.partial_trace", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const Matrix2 d1 = density_from_bloch(oracle::random_bloch_point(ctx.rng));
        const Matrix2 d2 = density_from_bloch(oracle::random_bloch_point(ctx.rng));
        const Matrix4 joint = tensor(d1, d2);
        const Matrix4 pure = density_of(oracle::random_two_qubit_state(ctx.rng));
        double residual = std::max(max_abs_diff(partial_trace(joint, Subsystem::first), d1),
                                   max_abs_diff(partial_trace(joint, Subsystem::second), d2));
        for (const Subsystem s : {Subsystem::first, Subsystem::second}) {
            residual = std::max(residual, std::abs(trace(partial_trace(pure, s)) - trace(pure)));
        }
        t.record(residual, [&] { return case_label(k); });
    }
    return t.finish();
}

// ---- sphere model ----

SuiteReport bloch_round_trip(SuiteContext &ctx) {
    Tally t("bloch.round_trip", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const BlochPoint p = oracle::random_bloch_point(ctx.rng);
        const BlochPoint q = bloch_from_density(density_from_bloch(p));
        const double residual = std::max(
            {std::abs(p.r() - q.r()), std::abs(p.theta() - q.theta()), wrapped_angle_diff(p.phi(), q.phi())});
        t.record(residual, [&] { return case_label(k) + " p=" + describe_point(p); });
    }
    return t.finish();
}

SuiteReport luder_geometry(SuiteContext &ctx) {
    Tally t("bloch.luder_geometry", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const BlochPoint u = oracle::random_bloch_point(ctx.rng);
        const MeasurementDirection dir = oracle::random_direction(ctx.rng);
        const BlochPoint algebraic = bloch_from_density(luder_single(density_from_bloch(u), dir));
        const BlochPoint geometric = geometric_projection(u, dir);
        t.record(cartesian_distance(algebraic.cartesian(), geometric.cartesian()),
                 [&] { return case_label(k) + " u=" + describe_point(u) + " dir=" + describe(dir); });
    }
    return t.finish();
}

SuiteReport little_sphere(SuiteContext &ctx) {
    Tally t("bloch.little_sphere", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const BlochPoint u = oracle::random_bloch_point(ctx.rng);
        const MeasurementDirection dir = oracle::random_direction(ctx.rng);
        const ReachableSphere s = reachable_sphere(u);
        const double residual = std::abs(norm(geometric_projection(u, dir).cartesian() - s.center) - s.radius);
        t.record(residual, [&] { return case_label(k) + " u=" + describe_point(u) + " dir=" + describe(dir); });
    }
    return t.finish();
}

SuiteReport luder_idempotent(SuiteContext &ctx) {
    Tally t("bloch.luder_idempotent", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const Matrix2 d = density_from_bloch(oracle::random_bloch_point(ctx.rng));
        const MeasurementDirection dir = oracle::random_direction(ctx.rng);
        const Matrix2 once = luder_single(d, dir);
        t.record(max_abs_diff(luder_single(once, dir), once), [&] { return case_label(k) + " dir=" + describe(dir); });
    }
    return t.finish();
}

SuiteReport overlap_law(SuiteContext &ctx) {
    Tally t("bloch.overlap", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const SpinPureState p = random_spin_state(ctx.rng);
        const SpinPureState q = random_spin_state(ctx.rng);
        const double amplitude_level = std::norm(inner(p.amplitudes(), q.amplitudes()));
        t.record(std::abs(overlap_from_points(p.point(), q.point()) - amplitude_level),
                 [&] { return case_label(k) + " p=" + describe_point(p.point()) + " q=" + describe_point(q.point()); });
    }
    return t.finish();
}

// ---- constraint functions ----

SuiteReport canonical_definition(SuiteContext &ctx) {
    constexpr std::size_t kProbes = 20;
    Tally t("entangle.canonical_definition", kEigenTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const TwoQubitState expanded =
            psi.expanded_in(oracle::random_basis(ctx.rng), oracle::random_basis(ctx.rng));
        const ConstraintMap f12 = constraint_f12(psi);
        const ConstraintMap g12 = constraint_f12(expanded);
        const ConstraintMap f21 = constraint_f21(psi);
        const ConstraintMap g21 = constraint_f21(expanded);
        double residual = 0.0;
        for (std::size_t p = 0; p < kProbes; ++p) {
            const Vector2 x = random_vector2(ctx.rng);
            residual = std::max({residual, max_abs_diff(f12(x), g12(x)), max_abs_diff(f21(x), g21(x))});
        }
        t.record(residual, [&] { return case_label(k) + " psi=" + describe(psi); });
    }
    return t.finish();
}

SuiteReport conjugate_linearity(SuiteContext &ctx) {
    Tally t("entangle.conjugate_linearity", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const Complex alpha = ctx.rng.complex_normal();
        const Complex beta = ctx.rng.complex_normal();
        const Vector2 x = random_vector2(ctx.rng);
        const Vector2 y = random_vector2(ctx.rng);
        double residual = 0.0;
        for (const ConstraintMap &f : {constraint_f12(psi), constraint_f21(psi)}) {
            const Vector2 lhs = apply_constraint(f, alpha * x + beta * y);
            const Vector2 rhs = std::conj(alpha) * apply_constraint(f, x) + std::conj(beta) * apply_constraint(f, y);
            residual = std::max(residual, max_abs_diff(lhs, rhs));
        }
        t.record(residual, [&] { return case_label(k) + " psi=" + describe(psi); });
    }
    return t.finish();
}

SuiteReport composition_is_partial_trace(SuiteContext &ctx) {
    Tally t("entangle.composition_partial_trace", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const ConstraintMap f12 = constraint_f12(psi);
        const ConstraintMap f21 = constraint_f21(psi);
        const double residual =
            std::max(max_abs_diff(compose_constraints(f21, f12), reduced_density(psi, Subsystem::first)),
                     max_abs_diff(compose_constraints(f12, f21), reduced_density(psi, Subsystem::second)));
        t.record(residual, [&] { return case_label(k) + " psi=" + describe(psi); });
    }
    return t.finish();
}

SuiteReport adjoint_relation(SuiteContext &ctx) {
    Tally t("entangle.adjoint_relation", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const Vector2 x1 = oracle::random_unit_vector2(ctx.rng);
        const Vector2 x2 = oracle::random_unit_vector2(ctx.rng);
        const AdjointPair pair = adjoint_relation_check(psi, x1, x2);
        t.record(std::abs(pair.lhs - pair.rhs),
                 [&] { return case_label(k) + " psi=" + describe(psi) + " x1=" + describe_vector(x1) + " x2=" + describe_vector(x2); });
    }
    return t.finish();
}

SuiteReport schmidt_soundness(SuiteContext &ctx) {
    Tally t("entangle.schmidt_soundness", kEigenTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const SchmidtForm s = schmidt_decompose(psi);
        const auto [c1, c2] = s.coefficients();
        const TwoQubitState rotated =
            apply_local(psi, oracle::random_unitary2(ctx.rng), oracle::random_unitary2(ctx.rng));
        double residual = (s.r >= 0.0 && s.r <= 1.0 && c1 >= c2 && c2 >= 0.0) ? 0.0 : kInf;
        residual = std::max({residual, std::abs(c1 * c1 + c2 * c2 - 1.0), orthonormality_defect(s.basis1),
                             orthonormality_defect(s.basis2),
                             ray_distance(reconstruct_state(s).amplitudes(), psi.amplitudes()),
                             std::abs(entanglement_parameter(psi) - s.r),
                             std::abs(entanglement_parameter(rotated) - s.r)});
        t.record(residual, [&] { return case_label(k) + " psi=" + describe(psi); });
    }
    return t.finish();
}

SuiteReport pole_mapping(SuiteContext &ctx) {
    Tally t("entangle.pole_mapping", kEigenTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const SchmidtForm s = schmidt_decompose(psi);
        const Matrix2 d2 = reduced_density(psi, Subsystem::second);
        const std::array<double, 2> eigenvalues = {0.5 * (1.0 + s.r), 0.5 * (1.0 - s.r)};
        double residual = 0.0;
        for (std::size_t i = 0; i < 2; ++i) {
            residual = std::max({residual, std::abs(norm_squared(s.basis2[i]) - 1.0),
                                 max_abs_diff(d2 * s.basis2[i], Complex(eigenvalues[i]) * s.basis2[i])});
        }
        t.record(residual, [&] { return case_label(k) + " psi=" + describe(psi); });
    }
    return t.finish();
}

// ---- measurements ----

SuiteReport probability_normalization(SuiteContext &ctx) {
    Tally t("measurement.probability_normalization", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const MeasurementDirection dir = oracle::random_direction(ctx.rng);
        const Subsystem side = random_side(ctx.rng);
        const CollapsePair c = collapse(psi, dir, side);
        const double residual = std::max({std::abs(c.up.probability + c.down.probability - 1.0),
                                          std::abs(c.up.probability - c.up.partner_norm2),
                                          std::abs(c.down.probability - c.down.partner_norm2)});
        t.record(residual, [&] { return case_label(k) + " psi=" + describe(psi) + " dir=" + describe(dir); });
    }
    return t.finish();
}

SuiteReport remote_invariance(SuiteContext &ctx) {
    Tally t("measurement.remote_invariance", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const MeasurementDirection dir = oracle::random_direction(ctx.rng);
        const Subsystem side = random_side(ctx.rng);
        t.record(remote_invariance_check(psi, dir, side).delta(), [&] {
            return case_label(k) + " psi=" + describe(psi) + " dir=" + describe(dir) +
                   " side=" + std::to_string(static_cast<int>(side));
        });
    }
    return t.finish();
}

SuiteReport measured_side_rule(SuiteContext &ctx) {
    Tally t("measurement.measured_side_rule", kEigenTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const Subsystem side = random_side(ctx.rng);
        const SpinPureState local = random_spin_state(ctx.rng);  // angles in the Schmidt frame
        const SchmidtForm s = schmidt_decompose(psi);
        const Basis &frame = schmidt_basis(s, side);
        const SpinPureState actual = spin_state_of(from_frame(frame, local.amplitudes()));
        const MeasurementDirection dir(actual.theta(), actual.phi());

        const Matrix2 measured = to_frame(frame, partial_trace(luder(psi, dir, side), side));
        const double c = std::cos(local.theta());
        const double sn = std::sin(local.theta());
        const Matrix2 predicted{0.5 * (1.0 + s.r * c * c), 0.5 * s.r * sn * c * std::polar(1.0, -local.phi()),
                                0.5 * s.r * sn * c * std::polar(1.0, local.phi()), 0.5 * (1.0 - s.r * c * c)};
        t.record(max_abs_diff(measured, predicted), [&] {
            return case_label(k) + " psi=" + describe(psi) + " schmidt-frame dir=" + describe_point(local.point());
        });
    }
    return t.finish();
}

SuiteReport norm_axis_laws(SuiteContext &ctx) {
    constexpr std::size_t kGrid = 50;
    Tally t("measurement.norm_axis_laws", kAlgebraicTolerance, ctx.faulted);
    if (ctx.cases == 0) return t.finish();
    for (const double r : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const TwoQubitState psi = state_with_parameter(r, ctx.rng);
        for (const GridRow &row : sphere_deformation_grid(psi, kGrid, kGrid)) {
            t.next_case();
            const double c = std::cos(row.theta1);
            if (r == 1.0 && row.theta1 >= kPi - kAlgebraicTolerance) {
                t.record(row.degenerate ? 0.0 : kInf, [&] { return "r=1 south pole not flagged degenerate"; });
                continue;
            }
            const double residual = std::max(std::abs(row.norm2 - 0.5 * (1.0 + r * c)),
                                             std::abs(row.axis_projection - (r + c) / (1.0 + r * c)));
            t.record(residual, [&] {
                return "r=" + num(r) + " theta1=" + num(row.theta1) + " phi1=" + num(row.phi1) + " psi=" + describe(psi);
            });
        }
    }
    return t.finish();
}

SuiteReport equator_cone(SuiteContext &ctx) {
    constexpr std::size_t kEquatorPoints = 100;
    Tally t("measurement.equator_cone", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const SphereMap map(psi);
        const double cos_beta = std::cos(cone_of_equator(psi).beta);
        double residual = std::abs(cos_beta - map.r());
        for (std::size_t j = 0; j < kEquatorPoints; ++j) {
            const SpinPureState x(0.5 * kPi, 2.0 * kPi * ctx.rng.uniform());
            residual = std::max(residual, std::abs(map.image(x).axis_projection - cos_beta));
        }
        t.record(residual, [&] { return case_label(k) + " psi=" + describe(psi); });
    }
    return t.finish();
}

SuiteReport antipodality_iff_singlet(SuiteContext &ctx) {
    // Residual 0 when "orthogonality preserved" and "r = 0" agree, 1 otherwise.
    Tally t("measurement.antipodality_iff_singlet", 0.0, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi =
            k % 2 == 0 ? state_with_parameter(0.0, ctx.rng) : oracle::random_two_qubit_state(ctx.rng);
        const double theta = 0.05 + (kPi - 0.1) * ctx.rng.uniform();
        const SpinPureState x(theta, 2.0 * kPi * ctx.rng.uniform());
        const bool preserved = std::abs(orthogonality_image(psi, x)) <= kAlgebraicTolerance;
        const bool singlet_like = entanglement_parameter(psi) <= kAlgebraicTolerance;
        t.record(preserved == singlet_like ? 0.0 : 1.0,
                 [&] { return case_label(k) + " psi=" + describe(psi) + " x=" + describe_point(x.point()); });
    }
    return t.finish();
}

SuiteReport line_collinearity(SuiteContext &ctx) {
    Tally t("measurement.line_collinearity", kEigenTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        while (entanglement_parameter(psi) >= 1.0 - 1e-6) psi = oracle::random_two_qubit_state(ctx.rng);
        const SpinPureState x = random_spin_state(ctx.rng);
        t.record(line_image_check(psi, x).collinearity_residual(),
                 [&] { return case_label(k) + " psi=" + describe(psi) + " x=" + describe_point(x.point()); });
    }
    return t.finish();
}

// ---- oracle agreement ----

SuiteReport collapse_agreement(SuiteContext &ctx) {
    Tally t("oracle.collapse_agreement", kAlgebraicTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const MeasurementDirection dir = oracle::random_direction(ctx.rng);
        const Subsystem side = random_side(ctx.rng);
        const CollapsePair primary = collapse(psi, dir, side);
        const auto reference = oracle::brute_force_collapse(psi, dir, side);
        double residual = 0.0;
        const std::array<const CollapseResult *, 2> outcomes = {&primary.up, &primary.down};
        for (std::size_t i = 0; i < 2; ++i) {
            residual = std::max(residual, std::abs(outcomes[i]->probability - reference[i].probability));
            if (outcomes[i]->possible() != reference[i].post.has_value()) {
                residual = kInf;
            } else if (outcomes[i]->possible()) {
                residual = std::max(residual, ray_distance(outcomes[i]->post_state(), *reference[i].post));
            }
        }
        t.record(residual, [&] {
            return case_label(k) + " psi=" + describe(psi) + " dir=" + describe(dir) +
                   " side=" + std::to_string(static_cast<int>(side));
        });
    }
    return t.finish();
}

SuiteReport schmidt_agreement(SuiteContext &ctx) {
    Tally t("oracle.schmidt_agreement", kEigenTolerance, ctx.faulted);
    for (std::size_t k = 0; k < ctx.cases; ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        t.record(std::abs(schmidt_decompose(psi).r - oracle::brute_force_schmidt(psi).r),
                 [&] { return case_label(k) + " psi=" + describe(psi); });
    }
    return t.finish();
}

SuiteReport monte_carlo_frequencies(SuiteContext &ctx) {
    constexpr std::size_t kMaxCases = 50;
    constexpr std::uint64_t kSamples = 100000;
    // Residual is the deviation in units of the 3-sigma binomial bound.
    Tally t("oracle.monte_carlo_3sigma", 1.0, ctx.faulted);
    for (std::size_t k = 0; k < std::min(ctx.cases, kMaxCases); ++k, t.next_case()) {
        const TwoQubitState psi = oracle::random_two_qubit_state(ctx.rng);
        const MeasurementDirection dir = oracle::random_direction(ctx.rng);
        const double p = collapse_on_first(psi, dir).up.probability;
        const auto dist = oracle::monte_carlo_outcomes(psi, dir, kSamples, ctx.rng);
        const double bound = 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(kSamples));
        const double deviation = std::abs(dist.frequency(0) - p);
        const double residual = bound > 0.0 ? deviation / bound : (deviation == 0.0 ? 0.0 : kInf);
        t.record(residual, [&] { return case_label(k) + " psi=" + describe(psi) + " dir=" + describe(dir); });
    }
    return t.finish();
}

}  // namespace

Tally::Tally(std::string name, double tolerance, bool faulted) : faulted_(faulted) {
    report_.name = std::move(name);
    report_.tolerance = tolerance;
}

std::string Tally::format(double v) { return io::format_number(v); }

std::string describe(const TwoQubitState &psi) {
    const Vector4 a = psi.amplitudes();
    std::string s = "[";
    for (std::size_t k = 0; k < 4; ++k) {
        s += (k == 0 ? "" : "; ") + num(a[k].real()) + "," + num(a[k].imag());
    }
    return s + "]";
}

std::string describe(const MeasurementDirection &dir) {
    return "(theta=" + num(dir.theta()) + ", phi=" + num(dir.phi()) + ")";
}

TwoQubitState state_with_parameter(double r, RandomSource &rng) {
    const TwoQubitState base(Vector4{std::sqrt(0.5 * (1.0 + r)), 0.0, 0.0, std::sqrt(0.5 * (1.0 - r))});
    return apply_local(base, oracle::random_unitary2(rng), oracle::random_unitary2(rng));
}

std::vector<Suite> default_suites() {
    return {
        {"linalg.eigen_reconstruction", eigen_reconstruction},
        {"linalg.tensor_consistency", tensor_consistency},
        {"linalg.partial_trace", partial_trace_laws},
        {"bloch.round_trip", bloch_round_trip},
        {"bloch.luder_geometry", luder_geometry},
        {"bloch.little_sphere", little_sphere},
        {"bloch.luder_idempotent", luder_idempotent},
        {"bloch.overlap", overlap_law},
        {"entangle.canonical_definition", canonical_definition},
        {"entangle.conjugate_linearity", conjugate_linearity},
        {"entangle.composition_partial_trace", composition_is_partial_trace},
        {"entangle.adjoint_relation", adjoint_relation},
        {"entangle.schmidt_soundness", schmidt_soundness},
        {"entangle.pole_mapping", pole_mapping},
        {"measurement.probability_normalization", probability_normalization},
        {"measurement.remote_invariance", remote_invariance},
        {"measurement.measured_side_rule", measured_side_rule},
        {"measurement.norm_axis_laws", norm_axis_laws},
        {"measurement.equator_cone", equator_cone},
        {"measurement.antipodality_iff_singlet", antipodality_iff_singlet},
        {"measurement.line_collinearity", line_collinearity},
        {"oracle.collapse_agreement", collapse_agreement},
        {"oracle.schmidt_agreement", schmidt_agreement},
        {"oracle.monte_carlo_3sigma", monte_carlo_frequencies},
    };
}

std::vector<SuiteReport> run_suites(const Options &options, const std::vector<Suite> &suites) {
    if (options.faulted_suite &&
        std::none_of(suites.begin(), suites.end(), [&](const Suite &s) { return s.name == *options.faulted_suite; })) {
        throw std::invalid_argument("no suite named '" + *options.faulted_suite + "'");
    }
    const RandomSource root(options.seed);
    std::vector<SuiteReport> reports;
    reports.reserve(suites.size());
    for (std::size_t i = 0; i < suites.size(); ++i) {
        RandomSource rng = root.derive(i);
        SuiteContext ctx{rng, options.cases, options.faulted_suite == suites[i].name};
        SuiteReport report = suites[i].run(ctx);
        report.name = suites[i].name;
        reports.push_back(std::move(report));
    }
    return reports;
}

bool all_passed(const std::vector<SuiteReport> &reports) {
    return std::all_of(reports.begin(), reports.end(), [](const SuiteReport &r) { return r.passed(); });
}

void print_reports(std::ostream &out, const std::vector<SuiteReport> &reports) {
    for (const auto &r : reports) {
        out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name << " cases=" << r.cases
            << " worst=" << num(r.worst_residual) << " tol=" << num(r.tolerance) << '\n';
        if (r.counterexample) {
            out << "       first counterexample: " << *r.counterexample << '\n';
        }
    }
}

}  // namespace entsphere::verify
