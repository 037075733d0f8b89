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

#include "entsphere/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "entsphere/bloch.hpp"
#include "entsphere/entangle.hpp"

namespace entsphere::cli {

namespace {

using io::format_number;

std::string fmt(Complex z) { return "(" + format_number(z.real()) + ", " + format_number(z.imag()) + ")"; }

std::string fmt(const Vector2 &v) { return fmt(v[0]) + " " + fmt(v[1]); }

std::string fmt(const Matrix2 &m) { return fmt(m(0, 0)) + " " + fmt(m(0, 1)) + " | " + fmt(m(1, 0)) + " " + fmt(m(1, 1)); }

std::string angles(const SpinPureState &s) {
    return "theta=" + format_number(s.theta()) + " phi=" + format_number(s.phi());
}

const char *frame_name(Frame f) { return f == Frame::schmidt ? "schmidt" : "input"; }

const Basis &basis_of(const SchmidtForm &s, Subsystem side) { return side == Subsystem::first ? s.basis1 : s.basis2; }

TwoQubitState load(const io::StateDocument &doc, const GlobalOptions &opts) {
    return io::to_state(doc, opts.tolerance, opts.normalize);
}

// Angles of v, relative to the Schmidt basis of `side` when requested.
SpinPureState reported_angles(const Vector2 &v, const SchmidtForm &s, Subsystem side, Frame frame) {
    return spin_state_of(frame == Frame::schmidt ? to_frame(basis_of(s, side), v) : v);
}

void header(std::ostream &out, const io::StateDocument &doc) {
    out << "state: " << doc.label.value_or("(unlabelled)") << '\n';
}

void print_outcome(std::ostream &out, const char *sign, const CollapseResult &c, const SchmidtForm &s, Frame frame) {
    const Subsystem partner = other(c.measured);
    out << "outcome " << sign << ":\n";
    out << "  probability: " << format_number(c.probability) << '\n';
    out << "  measured_state: " << fmt(c.measured_state) << '\n';
    out << "  measured_bloch: " << angles(reported_angles(c.measured_state, s, c.measured, frame)) << '\n';
    if (c.possible()) {
        out << "  partner_state: " << fmt(*c.partner_state) << '\n';
        out << "  partner_bloch: " << angles(reported_angles(*c.partner_state, s, partner, frame)) << '\n';
    } else {
        out << "  partner_state: impossible\n";
    }
}

void check_angles(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi)) {
        throw std::invalid_argument("--theta and --phi must be finite");
    }
}

}  // namespace

void cmd_schmidt(const io::StateDocument &doc, const GlobalOptions &opts, std::ostream &out) {
    const SchmidtForm s = schmidt_decompose(load(doc, opts));
    const auto [c1, c2] = s.coefficients();
    header(out, doc);
    out << "r: " << format_number(s.r) << '\n';
    out << "coefficients: " << format_number(c1) << ' ' << format_number(c2) << '\n';
    for (std::size_t k = 0; k < 2; ++k) {
        out << "basis1[" << k << "]: " << fmt(s.basis1[k]) << '\n';
    }
    for (std::size_t k = 0; k < 2; ++k) {
        out << "basis2[" << k << "]: " << fmt(s.basis2[k]) << '\n';
    }
}

void cmd_collapse(const io::StateDocument &doc, double theta, double phi, Subsystem side, const GlobalOptions &opts,
                  std::ostream &out) {
    check_angles(theta, phi);
    const TwoQubitState psi = load(doc, opts);
    const MeasurementDirection dir(theta, phi);
    const SchmidtForm s = schmidt_decompose(psi);
    const CollapsePair c = collapse(psi, dir, side);
    header(out, doc);
    out << "measured_side: " << static_cast<int>(side) << '\n';
    out << "direction: theta=" << format_number(theta) << " phi=" << format_number(phi) << '\n';
    out << "frame: " << frame_name(opts.frame) << '\n';
    print_outcome(out, "+", c.up, s, opts.frame);
    print_outcome(out, "-", c.down, s, opts.frame);
    out << "probability_sum: " << format_number(c.up.probability + c.down.probability) << '\n';
}

void cmd_luder(const io::StateDocument &doc, double theta, double phi, Subsystem side, const GlobalOptions &opts,
               std::ostream &out) {
    check_angles(theta, phi);
    const TwoQubitState psi = load(doc, opts);
    const MeasurementDirection dir(theta, phi);
    const SchmidtForm s = schmidt_decompose(psi);
    const Matrix4 before = density_of(psi);
    const Matrix4 after = luder(psi, dir, side);

    header(out, doc);
    out << "measured_side: " << static_cast<int>(side) << '\n';
    out << "direction: theta=" << format_number(theta) << " phi=" << format_number(phi) << '\n';
    out << "frame: " << frame_name(opts.frame) << '\n';
    if (opts.frame == Frame::schmidt) {
        out << "direction_schmidt_frame: "
            << angles(reported_angles(dir.up().amplitudes(), s, side, Frame::schmidt)) << '\n';
    }
    out << "density_after:\n";
    for (std::size_t i = 0; i < 4; ++i) {
        out << "  ";
        for (std::size_t j = 0; j < 4; ++j) out << (j == 0 ? "" : " ") << fmt(after(i, j));
        out << '\n';
    }
    for (const Subsystem keep : {Subsystem::first, Subsystem::second}) {
        const auto shown = [&](const Matrix2 &m) {
            return opts.frame == Frame::schmidt ? to_frame(basis_of(s, keep), m) : m;
        };
        const int k = static_cast<int>(keep);
        out << "reduced_before[" << k << "]: " << fmt(shown(partial_trace(before, keep))) << '\n';
        out << "reduced_after[" << k << "]: " << fmt(shown(partial_trace(after, keep))) << '\n';
    }
    const Matrix2 measured_before = partial_trace(before, side);
    const Matrix2 measured_after = partial_trace(after, side);
    out << "remote_delta: " << format_number(remote_invariance_check(psi, dir, side).delta()) << '\n';
    out << "measured_rule_delta: " << format_number(max_abs_diff(measured_after, luder_single(measured_before, dir)))
        << '\n';
}

void cmd_spheremap(const io::StateDocument &doc, std::size_t n_theta, std::size_t n_phi,
                   const std::filesystem::path &path, const GlobalOptions &opts, std::ostream &out) {
    const TwoQubitState psi = load(doc, opts);
    const std::vector<GridRow> rows = sphere_deformation_grid(psi, n_theta, n_phi, opts.frame);
    std::ofstream file(path);
    if (!file) {
        throw io::DocumentError(path.string(), "cannot open for writing");
    }
    io::write_grid(file, rows);
    file.close();
    if (!file) {
        throw io::DocumentError(path.string(), "write failed");
    }
    const double r = schmidt_decompose(psi).r;
    header(out, doc);
    out << "rows: " << rows.size() << '\n';
    out << "r: " << format_number(r) << '\n';
    out << "cone_beta: " << format_number(std::acos(r)) << '\n';
    out << "output: " << path.string() << '\n';
}

int cmd_verify(const verify::Options &options, std::ostream &out) {
    if (options.cases == 0) {
        out << "warning: --cases 0 runs no cases; every suite passes vacuously\n";
    }
    out << "seed: " << options.seed << " cases: " << options.cases << '\n';
    const auto reports = verify::run_suites(options);
    verify::print_reports(out, reports);
    std::size_t failed = 0;
    for (const auto &r : reports) failed += r.passed() ? 0 : 1;
    if (failed == 0) {
        out << "all " << reports.size() << " suites passed\n";
        return kExitOk;
    }
    out << failed << " of " << reports.size() << " suites failed\n";
    return kExitVerificationFailed;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Geometry of two-spin entanglement: Schmidt form, collapse and Luder measurements, sphere maps."};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions opts;
    bool degrees = false;
    std::string frame = "schmidt";
    app.add_flag("--degrees", degrees, "Read --theta/--phi in degrees instead of radians");
    app.add_option("--frame", frame, "Report angles relative to the Schmidt bases or the input basis")
        ->check(CLI::IsMember({"schmidt", "input"}));
    app.add_option("--tolerance", opts.tolerance, "Allowed |norm^2 - 1| of a state file")
        ->check(CLI::PositiveNumber);
    app.add_flag("--normalize", opts.normalize, "Rescale state files to unit norm instead of rejecting them");

    std::string file;
    double theta = 0.0;
    double phi = 0.0;
    int side = 1;
    std::size_t n_theta = 0;
    std::size_t n_phi = 0;
    std::string out_path;
    verify::Options vopts;
    std::string faulted;

    auto *schmidt = app.add_subcommand("schmidt", "Schmidt form and entanglement parameter r");
    schmidt->add_option("file", file, "State file")->required();

    auto add_measure = [&](const char *name, const char *help) {
        auto *sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "State file")->required();
        sub->add_option("--theta", theta, "Polar angle of the measurement direction")->required();
        sub->add_option("--phi", phi, "Azimuth of the measurement direction");
        sub->add_option("--side", side, "Which spin is measured")->check(CLI::IsMember({1, 2}));
        return sub;
    };
    auto *collapse_cmd = add_measure("collapse", "Von Neumann collapse of one spin and its partner's state");
    auto *luder_cmd = add_measure("luder", "Luder measurement of one spin and both reduced densities");

    auto *spheremap = app.add_subcommand("spheremap", "Write the sphere-deformation grid as CSV");
    spheremap->add_option("file", file, "State file")->required();
    spheremap->add_option("--ntheta", n_theta, "Polar grid points, poles included")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 20));
    spheremap->add_option("--nphi", n_phi, "Azimuthal grid points")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
    spheremap->add_option("--out", out_path, "Output CSV path")->required();

    auto *verify_cmd = app.add_subcommand("verify", "Run every invariant suite");
    verify_cmd->add_option("--seed", vopts.seed, "Random seed");
    verify_cmd->add_option("--cases", vopts.cases, "Random cases per suite");
    verify_cmd->add_option("--self-test-fault", faulted, "Force the named suite to fail")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    opts.frame = frame == "input" ? Frame::input : Frame::schmidt;
    const double scale = degrees ? std::numbers::pi / 180.0 : 1.0;
    const Subsystem measured = side == 2 ? Subsystem::second : Subsystem::first;

    try {
        if (*verify_cmd) {
            if (!faulted.empty()) vopts.faulted_suite = faulted;
            return cmd_verify(vopts, out);
        }
        if ((*collapse_cmd || *luder_cmd) && !(theta * scale >= -1e-12 && theta * scale <= std::numbers::pi + 1e-12)) {
            err << "error: --theta must lie in [0, pi] (or [0, 180] with --degrees)\n";
            return kExitInputError;
        }
        const io::StateDocument doc = io::read_state_document(file);
        if (*schmidt) {
            cmd_schmidt(doc, opts, out);
        } else if (*collapse_cmd) {
            cmd_collapse(doc, theta * scale, phi * scale, measured, opts, out);
        } else if (*luder_cmd) {
            cmd_luder(doc, theta * scale, phi * scale, measured, opts, out);
        } else if (*spheremap) {
            cmd_spheremap(doc, n_theta, n_phi, out_path, opts, out);
        }
    } catch (const io::DocumentError &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::domain_error &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}

}  // namespace entsphere::cli
