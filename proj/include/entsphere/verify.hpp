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

#ifndef ENTSPHERE_VERIFY_HPP
#define ENTSPHERE_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entsphere/bloch.hpp"
#include "entsphere/entangle.hpp"
#include "entsphere/oracle.hpp"

namespace entsphere::verify {

inline constexpr std::uint64_t kAcceptanceSeed = 2026;
inline constexpr std::size_t kDefaultCases = 1000;

struct SuiteReport {
    std::string name;
    std::size_t cases = 0;
    double worst_residual = 0.0;
    double tolerance = 0.0;
    /// Inputs of the first failing case.
    std::optional<std::string> counterexample;

    bool passed() const { return !counterexample.has_value(); }
};

/// Collects residuals of one suite against a fixed tolerance. A NaN residual
/// counts as a failure.
class Tally {
   public:
    Tally(std::string name, double tolerance, bool faulted = false);

    template <class Describe>
    void record(double residual, Describe &&describe) {
        if (faulted_) residual += 2.0 * report_.tolerance + 1.0;
        if (!(residual <= report_.worst_residual)) report_.worst_residual = residual;
        if (!(residual <= report_.tolerance) && !report_.counterexample) {
            report_.counterexample = std::string(describe()) + " residual=" + format(residual);
        }
    }
    void next_case() { ++report_.cases; }
    SuiteReport finish() { return std::move(report_); }

   private:
    static std::string format(double v);
    SuiteReport report_;
    bool faulted_;
};

struct SuiteContext {
    oracle::RandomSource &rng;
    std::size_t cases;
    bool faulted;
};

struct Suite {
    std::string name;
    std::function<SuiteReport(SuiteContext &)> run;
};

struct Options {
    std::uint64_t seed = kAcceptanceSeed;
    std::size_t cases = kDefaultCases;
    /// Name of a suite whose residuals are deliberately pushed past tolerance;
    /// exercises the failure path of the harness itself.
    std::optional<std::string> faulted_suite;
};

/// Every invariant suite of the library, in a fixed order.
std::vector<Suite> default_suites();

/// Runs each suite with its own stream derived from (seed, suite index).
/// Throws std::invalid_argument if faulted_suite names no suite.
std::vector<SuiteReport> run_suites(const Options &options, const std::vector<Suite> &suites = default_suites());

bool all_passed(const std::vector<SuiteReport> &reports);

/// One line per suite: status, name, cases, worst residual, tolerance, and the
/// counterexample for failures.
void print_reports(std::ostream &out, const std::vector<SuiteReport> &reports);

std::string describe(const TwoQubitState &psi);
std::string describe(const MeasurementDirection &dir);

/// sqrt((1+r)/2)|00> + sqrt((1-r)/2)|11> rotated by random local unitaries.
TwoQubitState state_with_parameter(double r, oracle::RandomSource &rng);

}  // namespace entsphere::verify

#endif  // ENTSPHERE_VERIFY_HPP
