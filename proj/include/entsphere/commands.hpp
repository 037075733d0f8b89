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

#ifndef ENTSPHERE_COMMANDS_HPP
#define ENTSPHERE_COMMANDS_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>

#include "entsphere/io.hpp"
#include "entsphere/linalg.hpp"
#include "entsphere/measurement.hpp"
#include "entsphere/verify.hpp"

namespace entsphere::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

struct GlobalOptions {
    /// Frame of reported angles. Directions given on the command line are
    /// always in the computational frame.
    Frame frame = Frame::schmidt;
    double tolerance = io::kDocumentNormTolerance;
    bool normalize = false;
};

// Angles are radians. Each command throws io::DocumentError or
// std::invalid_argument for bad input.
void cmd_schmidt(const io::StateDocument &doc, const GlobalOptions &opts, std::ostream &out);
void cmd_collapse(const io::StateDocument &doc, double theta, double phi, Subsystem side, const GlobalOptions &opts,
                  std::ostream &out);
void cmd_luder(const io::StateDocument &doc, double theta, double phi, Subsystem side, const GlobalOptions &opts,
               std::ostream &out);
void cmd_spheremap(const io::StateDocument &doc, std::size_t n_theta, std::size_t n_phi,
                   const std::filesystem::path &path, const GlobalOptions &opts, std::ostream &out);
/// Returns kExitOk iff every suite passes.
int cmd_verify(const verify::Options &options, std::ostream &out);

/// Parses arguments and dispatches. Exit codes: 0 success, 1 verification
/// failure, 2 input error.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace entsphere::cli

#endif  // ENTSPHERE_COMMANDS_HPP
