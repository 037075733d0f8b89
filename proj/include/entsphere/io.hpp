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

#ifndef ENTSPHERE_IO_HPP
#define ENTSPHERE_IO_HPP

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entsphere/entangle.hpp"
#include "entsphere/measurement.hpp"

namespace entsphere::io {

/// Malformed input. `field()` names the offending key, column or line.
class DocumentError : public std::runtime_error {
   public:
    DocumentError(std::string field, const std::string &message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
    const std::string &field() const { return field_; }

   private:
    std::string field_;
};

/// State file contents:
///
///     {
///       "label": "singlet",
///       "amplitudes": [[0.0, 0.0], [0.70710678118654757, 0.0],
///                      [-0.70710678118654757, 0.0], [0.0, 0.0]]
///     }
///
/// Amplitudes are [re, im] pairs in the order |00>, |01>, |10>, |11>. The
/// label is optional; other keys are rejected.
struct StateDocument {
    std::array<Complex, 4> amplitudes{};
    std::optional<std::string> label;
};

StateDocument parse_state_document(std::string_view text);
StateDocument read_state_document(const std::filesystem::path &path);
std::string format_state_document(const StateDocument &doc);
void write_state_document(const std::filesystem::path &path, const StateDocument &doc);

/// Default slack on the squared norm of a state read from a file.
inline constexpr double kDocumentNormTolerance = 1e-9;

/// Builds the state, rescaling to unit norm. Throws DocumentError on field
/// "amplitudes" if the squared norm is off by more than `tolerance` and
/// `normalize` is false, or if the vector is zero.
TwoQubitState to_state(const StateDocument &doc, double tolerance = kDocumentNormTolerance, bool normalize = false);
StateDocument to_document(const TwoQubitState &psi, std::optional<std::string> label = std::nullopt);

/// 17 significant digits; NaN prints as "nan".
std::string format_number(double v);

inline constexpr std::string_view kGridHeader = "theta1,phi1,theta2,phi2,norm2,axis_projection";

/// Header line, then one comma-separated row per grid point. Degenerate
/// rows carry "nan" for theta2, phi2 and axis_projection.
void write_grid(std::ostream &out, const std::vector<GridRow> &rows);
std::vector<GridRow> parse_grid(std::istream &in);

}  // namespace entsphere::io

#endif  // ENTSPHERE_IO_HPP
