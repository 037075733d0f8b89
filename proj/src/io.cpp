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

#include "entsphere/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace entsphere::io {

namespace {

using nlohmann::json;

double number_at(const json &v, const std::string &field) {
    if (!v.is_number()) {
        throw DocumentError(field, "expected a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        throw DocumentError(field, "must be finite");
    }
    return d;
}

std::string json_number(double v) {
    std::string s = format_number(v);
    // Keep a fraction or exponent so "-0" stays a negative zero on reparse.
    if (s.find_first_of(".eE") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string json_string(const std::string &s) { return json(s).dump(); }

double parse_cell(const std::string &cell, const std::string &field) {
    if (cell == "nan") {
        return std::nan("");
    }
    const char *begin = cell.c_str();
    char *end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (cell.empty() || end != begin + cell.size() || (errno == ERANGE && std::isinf(v))) {
        throw DocumentError(field, "cannot parse '" + cell + "' as a number");
    }
    return v;
}

}  // namespace

StateDocument parse_state_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error &e) {
        throw DocumentError("document", std::string("not valid JSON (") + e.what() + ")");
    }
    if (!root.is_object()) {
        throw DocumentError("document", "expected an object with an 'amplitudes' key");
    }
    StateDocument doc;
    bool have_amplitudes = false;
    for (const auto &[key, value] : root.items()) {
        if (key == "label") {
            if (!value.is_string()) {
                throw DocumentError("label", "expected a string");
            }
            doc.label = value.get<std::string>();
        } else if (key == "amplitudes") {
            if (!value.is_array() || value.size() != 4) {
                throw DocumentError("amplitudes", "expected a list of 4 [re, im] pairs");
            }
            for (std::size_t k = 0; k < 4; ++k) {
                const std::string field = "amplitudes[" + std::to_string(k) + "]";
                const json &pair = value[k];
                if (!pair.is_array() || pair.size() != 2) {
                    throw DocumentError(field, "expected an [re, im] pair");
                }
                doc.amplitudes[k] = Complex(number_at(pair[0], field + "[0]"), number_at(pair[1], field + "[1]"));
            }
            have_amplitudes = true;
        } else {
            throw DocumentError(key, "unknown field");
        }
    }
    if (!have_amplitudes) {
        throw DocumentError("amplitudes", "missing");
    }
    return doc;
}

StateDocument read_state_document(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw DocumentError(path.string(), "cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_document(buffer.str());
}

std::string format_state_document(const StateDocument &doc) {
    std::ostringstream out;
    out << "{\n";
    if (doc.label) {
        out << "  \"label\": " << json_string(*doc.label) << ",\n";
    }
    out << "  \"amplitudes\": [";
    for (std::size_t k = 0; k < 4; ++k) {
        out << (k == 0 ? "" : ", ") << '[' << json_number(doc.amplitudes[k].real()) << ", "
            << json_number(doc.amplitudes[k].imag()) << ']';
    }
    out << "]\n}\n";
    return out.str();
}

void write_state_document(const std::filesystem::path &path, const StateDocument &doc) {
    std::ofstream out(path);
    if (!out) {
        throw DocumentError(path.string(), "cannot open file for writing");
    }
    out << format_state_document(doc);
    if (!out) {
        throw DocumentError(path.string(), "write failed");
    }
}

TwoQubitState to_state(const StateDocument &doc, double tolerance, bool normalize) {
    Vector4 a{doc.amplitudes[0], doc.amplitudes[1], doc.amplitudes[2], doc.amplitudes[3]};
    const double n2 = norm_squared(a);
    if (!(n2 > 0.0)) {
        throw DocumentError("amplitudes", "all amplitudes are zero");
    }
    if (!normalize && std::abs(n2 - 1.0) > tolerance) {
        throw DocumentError("amplitudes", "squared norm is " + format_number(n2) +
                                              ", not 1 (pass --normalize to rescale)");
    }
    return TwoQubitState((1.0 / std::sqrt(n2)) * a);
}

StateDocument to_document(const TwoQubitState &psi, std::optional<std::string> label) {
    const Vector4 a = psi.amplitudes();
    return {{a[0], a[1], a[2], a[3]}, std::move(label)};
}

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_grid(std::ostream &out, const std::vector<GridRow> &rows) {
    out << kGridHeader << '\n';
    for (const auto &row : rows) {
        out << format_number(row.theta1) << ',' << format_number(row.phi1) << ',' << format_number(row.theta2) << ','
            << format_number(row.phi2) << ',' << format_number(row.norm2) << ','
            << format_number(row.axis_projection) << '\n';
    }
}

std::vector<GridRow> parse_grid(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kGridHeader) {
        throw DocumentError("header", "expected '" + std::string(kGridHeader) + "'");
    }
    std::vector<GridRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::array<double, 6> cells{};
        std::stringstream fields(line);
        std::string cell;
        std::size_t k = 0;
        while (std::getline(fields, cell, ',')) {
            if (k == cells.size()) {
                throw DocumentError("line " + std::to_string(line_no), "more than 6 columns");
            }
            cells[k] = parse_cell(cell, "line " + std::to_string(line_no) + " column " + std::to_string(k + 1));
            ++k;
        }
        if (k != cells.size()) {
            throw DocumentError("line " + std::to_string(line_no), "expected 6 columns");
        }
        rows.push_back({cells[0], cells[1], cells[2], cells[3], cells[4], cells[5], std::isnan(cells[5])});
    }
    return rows;
}

}  // namespace entsphere::io
