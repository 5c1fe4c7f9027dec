// Copyright 2026 The corrdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Delimited-text ingestion and number formatting.
//
// Rows are samples and columns are components unless `transpose` is set, in
// which case each column is a sample. Blank lines are skipped; fields are
// trimmed of surrounding whitespace. Quoting is not supported.

#ifndef CORRDIST_CSV_HPP
#define CORRDIST_CSV_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "corrdist/error.hpp"
#include "corrdist/standardize.hpp"

namespace corrdist {

struct CsvOptions {
    char delimiter = ',';
    bool has_header = false;
    std::string id_column; // empty: no identifier column
    bool transpose = false;
};

struct Dataset {
    std::vector<SamplePoint> points;
    std::vector<std::string> ids;            // empty, or one per point
    std::vector<std::string> component_names; // empty, or one per component
    std::vector<std::string> origins;        // "line 3", "column 2", ... per point
    std::string id_header;                   // name of the identifier column, if any
    std::string source;

    [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
    [[nodiscard]] std::size_t dim() const noexcept { return points.empty() ? 0 : points.front().dim(); }

    /// Human-readable location of point i for error messages.
    [[nodiscard]] std::string describe(std::size_t i) const {
        std::string out = origins.empty() ? "point " + std::to_string(i + 1) : origins[i];
        if (!ids.empty()) out += " (id '" + ids[i] + "')";
        return out;
    }
};

/// 17 significant digits, enough that parsing the text back yields the same double.
[[nodiscard]] inline std::string format_double(double v) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf, static_cast<std::size_t>(n));
}

namespace detail {

inline std::string_view trim(std::string_view s) noexcept {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split(std::string_view line, char delimiter) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            return fields;
        }
        fields.push_back(trim(line.substr(start, pos - start)));
        start = pos + 1;
    }
}

inline std::optional<double> parse_number(std::string_view text) noexcept {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

} // namespace detail

/// Throws EmptyFile, RaggedRows, NonNumericField, DuplicateIdentifier, or
/// InvalidInput (unknown id column, fewer than 2 components).
[[nodiscard]] inline Dataset parse_csv(std::istream& in, const CsvOptions& options = {}, std::string source = {}) {
    if (!options.id_column.empty() && !options.has_header) {
        throw Error(ErrorKind::invalid_input, "an identifier column requires a header row");
    }

    std::vector<std::string> header;
    std::optional<std::size_t> id_index;
    std::optional<std::size_t> width;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> row_ids;
    std::vector<std::size_t> row_lines;

    std::string line;
    std::size_t line_no = 0;
    bool header_pending = options.has_header;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        const auto fields = detail::split(line, options.delimiter);

        if (header_pending) {
            header_pending = false;
            header.assign(fields.begin(), fields.end());
            width = fields.size();
            if (!options.id_column.empty()) {
                for (std::size_t c = 0; c < header.size(); ++c) {
                    if (header[c] == options.id_column) {
                        id_index = c;
                        break;
                    }
                }
                if (!id_index) {
                    throw Error(ErrorKind::invalid_input, "identifier column '" + options.id_column + "' not in header");
                }
            }
            continue;
        }

        if (!width) width = fields.size();
        if (fields.size() != *width) {
            throw Error(ErrorKind::ragged_rows, "row " + std::to_string(line_no) + " has " +
                                                    std::to_string(fields.size()) + " fields, expected " +
                                                    std::to_string(*width));
        }
        std::vector<double> values;
        values.reserve(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (id_index && c == *id_index) {
                row_ids.emplace_back(fields[c]);
                continue;
            }
            const auto v = detail::parse_number(fields[c]);
            if (!v) {
                throw Error(ErrorKind::non_numeric_field, "row " + std::to_string(line_no) + ", column " +
                                                              std::to_string(c + 1) + ": '" + std::string(fields[c]) +
                                                              "' is not a finite number");
            }
            values.push_back(*v);
        }
        rows.push_back(std::move(values));
        row_lines.push_back(line_no);
    }
    if (rows.empty()) {
        throw Error(ErrorKind::empty_file, source.empty() ? "no data rows" : source + ": no data rows");
    }

    std::vector<std::string> column_names;
    std::vector<std::size_t> column_numbers; // 1-based physical columns of the numeric fields
    for (std::size_t c = 0; c < *width; ++c) {
        if (id_index && c == *id_index) continue;
        column_numbers.push_back(c + 1);
        if (!header.empty()) column_names.push_back(header[c]);
    }

    Dataset out;
    out.source = std::move(source);
    if (id_index) out.id_header = header[*id_index];

    auto make_point = [&](std::vector<double> values, const std::string& where) {
        try {
            out.points.emplace_back(std::move(values));
        } catch (const Error& e) {
            throw Error(e.kind(), where + ": " + e.what());
        }
    };

    if (!options.transpose) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            out.origins.push_back("line " + std::to_string(row_lines[r]));
            make_point(std::move(rows[r]), out.origins.back());
        }
        out.ids = std::move(row_ids);
        out.component_names = std::move(column_names);
    } else {
        const std::size_t cols = column_numbers.size();
        for (std::size_t c = 0; c < cols; ++c) {
            std::vector<double> values(rows.size());
            for (std::size_t r = 0; r < rows.size(); ++r) values[r] = rows[r][c];
            out.origins.push_back("column " + std::to_string(column_numbers[c]));
            make_point(std::move(values), out.origins.back());
        }
        out.ids = std::move(column_names);
        out.component_names = std::move(row_ids);
    }

    std::set<std::string_view> seen;
    for (const auto& id : out.ids) {
        if (!seen.insert(id).second) {
            throw Error(ErrorKind::duplicate_identifier, "identifier '" + id + "' appears more than once");
        }
    }
    return out;
}

} // namespace corrdist

#endif // CORRDIST_CSV_HPP
