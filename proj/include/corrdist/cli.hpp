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

// Command-line front end: standardize | distmat | center | cluster.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical failure.

#ifndef CORRDIST_CLI_HPP
#define CORRDIST_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "corrdist/barycenter.hpp"
#include "corrdist/clustering.hpp"
#include "corrdist/csv.hpp"
#include "corrdist/diagnostics.hpp"
#include "corrdist/error.hpp"
#include "corrdist/metric.hpp"
#include "corrdist/standardize.hpp"

namespace corrdist::cli {

enum ExitCode : int { ok = 0, usage_error = 1, data_error = 2, numerical_error = 3 };

[[nodiscard]] constexpr int exit_code_for(ErrorKind kind) noexcept {
    return kind == ErrorKind::convergence_failure ? numerical_error : data_error;
}

namespace detail {

struct CommonOptions {
    std::string input;
    std::string delimiter = ",";
    bool header = false;
    std::string id_column;
    std::string format = "csv";
    double eps_diag = default_eps_diag;
    bool transpose = false;
};

struct ClusterOptions {
    std::size_t k = 2;
    std::uint64_t seed = 0;
    int max_iters = 100;
    double tol = 1e-8;
    std::string init = "farthest";
};

inline void add_common(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--input", opts.input, "Input CSV path, or - for standard input")->required();
    cmd.add_option("--delimiter", opts.delimiter, "Field delimiter (a single character, or \\t)")
        ->capture_default_str();
    cmd.add_flag("--header", opts.header, "First non-blank line is a header row");
    cmd.add_option("--id-column", opts.id_column, "Header name of the identifier column");
    cmd.add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd.add_option("--eps-diag", opts.eps_diag, "Relative tolerance for rejecting constant rows")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd.add_flag("--transpose", opts.transpose, "Columns are samples instead of rows");
}

inline std::string json_string(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        switch (ch) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(ch) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(static_cast<unsigned char>(ch)));
                out += buf;
            } else {
                out += ch;
            }
        }
    }
    return out + '"';
}

inline std::string json_numbers(std::span<const double> values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += format_double(values[i]);
    }
    return out + ']';
}

inline std::string json_strings(std::span<const std::string> values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += json_string(values[i]);
    }
    return out + ']';
}

inline void csv_row(std::ostream& out, const std::string* label, std::span<const double> values) {
    bool first = true;
    if (label) {
        out << *label;
        first = false;
    }
    for (double v : values) {
        if (!first) out << ',';
        out << format_double(v);
        first = false;
    }
    out << '\n';
}

inline std::vector<std::string> component_header(const Dataset& data, std::string_view prefix) {
    if (data.component_names.size() == data.dim()) return data.component_names;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < data.dim(); ++i) names.push_back(std::string(prefix) + std::to_string(i + 1));
    return names;
}

inline void csv_header(std::ostream& out, const std::vector<std::string>& leading,
                       const std::vector<std::string>& names) {
    bool first = true;
    for (const auto* list : {&leading, &names}) {
        for (const auto& n : *list) {
            if (!first) out << ',';
            out << n;
            first = false;
        }
    }
    out << '\n';
}

inline char parse_delimiter(const std::string& text) {
    if (text == "\\t" || text == "tab") return '\t';
    if (text.size() != 1) throw CLI::ValidationError("--delimiter", "must be a single character");
    return text.front();
}

inline Dataset load(const CommonOptions& opts, std::istream& in) {
    CsvOptions csv;
    csv.delimiter = parse_delimiter(opts.delimiter);
    csv.has_header = opts.header;
    csv.id_column = opts.id_column;
    csv.transpose = opts.transpose;
    if (opts.input == "-") return parse_csv(in, csv, "<stdin>");
    std::ifstream file(opts.input);
    if (!file) throw CLI::ValidationError("--input", "cannot open '" + opts.input + "'");
    return parse_csv(file, csv, opts.input);
}

inline std::vector<StandardizedPoint> standardize_dataset(const Dataset& data, const CommonOptions& opts,
                                                          DiagnosticSink& sink) {
    std::vector<StandardizedPoint> out;
    out.reserve(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        try {
            // The D = 2 warning is per dataset, not per row.
            out.push_back(standardize(data.points[i], {opts.eps_diag}, i == 0 ? &sink : nullptr));
        } catch (const Error& e) {
            throw Error(e.kind(), data.describe(i) + ": " + e.what());
        }
    }
    return out;
}

inline void write_standardized(std::ostream& out, const Dataset& data, std::span<const StandardizedPoint> points,
                               const CommonOptions& opts) {
    const bool with_ids = !data.ids.empty();
    if (opts.format == "json") {
        out << '{';
        if (with_ids) out << "\"ids\":" << json_strings(data.ids) << ',';
        out << "\"points\":[";
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i) out << ',';
            out << json_numbers(points[i].values());
        }
        out << "]}\n";
        return;
    }
    if (opts.header) {
        std::vector<std::string> leading;
        if (with_ids) leading.push_back(data.id_header.empty() ? "id" : data.id_header);
        csv_header(out, leading, component_header(data, "x"));
    }
    for (std::size_t i = 0; i < points.size(); ++i) csv_row(out, with_ids ? &data.ids[i] : nullptr, points[i].values());
}

inline void write_distances(std::ostream& out, const Dataset& data, const DistanceMatrix& m,
                            const CommonOptions& opts) {
    const bool with_ids = !data.ids.empty();
    if (opts.format == "json") {
        out << '{';
        if (with_ids) out << "\"ids\":" << json_strings(data.ids) << ',';
        out << "\"matrix\":[";
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) out << ',';
            out << json_numbers(m.row(i));
        }
        out << "]}\n";
        return;
    }
    if (with_ids) csv_header(out, {data.id_header}, data.ids);
    for (std::size_t i = 0; i < m.size(); ++i) csv_row(out, with_ids ? &data.ids[i] : nullptr, m.row(i));
}

inline void write_center(std::ostream& out, const Dataset& data, const Barycenter& b, const CommonOptions& opts) {
    if (opts.format == "json") {
        out << "{\"point\":" << json_numbers(b.point.values()) << ",\"eigenvalue\":" << format_double(b.eigenvalue)
            << ",\"objective\":" << format_double(b.objective)
            << ",\"degenerate\":" << (b.degenerate ? "true" : "false") << "}\n";
        return;
    }
    csv_header(out, {"eigenvalue", "objective", "degenerate"}, component_header(data, "g"));
    out << format_double(b.eigenvalue) << ',' << format_double(b.objective) << ',' << (b.degenerate ? "true" : "false");
    for (double v : b.point.values()) out << ',' << format_double(v);
    out << '\n';
}

inline void write_clusters(std::ostream& out, const Dataset& data, const ClusterModel& model,
                           const CommonOptions& opts) {
    if (opts.format == "json") {
        out << "{\"centers\":[";
        for (std::size_t c = 0; c < model.centers.size(); ++c) {
            if (c) out << ',';
            out << json_numbers(model.centers[c].values());
        }
        out << "],\"assignments\":[";
        for (std::size_t j = 0; j < model.assignments.size(); ++j) {
            if (j) out << ',';
            out << model.assignments[j];
        }
        out << "],\"inertia\":" << format_double(model.inertia) << ",\"iterations\":" << model.iterations_run
            << ",\"converged\":" << (model.converged ? "true" : "false") << "}\n";
        return;
    }
    // Two tables separated by a blank line: assignments, then centers.
    const bool with_ids = !data.ids.empty();
    out << (with_ids ? (data.id_header.empty() ? "id" : data.id_header) : "index") << ",cluster\n";
    for (std::size_t j = 0; j < model.assignments.size(); ++j) {
        out << (with_ids ? data.ids[j] : std::to_string(j)) << ',' << model.assignments[j] << '\n';
    }
    out << '\n';
    csv_header(out, {"cluster"}, component_header(data, "g"));
    for (std::size_t c = 0; c < model.centers.size(); ++c) {
        const std::string label = std::to_string(c);
        csv_row(out, &label, model.centers[c].values());
    }
}

} // namespace detail

/// Runs one subcommand. Results go to `out`; errors and warnings to `err`.
inline int run_cli(int argc, const char* const* argv, std::istream& in = std::cin, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"Correlation distance, eigenvector barycenters and correlation k-means", "corrdist"};
    app.require_subcommand(1);

    detail::CommonOptions common;
    detail::ClusterOptions cluster_opts;

    auto* standardize_cmd = app.add_subcommand("standardize", "Center and reduce every row");
    auto* distmat_cmd = app.add_subcommand("distmat", "Pairwise correlation distance matrix");
    auto* center_cmd = app.add_subcommand("center", "Center of mass of all rows");
    auto* cluster_cmd = app.add_subcommand("cluster", "Correlation k-means");
    for (auto* cmd : {standardize_cmd, distmat_cmd, center_cmd, cluster_cmd}) detail::add_common(*cmd, common);
    cluster_cmd->add_option("--k", cluster_opts.k, "Number of clusters")->required()->check(CLI::PositiveNumber);
    cluster_cmd->add_option("--seed", cluster_opts.seed, "Seed for random initialization")->capture_default_str();
    cluster_cmd->add_option("--max-iters", cluster_opts.max_iters, "Iteration budget")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cluster_cmd->add_option("--tol", cluster_opts.tol, "Stop when inertia improves by less than this")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cluster_cmd->add_option("--init", cluster_opts.init, "Initialization")
        ->check(CLI::IsMember({"farthest", "random"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    StreamSink sink(err);
    try {
        const Dataset data = detail::load(common, in);
        const auto points = detail::standardize_dataset(data, common, sink);

        if (standardize_cmd->parsed()) {
            detail::write_standardized(out, data, points, common);
        } else if (distmat_cmd->parsed()) {
            detail::write_distances(out, data, distance_matrix(points), common);
        } else if (center_cmd->parsed()) {
            const auto b = center_of_mass(points);
            if (b.degenerate) sink.warn("top eigenvalue is repeated; the center is one of several minimizers");
            detail::write_center(out, data, b, common);
        } else {
            ClusteringConfig cfg;
            cfg.k = cluster_opts.k;
            cfg.seed = cluster_opts.seed;
            cfg.max_iters = cluster_opts.max_iters;
            cfg.tol = cluster_opts.tol;
            cfg.init = cluster_opts.init == "random" ? InitMethod::random_distinct : InitMethod::farthest_point;
            detail::write_clusters(out, data, fit(points, cfg), common);
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    out.flush();
    return ok;
}

} // namespace corrdist::cli

#endif // CORRDIST_CLI_HPP
