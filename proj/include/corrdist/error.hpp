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

#ifndef CORRDIST_ERROR_HPP
#define CORRDIST_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace corrdist {

enum class ErrorKind {
    invalid_input,       // non-finite component, D < 2, broken invariant
    degenerate_input,    // point on (or numerically on) the constant line
    dimension_mismatch,
    empty_input,
    too_few_points,      // k > N
    convergence_failure,
    ragged_rows,
    non_numeric_field,
    empty_file,
    duplicate_identifier,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::degenerate_input: return "DegenerateInput";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::empty_input: return "EmptyInput";
    case ErrorKind::too_few_points: return "TooFewPoints";
    case ErrorKind::convergence_failure: return "ConvergenceFailure";
    case ErrorKind::ragged_rows: return "RaggedRows";
    case ErrorKind::non_numeric_field: return "NonNumericField";
    case ErrorKind::empty_file: return "EmptyFile";
    case ErrorKind::duplicate_identifier: return "DuplicateIdentifier";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

namespace detail {

inline void require_same_dimension(std::size_t a, std::size_t b) {
    if (a != b) {
        throw Error(ErrorKind::dimension_mismatch,
                    "dimension " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

} // namespace detail
} // namespace corrdist

#endif // CORRDIST_ERROR_HPP
