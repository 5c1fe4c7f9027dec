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

#ifndef CORRDIST_DIAGNOSTICS_HPP
#define CORRDIST_DIAGNOSTICS_HPP

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace corrdist {

/// Receiver for non-fatal warnings. The library never writes to a global
/// stream; callers pass a sink (or nullptr to discard).
class DiagnosticSink {
public:
    virtual ~DiagnosticSink() = default;
    virtual void warn(std::string_view message) = 0;
};

class StreamSink final : public DiagnosticSink {
public:
    explicit StreamSink(std::ostream& os) : os_(&os) {}
    void warn(std::string_view message) override { *os_ << "warning: " << message << '\n'; }

private:
    std::ostream* os_;
};

/// Keeps every warning; mostly useful in tests.
class CollectingSink final : public DiagnosticSink {
public:
    void warn(std::string_view message) override { messages_.emplace_back(message); }
    [[nodiscard]] const std::vector<std::string>& messages() const noexcept { return messages_; }

private:
    std::vector<std::string> messages_;
};

} // namespace corrdist

#endif // CORRDIST_DIAGNOSTICS_HPP
