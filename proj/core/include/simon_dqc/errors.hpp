// Copyright 2026 The simon-dqc Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace simon_dqc {

/// Misuse of an API contract: mismatched vector lengths, unknown register
/// segment names, representation limits exceeded.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Invalid problem parameters (n, m, t, s) or malformed input files.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A function table that was assumed to satisfy the hidden-shift promise
/// turned out not to.
struct PromiseViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace simon_dqc
