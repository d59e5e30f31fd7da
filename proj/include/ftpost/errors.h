// Copyright 2026 The ftpost Authors
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

#ifndef _FTPOST_ERRORS_H
#define _FTPOST_ERRORS_H

#include <stdexcept>
#include <string>

namespace ftpost {

/// Tolerance used for every probability validity check.
inline constexpr double kValidityTol = 1e-12;

/// A channel or distribution with entries outside their allowed range.
struct InvalidChannel : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A post-selected branch with non-positive acceptance weight.
struct DegenerateAcceptance : std::domain_error {
    using std::domain_error::domain_error;
};

/// An iteration that did not settle (or collapsed to the fully depolarized point).
struct NoConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A root solver whose bracket does not contain a sign change.
struct BracketFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A Monte Carlo run that could not decide either way.
struct Inconclusive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ftpost

#endif
