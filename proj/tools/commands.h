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


#ifndef _FTPOST_TOOLS_COMMANDS_H
#define _FTPOST_TOOLS_COMMANDS_H

#include <ostream>
#include <string>
#include <vector>

namespace ftpost_cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitBracket = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitUsage = 64;

/// A named table of preformatted cells. CSV and JSON are both rendered from
/// the same strings so the two formats always carry identical values.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    /// Emitted as `# ` lines before the CSV header.
    std::vector<std::string> comments;

    void write_csv(std::ostream &out) const;
    void write_json(std::ostream &out) const;
};

/// Formats v with the given number of significant digits; NaN prints as `NaN`.
std::string sig(double v, int digits);

int run(int argc, char **argv, std::ostream &out, std::ostream &err);

}  // namespace ftpost_cli

#endif
