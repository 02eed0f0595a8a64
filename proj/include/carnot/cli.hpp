// Copyright 2026 The Carnot Reach Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CARNOT_CLI_HPP_
#define CARNOT_CLI_HPP_

#include <iosfwd>

namespace carnot::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs one subcommand. Structured results go to `out`;
/// errors go to `err` as {"error": ..., "invariant": ...}.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace carnot::cli

#endif  // CARNOT_CLI_HPP_
