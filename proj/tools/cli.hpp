// Copyright 2026 The bubblelat Authors
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

#ifndef BUBBLE_TOOLS_CLI_HPP
#define BUBBLE_TOOLS_CLI_HPP

#include <ostream>

namespace bubble::cli {

/// Exit codes: 0 no violations, 1 violations found, 2 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kUsage = 2;

/// Output files go to $BUBBLE_OUT_DIR, or the working directory when unset.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bubble::cli

#endif  // BUBBLE_TOOLS_CLI_HPP
