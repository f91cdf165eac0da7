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

#ifndef BUBBLE_SUITES_HPP
#define BUBBLE_SUITES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bubble/bubble_order.hpp"

namespace bubble {

enum class Suite { kOrder, kLattice, kLabeling, kGalois, kHochschild, kDuality, kCrown };

std::string_view suite_name(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct CheckResult {
  std::string id;
  bool ok = false;
  bool skipped = false;
  std::string detail;
  double seconds = 0;
};

struct SuiteResult {
  Suite suite = Suite::kOrder;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool ok() const;
};

struct RunConfig {
  int m = 0;
  int n = 0;
  std::vector<Suite> suites;
  std::uint64_t cap = kDefaultCap;
  /// Runs the suites concurrently; results keep the requested order.
  bool parallel = false;
};

/// Results in the order of config.suites. Throws Errc::kCapExceeded before
/// any work if Shuf(m,n) is over the cap.
std::vector<SuiteResult> run_suites(const RunConfig& config);

/// True iff some 2k elements of p induce a k-crown. Exhaustive; small p only.
bool has_crown_subposet(const FinitePoset& p, std::size_t k);

}  // namespace bubble

#endif  // BUBBLE_SUITES_HPP
