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

#ifndef BUBBLE_HOCHSCHILD_HPP
#define BUBBLE_HOCHSCHILD_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bubble/bubble_order.hpp"
#include "bubble/poset.hpp"
#include "bubble/words.hpp"

namespace bubble {

/// Tuple over {0,1,2} with u_1 != 2 and no 1 to the right of a 0.
class Triword {
 public:
  Triword() = default;

  /// Throws Errc::kNotATriword when a condition fails.
  static Triword make(std::span<const int> entries);
  static Triword make(std::initializer_list<int> entries) {
    return make(std::span<const int>(entries.begin(), entries.size()));
  }
  static bool valid(std::span<const int> entries);

  const std::vector<int>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }

  /// `(1,2,1)`.
  std::string str() const;

  bool leq(const Triword& other) const;

  friend bool operator==(const Triword&, const Triword&) = default;
  friend auto operator<=>(const Triword&, const Triword&) = default;

 private:
  std::vector<int> entries_;
};

/// Tri(n) in lexicographic order.
std::vector<Triword> enumerate_triwords(int n);

/// 2^{n-2}(n+3) for n >= 2; 2 for n = 1.
std::uint64_t triword_count(int n);

struct TriwordFamily {
  int n = 0;
  std::vector<Triword> elements;
  FinitePoset hasse;

  std::optional<Element> find(const Triword& t) const;
  std::size_t size() const { return elements.size(); }
};

/// Tri(n) under the componentwise order.
TriwordFamily hochschild_lattice(int n);

/// Missing x_s marks position n+1-s with 2; when y_1 directly follows x_s
/// (s = 0 if y_1 is first) the non-2 positions 1..n-s get 1; the rest are 0.
/// Throws Errc::kWrongFamily unless u lies in Shuf(n-1,1).
Triword sigma_tilde(const ShuffleWord& u, int n);

/// Reversal of sigma_tilde composed with the relabeling x_s -> x_{n-s}.
std::vector<int> sigma_reversed(const ShuffleWord& u, int n);

struct HochschildReport {
  int n = 0;
  std::size_t words = 0;
  std::size_t triwords = 0;
  bool bijective = false;
  bool covers_match = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks that sigma_tilde is a bijection Shuf(n-1,1) -> Tri(n) carrying the
/// covers of Bub(n-1,1) exactly onto those of Hoch(n).
HochschildReport verify_hochschild_iso(int n, std::uint64_t cap = kDefaultCap);

}  // namespace bubble

#endif  // BUBBLE_HOCHSCHILD_HPP
