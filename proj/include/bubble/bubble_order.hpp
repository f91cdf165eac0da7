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

#ifndef BUBBLE_BUBBLE_ORDER_HPP
#define BUBBLE_BUBBLE_ORDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bubble/poset.hpp"
#include "bubble/words.hpp"

namespace bubble {

/// Default ceiling on the number of elements any family builder will accept.
inline constexpr std::uint64_t kDefaultCap = 50'000;

/// How an upper cover arises from u.
struct CoverKind {
  enum class Kind : std::uint8_t { kTransposition, kDeleteX, kInsertY };
  Kind kind = Kind::kDeleteX;
  int s = 0;  // X-index, 0 for kInsertY
  int t = 0;  // Y-index, 0 for kDeleteX

  static CoverKind transposition(int s, int t) { return {Kind::kTransposition, s, t}; }
  static CoverKind delete_x(int s) { return {Kind::kDeleteX, s, 0}; }
  static CoverKind insert_y(int t) { return {Kind::kInsertY, 0, t}; }

  friend bool operator==(const CoverKind&, const CoverKind&) = default;
};

std::string to_string(const CoverKind& k);

/// v_x ⊆ u_x, u_y ⊆ v_y, and u and v agree on their common letters.
bool leq_shuffle(const ShuffleWord& u, const ShuffleWord& v);

/// v_x ⊆ u_x, u_y ⊆ v_y, and Inv(u_v) ⊆ Inv(v_u).
bool leq_bubble(const ShuffleWord& u, const ShuffleWord& v);

struct Cover {
  ShuffleWord word;
  CoverKind kind;
};

/// All upper covers of u in Bub(m,n): one per X-letter of u (deleted if it is
/// last or followed by an X-letter, else swapped with the Y-letter after it)
/// and one per missing Y-letter (inserted right before the next larger
/// Y-letter, or appended).
std::vector<Cover> upper_covers(const ShuffleWord& u, int n);

/// How v covers u, or nothing if it does not.
std::optional<CoverKind> cover_kind(const ShuffleWord& u, const ShuffleWord& v, int n);

/// Least upper bound in Bub(m,n).
ShuffleWord join(const ShuffleWord& u, const ShuffleWord& v, int n);

/// Greatest lower bound in Bub(m,n), through the duality with Bub(n,m).
ShuffleWord meet(const ShuffleWord& u, const ShuffleWord& v, int m);

/// A set of shuffle words in canonical order together with its Hasse diagram.
struct WordFamily {
  int m = 0;
  int n = 0;
  std::vector<ShuffleWord> elements;
  FinitePoset hasse;

  /// Element id of w; throws Errc::kOutOfAlphabet if w is not in the family.
  Element id(const ShuffleWord& w) const;
  std::optional<Element> find(const ShuffleWord& w) const;
  const ShuffleWord& word(Element e) const { return elements[e]; }
  std::size_t size() const { return elements.size(); }

  void build_index();

 private:
  std::unordered_map<ShuffleWord, Element, ShuffleWordHash> index_;
};

/// Throws Errc::kCapExceeded when |Shuf(m,n)| > cap.
void check_cap(int m, int n, std::uint64_t cap);

/// Bub(m,n) with covers generated by upper_covers. `parallel` spreads the
/// cover generation over OpenMP threads; the result is identical.
WordFamily build_bubble_lattice(int m, int n, std::uint64_t cap = kDefaultCap, bool parallel = false);

/// Shuf(m,n) under the shuffle order, covers by transitive reduction.
WordFamily build_shuffle_poset(int m, int n, std::uint64_t cap = kDefaultCap);

/// Words with exactly the given supports, ordered by inversion-set inclusion.
WordFamily same_support_interval(Word64 xsupp, Word64 ysupp, int m, int n);

/// x → x·y_1 → … → x·y → (y_j moved left across x_m … x_1 for j = 1..n)
/// → delete x_m … x_1 → y. A maximal chain of length mn+m+n.
std::vector<ShuffleWord> extremal_chain(int m, int n);

}  // namespace bubble

#endif  // BUBBLE_BUBBLE_ORDER_HPP
