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

#ifndef BUBBLE_WORDS_HPP
#define BUBBLE_WORDS_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bubble/bitset.hpp"

namespace bubble {

/// Largest alphabet size supported by the bitmask layout.
inline constexpr int kMaxAlphabet = 64;

enum class Alphabet : std::uint8_t { kX = 0, kY = 1 };

/// One letter x_i or y_i; indices are 1-based.
struct Letter {
  Alphabet tag = Alphabet::kX;
  int index = 1;

  static constexpr Letter x(int i) { return {Alphabet::kX, i}; }
  static constexpr Letter y(int i) { return {Alphabet::kY, i}; }

  bool is_x() const { return tag == Alphabet::kX; }
  bool is_y() const { return tag == Alphabet::kY; }

  // X-letters sort before Y-letters, matching the integer encoding
  // x_i -> i, y_j -> m + j.
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

std::string to_string(Letter l);

inline constexpr Word64 index_bit(int i) { return Word64{1} << (i - 1); }

/// Set of pairs (x_s, y_t), stored as one X-index mask per Y-index.
/// Trailing empty columns are trimmed so equal sets compare equal.
class InversionSet {
 public:
  InversionSet() = default;

  bool contains(int s, int t) const {
    return t >= 1 && t <= static_cast<int>(cols_.size()) && (cols_[t - 1] & index_bit(s));
  }
  void insert(int s, int t);

  /// X-indices s with (x_s, y_t) in the set, as a mask (bit s-1).
  Word64 column(int t) const {
    return t >= 1 && t <= static_cast<int>(cols_.size()) ? cols_[t - 1] : 0;
  }

  std::size_t size() const;
  bool empty() const { return cols_.empty(); }

  /// Pairs sorted by (s, t).
  std::vector<std::pair<int, int>> pairs() const;

  InversionSet restricted(Word64 xmask, Word64 ymask) const;
  bool is_subset_of(const InversionSet& other) const;
  InversionSet operator|(const InversionSet& other) const;

  std::string str() const;

  friend bool operator==(const InversionSet&, const InversionSet&) = default;

 private:
  void trim();
  std::vector<Word64> cols_;
};

/// A simple word over X ⊎ Y whose X- and Y-subsequences are increasing.
/// Immutable once built.
class ShuffleWord {
 public:
  /// The empty word.
  ShuffleWord() = default;

  /// Validates against the alphabets of sizes m and n.
  static ShuffleWord make(std::span<const Letter> letters, int m, int n);
  static ShuffleWord make(std::span<const Letter> letters) {
    return make(letters, kMaxAlphabet, kMaxAlphabet);
  }
  static ShuffleWord make(std::initializer_list<Letter> letters, int m, int n) {
    return make(std::span<const Letter>(letters.begin(), letters.size()), m, n);
  }

  /// Parses the dotted text form (`x1.y1.x2`, `-` for the empty word).
  static ShuffleWord parse(std::string_view text, int m = kMaxAlphabet, int n = kMaxAlphabet);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word64 x_support() const { return xmask_; }
  Word64 y_support() const { return ymask_; }
  bool contains(Letter l) const {
    return (l.is_x() ? xmask_ : ymask_) & index_bit(l.index);
  }
  int x_count() const;
  int y_count() const;

  InversionSet inversions() const;

  /// Dotted text form; the empty word is `-`.
  std::string str() const;

  friend bool operator==(const ShuffleWord& a, const ShuffleWord& b) {
    return a.letters_ == b.letters_;
  }
  /// Canonical order: shorter words first, then lexicographic on letters.
  friend std::strong_ordering operator<=>(const ShuffleWord& a, const ShuffleWord& b);

 private:
  std::vector<Letter> letters_;
  Word64 xmask_ = 0;
  Word64 ymask_ = 0;
};

struct ShuffleWordHash {
  std::size_t operator()(const ShuffleWord& w) const noexcept;
};

/// Supports plus inversion set; determines a shuffle word uniquely.
struct SupportProfile {
  Word64 xsupp = 0;
  Word64 ysupp = 0;
  InversionSet inv;

  friend bool operator==(const SupportProfile&, const SupportProfile&) = default;
};

/// Number of shuffle words, sum over i, j of C(m,i) C(n,j) C(i+j,i).
std::uint64_t shuffle_count(int m, int n);

/// All of Shuf(m,n) in canonical order.
std::vector<ShuffleWord> enumerate_shuffle(int m, int n);

/// Subword of u formed by the letters u shares with v.
ShuffleWord restriction(const ShuffleWord& u, const ShuffleWord& v);

/// Subword of u formed by the letters in the given supports.
ShuffleWord restriction(const ShuffleWord& u, Word64 xmask, Word64 ymask);

/// Inserts the missing letters of y_1..y_n as far right as possible.
ShuffleWord y_fill(const ShuffleWord& u, int n);

/// Inserts the missing letters of x_1..x_m, dual to y_fill.
ShuffleWord x_fill(const ShuffleWord& u, int m);

/// Exchanges x_i and y_i; maps Shuf(m,n) onto Shuf(n,m).
ShuffleWord dualize(const ShuffleWord& u);

SupportProfile profile(const ShuffleWord& u);

/// True iff every Y-column of p.inv is a suffix of p.xsupp and the columns
/// shrink weakly as the Y-index grows.
bool is_realizable(const SupportProfile& p);

/// The unique word with the given supports and inversion set.
/// Throws Errc::kUnrealizable when no such word exists.
ShuffleWord word_from_profile(const SupportProfile& p);

/// x_1 x_2 ... x_m
ShuffleWord x_word(int m);
/// y_1 y_2 ... y_n
ShuffleWord y_word(int n);

}  // namespace bubble

#endif  // BUBBLE_WORDS_HPP
