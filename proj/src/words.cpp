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

#include "bubble/words.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <functional>

#include "bubble/error.hpp"

namespace bubble {

std::string to_string(Letter l) {
  return (l.is_x() ? "x" : "y") + std::to_string(l.index);
}

// ---------------------------------------------------------------------------
// InversionSet

void InversionSet::insert(int s, int t) {
  if (static_cast<int>(cols_.size()) < t) cols_.resize(t, 0);
  cols_[t - 1] |= index_bit(s);
}

void InversionSet::trim() {
  while (!cols_.empty() && cols_.back() == 0) cols_.pop_back();
}

std::size_t InversionSet::size() const {
  std::size_t c = 0;
  for (Word64 col : cols_) c += static_cast<std::size_t>(std::popcount(col));
  return c;
}

std::vector<std::pair<int, int>> InversionSet::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t t = 0; t < cols_.size(); ++t)
    for_each_bit(std::span<const Word64>(&cols_[t], 1),
                 [&](std::size_t s) { out.emplace_back(static_cast<int>(s) + 1, static_cast<int>(t) + 1); });
  std::sort(out.begin(), out.end());
  return out;
}

InversionSet InversionSet::restricted(Word64 xmask, Word64 ymask) const {
  InversionSet r;
  r.cols_ = cols_;
  for (std::size_t t = 0; t < r.cols_.size(); ++t)
    r.cols_[t] = (ymask & index_bit(static_cast<int>(t) + 1)) ? (r.cols_[t] & xmask) : 0;
  r.trim();
  return r;
}

bool InversionSet::is_subset_of(const InversionSet& other) const {
  for (std::size_t t = 0; t < cols_.size(); ++t) {
    const Word64 o = t < other.cols_.size() ? other.cols_[t] : 0;
    if (cols_[t] & ~o) return false;
  }
  return true;
}

InversionSet InversionSet::operator|(const InversionSet& other) const {
  InversionSet r;
  r.cols_.resize(std::max(cols_.size(), other.cols_.size()), 0);
  for (std::size_t t = 0; t < cols_.size(); ++t) r.cols_[t] |= cols_[t];
  for (std::size_t t = 0; t < other.cols_.size(); ++t) r.cols_[t] |= other.cols_[t];
  return r;
}

std::string InversionSet::str() const {
  std::string out = "{";
  bool first = true;
  for (auto [s, t] : pairs()) {
    if (!first) out += ",";
    first = false;
    out += "(x" + std::to_string(s) + ",y" + std::to_string(t) + ")";
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// ShuffleWord

ShuffleWord ShuffleWord::make(std::span<const Letter> letters, int m, int n) {
  ShuffleWord w;
  w.letters_.assign(letters.begin(), letters.end());
  int last_x = 0;
  int last_y = 0;
  for (const Letter& l : letters) {
    const int bound = l.is_x() ? m : n;
    if (l.index < 1 || l.index > bound || l.index > kMaxAlphabet)
      throw Error(Errc::kOutOfAlphabet, to_string(l) + " outside alphabet");
    Word64& mask = l.is_x() ? w.xmask_ : w.ymask_;
    if (mask & index_bit(l.index)) throw Error(Errc::kDuplicateLetter, to_string(l) + " repeated");
    mask |= index_bit(l.index);
    int& last = l.is_x() ? last_x : last_y;
    if (l.index < last) throw Error(Errc::kNotIncreasing, to_string(l) + " out of order");
    last = l.index;
  }
  return w;
}

ShuffleWord ShuffleWord::parse(std::string_view text, int m, int n) {
  std::vector<Letter> letters;
  if (text == "-" || text.empty()) return ShuffleWord();
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    if (dot == std::string_view::npos) dot = text.size();
    std::string_view tok = text.substr(pos, dot - pos);
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'y'))
      throw Error(Errc::kParse, "bad letter token '" + std::string(tok) + "'");
    int idx = 0;
    auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), idx);
    if (ec != std::errc() || p != tok.data() + tok.size())
      throw Error(Errc::kParse, "bad letter index in '" + std::string(tok) + "'");
    letters.push_back(tok[0] == 'x' ? Letter::x(idx) : Letter::y(idx));
    pos = dot + 1;
  }
  return make(letters, m, n);
}

int ShuffleWord::x_count() const { return std::popcount(xmask_); }
int ShuffleWord::y_count() const { return std::popcount(ymask_); }

InversionSet ShuffleWord::inversions() const {
  InversionSet inv;
  Word64 seen_y = 0;
  for (const Letter& l : letters_) {
    if (l.is_y()) {
      seen_y |= index_bit(l.index);
    } else {
      for_each_bit(std::span<const Word64>(&seen_y, 1),
                   [&](std::size_t t) { inv.insert(l.index, static_cast<int>(t) + 1); });
    }
  }
  return inv;
}

std::string ShuffleWord::str() const {
  if (letters_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += '.';
    out += to_string(letters_[i]);
  }
  return out;
}

std::strong_ordering operator<=>(const ShuffleWord& a, const ShuffleWord& b) {
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

std::size_t ShuffleWordHash::operator()(const ShuffleWord& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const Letter& l : w.letters()) {
    h ^= static_cast<std::size_t>(l.index * 2 + static_cast<int>(l.tag));
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Free operations

std::uint64_t shuffle_count(int m, int n) {
  auto binom = [](int a, int b) {
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / static_cast<std::uint64_t>(i);
    return r;
  };
  std::uint64_t total = 0;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) total += binom(m, i) * binom(n, j) * binom(i + j, i);
  return total;
}

namespace {

std::vector<int> mask_indices(Word64 mask) {
  std::vector<int> out;
  for_each_bit(std::span<const Word64>(&mask, 1),
               [&](std::size_t b) { out.push_back(static_cast<int>(b) + 1); });
  return out;
}

// All interleavings of two increasing index sequences.
void interleave(const std::vector<int>& xs, const std::vector<int>& ys, std::size_t i,
                std::size_t j, std::vector<Letter>& cur, std::vector<ShuffleWord>& out) {
  if (i == xs.size() && j == ys.size()) {
    out.push_back(ShuffleWord::make(cur));
    return;
  }
  if (i < xs.size()) {
    cur.push_back(Letter::x(xs[i]));
    interleave(xs, ys, i + 1, j, cur, out);
    cur.pop_back();
  }
  if (j < ys.size()) {
    cur.push_back(Letter::y(ys[j]));
    interleave(xs, ys, i, j + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<ShuffleWord> enumerate_shuffle(int m, int n) {
  if (m < 0 || n < 0 || m > kMaxAlphabet || n > kMaxAlphabet)
    throw Error(Errc::kOutOfAlphabet, "alphabet sizes must lie in [0, 64]");
  std::vector<ShuffleWord> out;
  out.reserve(shuffle_count(m, n));
  const Word64 xfull = m == 64 ? ~Word64{0} : (Word64{1} << m) - 1;
  const Word64 yfull = n == 64 ? ~Word64{0} : (Word64{1} << n) - 1;
  std::vector<Letter> cur;
  // Submask walk; sizes are bounded in practice by the family cap.
  for (Word64 xs = xfull;; xs = (xs - 1) & xfull) {
    for (Word64 ys = yfull;; ys = (ys - 1) & yfull) {
      interleave(mask_indices(xs), mask_indices(ys), 0, 0, cur, out);
      if (ys == 0) break;
    }
    if (xs == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ShuffleWord restriction(const ShuffleWord& u, Word64 xmask, Word64 ymask) {
  std::vector<Letter> kept;
  for (const Letter& l : u.letters())
    if ((l.is_x() ? xmask : ymask) & index_bit(l.index)) kept.push_back(l);
  return ShuffleWord::make(kept);
}

ShuffleWord restriction(const ShuffleWord& u, const ShuffleWord& v) {
  return restriction(u, v.x_support(), v.y_support());
}

ShuffleWord y_fill(const ShuffleWord& u, int n) {
  std::vector<Letter> w = u.letters();
  for (int j = n; j >= 1; --j) {
    if (u.contains(Letter::y(j))) continue;
    // Y-letters are increasing, so the first larger y is the smallest one.
    auto it = std::find_if(w.begin(), w.end(),
                           [&](const Letter& l) { return l.is_y() && l.index > j; });
    w.insert(it, Letter::y(j));
  }
  return ShuffleWord::make(w);
}

ShuffleWord x_fill(const ShuffleWord& u, int m) { return dualize(y_fill(dualize(u), m)); }

ShuffleWord dualize(const ShuffleWord& u) {
  std::vector<Letter> w;
  w.reserve(u.size());
  for (const Letter& l : u.letters())
    w.push_back(l.is_x() ? Letter::y(l.index) : Letter::x(l.index));
  return ShuffleWord::make(w);
}

SupportProfile profile(const ShuffleWord& u) {
  return {u.x_support(), u.y_support(), u.inversions()};
}

bool is_realizable(const SupportProfile& p) {
  if (!(p.inv == p.inv.restricted(p.xsupp, p.ysupp))) return false;
  Word64 previous = p.xsupp;
  for (int t : mask_indices(p.ysupp)) {
    const Word64 col = p.inv.column(t);
    if (col & ~previous) return false;
    // A suffix of xsupp: every support element above min(col) is in col.
    if (col) {
      const int lo = std::countr_zero(col);
      const Word64 above = p.xsupp & ~((Word64{1} << lo) - 1);
      if (above != col) return false;
    }
    previous = col;
  }
  return true;
}

ShuffleWord word_from_profile(const SupportProfile& p) {
  if (!is_realizable(p)) throw Error(Errc::kUnrealizable, "inversions " + p.inv.str() + " not realizable");
  std::vector<Letter> w;
  const std::vector<int> ys = mask_indices(p.ysupp);
  std::size_t next_y = 0;
  for (int s : mask_indices(p.xsupp)) {
    while (next_y < ys.size() && (p.inv.column(ys[next_y]) & index_bit(s))) {
      w.push_back(Letter::y(ys[next_y]));
      ++next_y;
    }
    w.push_back(Letter::x(s));
  }
  for (; next_y < ys.size(); ++next_y) w.push_back(Letter::y(ys[next_y]));
  return ShuffleWord::make(w);
}

ShuffleWord x_word(int m) {
  std::vector<Letter> w;
  for (int i = 1; i <= m; ++i) w.push_back(Letter::x(i));
  return ShuffleWord::make(w);
}

ShuffleWord y_word(int n) {
  std::vector<Letter> w;
  for (int i = 1; i <= n; ++i) w.push_back(Letter::y(i));
  return ShuffleWord::make(w);
}

}  // namespace bubble
