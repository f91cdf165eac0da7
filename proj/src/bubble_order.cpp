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

#include "bubble/bubble_order.hpp"

#include <algorithm>
#include <bit>

#include "bubble/error.hpp"

namespace bubble {

std::string to_string(const CoverKind& k) {
  switch (k.kind) {
    case CoverKind::Kind::kTransposition:
      return "swap(x" + std::to_string(k.s) + ",y" + std::to_string(k.t) + ")";
    case CoverKind::Kind::kDeleteX:
      return "delete(x" + std::to_string(k.s) + ")";
    case CoverKind::Kind::kInsertY:
      return "insert(y" + std::to_string(k.t) + ")";
  }
  return "?";
}

namespace {

bool supports_ok(const ShuffleWord& u, const ShuffleWord& v) {
  return (v.x_support() & ~u.x_support()) == 0 && (u.y_support() & ~v.y_support()) == 0;
}

}  // namespace

bool leq_shuffle(const ShuffleWord& u, const ShuffleWord& v) {
  return supports_ok(u, v) && restriction(u, v) == restriction(v, u);
}

bool leq_bubble(const ShuffleWord& u, const ShuffleWord& v) {
  if (!supports_ok(u, v)) return false;
  // The common support is v_x × u_y.
  const Word64 xs = v.x_support();
  const Word64 ys = u.y_support();
  return u.inversions().restricted(xs, ys).is_subset_of(v.inversions().restricted(xs, ys));
}

std::vector<Cover> upper_covers(const ShuffleWord& u, int n) {
  std::vector<Cover> out;
  const auto& w = u.letters();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_x()) continue;
    std::vector<Letter> next = w;
    if (i + 1 == w.size() || w[i + 1].is_x()) {
      next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back({ShuffleWord::make(next), CoverKind::delete_x(w[i].index)});
    } else {
      std::swap(next[i], next[i + 1]);
      out.push_back({ShuffleWord::make(next), CoverKind::transposition(w[i].index, w[i + 1].index)});
    }
  }
  for (int t = 1; t <= n; ++t) {
    if (u.contains(Letter::y(t))) continue;
    std::vector<Letter> next = w;
    auto it = std::find_if(next.begin(), next.end(), [&](const Letter& l) { return l.is_y() && l.index > t; });
    next.insert(it, Letter::y(t));
    out.push_back({ShuffleWord::make(next), CoverKind::insert_y(t)});
  }
  return out;
}

std::optional<CoverKind> cover_kind(const ShuffleWord& u, const ShuffleWord& v, int n) {
  for (auto& c : upper_covers(u, n))
    if (c.word == v) return c.kind;
  return std::nullopt;
}

ShuffleWord join(const ShuffleWord& u, const ShuffleWord& v, int n) {
  SupportProfile p;
  p.xsupp = u.x_support() & v.x_support();
  p.ysupp = u.y_support() | v.y_support();
  p.inv = y_fill(u, n).inversions().restricted(p.xsupp, p.ysupp) |
          y_fill(v, n).inversions().restricted(p.xsupp, p.ysupp);
  return word_from_profile(p);
}

ShuffleWord meet(const ShuffleWord& u, const ShuffleWord& v, int m) {
  return dualize(join(dualize(u), dualize(v), m));
}

// ---------------------------------------------------------------------------
// Families

void WordFamily::build_index() {
  index_.clear();
  index_.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) index_.emplace(elements[i], static_cast<Element>(i));
}

std::optional<Element> WordFamily::find(const ShuffleWord& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element WordFamily::id(const ShuffleWord& w) const {
  if (auto e = find(w)) return *e;
  throw Error(Errc::kOutOfAlphabet, w.str() + " is not in the family");
}

void check_cap(int m, int n, std::uint64_t cap) {
  if (m < 0 || n < 0 || m > kMaxAlphabet || n > kMaxAlphabet)
    throw Error(Errc::kOutOfAlphabet, "alphabet sizes must lie in [0, 64]");
  // Past m+n = 40 the count overflows long before it matters.
  if (m + n > 40 || shuffle_count(m, n) > cap)
    throw Error(Errc::kCapExceeded, "Shuf(" + std::to_string(m) + "," + std::to_string(n) + ") has more than " +
                                        std::to_string(cap) + " elements");
}

WordFamily build_bubble_lattice(int m, int n, std::uint64_t cap, bool parallel) {
  check_cap(m, n, cap);
  WordFamily f;
  f.m = m;
  f.n = n;
  f.elements = enumerate_shuffle(m, n);
  f.build_index();
  const auto size = static_cast<std::ptrdiff_t>(f.elements.size());
  std::vector<std::vector<EdgeRef>> per(f.elements.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
  for (std::ptrdiff_t i = 0; i < size; ++i)
    for (auto& c : upper_covers(f.elements[i], n))
      per[i].push_back({static_cast<Element>(i), f.id(c.word)});
  std::vector<EdgeRef> edges;
  for (auto& p : per) edges.insert(edges.end(), p.begin(), p.end());
  f.hasse = FinitePoset::from_covers(f.elements.size(), edges);
  return f;
}

WordFamily build_shuffle_poset(int m, int n, std::uint64_t cap) {
  check_cap(m, n, cap);
  WordFamily f;
  f.m = m;
  f.n = n;
  f.elements = enumerate_shuffle(m, n);
  f.build_index();
  f.hasse = FinitePoset::from_relation(
      f.elements.size(), [&](Element a, Element b) { return leq_shuffle(f.elements[a], f.elements[b]); });
  return f;
}

WordFamily same_support_interval(Word64 xsupp, Word64 ysupp, int m, int n) {
  WordFamily f;
  f.m = m;
  f.n = n;
  std::vector<Letter> xs, ys;
  for_each_bit(std::span<const Word64>(&xsupp, 1), [&](std::size_t b) { xs.push_back(Letter::x(static_cast<int>(b) + 1)); });
  for_each_bit(std::span<const Word64>(&ysupp, 1), [&](std::size_t b) { ys.push_back(Letter::y(static_cast<int>(b) + 1)); });
  // Each interleaving is a choice of which positions hold Y-letters.
  const std::size_t len = xs.size() + ys.size();
  std::vector<char> is_y(len, 0);
  std::fill(is_y.end() - static_cast<std::ptrdiff_t>(ys.size()), is_y.end(), 1);
  do {
    std::vector<Letter> w;
    std::size_t i = 0, j = 0;
    for (char c : is_y) w.push_back(c ? ys[j++] : xs[i++]);
    f.elements.push_back(ShuffleWord::make(w, m, n));
  } while (std::next_permutation(is_y.begin(), is_y.end()));
  std::sort(f.elements.begin(), f.elements.end());
  f.build_index();
  f.hasse = FinitePoset::from_relation(f.elements.size(), [&](Element a, Element b) {
    return f.elements[a].inversions().is_subset_of(f.elements[b].inversions());
  });
  return f;
}

std::vector<ShuffleWord> extremal_chain(int m, int n) {
  std::vector<ShuffleWord> chain;
  std::vector<Letter> w;
  for (int s = 1; s <= m; ++s) w.push_back(Letter::x(s));
  chain.push_back(ShuffleWord::make(w));
  for (int t = 1; t <= n; ++t) {
    w.push_back(Letter::y(t));
    chain.push_back(ShuffleWord::make(w));
  }
  // Move y_t leftward past x_m, ..., x_1; it starts right after x_m.
  for (int t = 1; t <= n; ++t) {
    std::size_t pos = static_cast<std::size_t>(t - 1 + m);
    for (int s = m; s >= 1; --s, --pos) {
      std::swap(w[pos - 1], w[pos]);
      chain.push_back(ShuffleWord::make(w));
    }
  }
  for (int s = m; s >= 1; --s) {
    w.pop_back();
    chain.push_back(ShuffleWord::make(w));
  }
  return chain;
}

}  // namespace bubble
