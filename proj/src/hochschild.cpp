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

#include "bubble/hochschild.hpp"

#include <algorithm>

#include "bubble/error.hpp"

namespace bubble {

bool Triword::valid(std::span<const int> e) {
  if (!e.empty() && e[0] == 2) return false;
  bool zero = false;
  for (int v : e) {
    if (v < 0 || v > 2) return false;
    if (v == 1 && zero) return false;
    zero |= v == 0;
  }
  return true;
}

Triword Triword::make(std::span<const int> entries) {
  if (!valid(entries)) {
    std::string s;
    for (int v : entries) s += std::to_string(v) + " ";
    throw Error(Errc::kNotATriword, s);
  }
  Triword t;
  t.entries_.assign(entries.begin(), entries.end());
  return t;
}

std::string Triword::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(entries_[i]);
  }
  return s + ")";
}

bool Triword::leq(const Triword& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

std::vector<Triword> enumerate_triwords(int n) {
  std::vector<Triword> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i, bool zero) -> void {
    if (i == n) {
      out.push_back(Triword::make(cur));
      return;
    }
    for (int v = 0; v <= 2; ++v) {
      if ((v == 2 && i == 0) || (v == 1 && zero)) continue;
      cur[i] = v;
      self(self, i + 1, zero || v == 0);
    }
  };
  rec(rec, 0, false);
  return out;
}

std::uint64_t triword_count(int n) {
  if (n <= 0) return 1;
  if (n == 1) return 2;
  return (std::uint64_t{1} << (n - 2)) * static_cast<std::uint64_t>(n + 3);
}

std::optional<Element> TriwordFamily::find(const Triword& t) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), t);
  if (it == elements.end() || !(*it == t)) return std::nullopt;
  return static_cast<Element>(it - elements.begin());
}

TriwordFamily hochschild_lattice(int n) {
  TriwordFamily f;
  f.n = n;
  f.elements = enumerate_triwords(n);
  f.hasse = FinitePoset::from_relation(f.elements.size(),
                                       [&](Element a, Element b) { return f.elements[a].leq(f.elements[b]); });
  return f;
}

Triword sigma_tilde(const ShuffleWord& u, int n) {
  if (n < 1 || n - 1 >= kMaxAlphabet || (u.x_support() >> (n - 1)) != 0 || (u.y_support() & ~Word64{1}) != 0)
    throw Error(Errc::kWrongFamily, u.str() + " is not in Shuf(" + std::to_string(n - 1) + ",1)");
  std::vector<int> e(n, 0);
  for (int s = 1; s < n; ++s)
    if (!u.contains(Letter::x(s))) e[n - s] = 2;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_y()) continue;
    int s = i == 0 ? 0 : u[i - 1].index;
    for (int p = 0; p < n - s; ++p)
      if (e[p] != 2) e[p] = 1;
  }
  return Triword::make(e);
}

std::vector<int> sigma_reversed(const ShuffleWord& u, int n) {
  std::vector<Letter> relabeled;
  for (const Letter& l : u.letters())
    relabeled.push_back(l.is_x() ? Letter::x(n - l.index) : l);
  // Relabeling reverses the X-order, so rebuild without the increasing check.
  std::vector<int> e(n, 0);
  Word64 present = 0;
  for (const Letter& l : relabeled)
    if (l.is_x()) present |= index_bit(l.index);
  if (n < 1 || (present >> (n - 1)) != 0 || (u.y_support() & ~Word64{1}) != 0)
    throw Error(Errc::kWrongFamily, u.str());
  for (int s = 1; s < n; ++s)
    if (!(present & index_bit(s))) e[n - s] = 2;
  for (std::size_t i = 0; i < relabeled.size(); ++i) {
    if (!relabeled[i].is_y()) continue;
    int s = i == 0 ? 0 : relabeled[i - 1].index;
    for (int p = 0; p < n - s; ++p)
      if (e[p] != 2) e[p] = 1;
  }
  std::reverse(e.begin(), e.end());
  return e;
}

HochschildReport verify_hochschild_iso(int n, std::uint64_t cap) {
  HochschildReport r;
  r.n = n;
  auto bub = build_bubble_lattice(n - 1, 1, cap);
  auto hoch = hochschild_lattice(n);
  r.words = bub.size();
  r.triwords = hoch.size();
  if (hoch.size() != triword_count(n))
    r.violations.push_back("|Tri(" + std::to_string(n) + ")| = " + std::to_string(hoch.size()));

  std::vector<Element> map(bub.size());
  std::vector<bool> hit(hoch.size(), false);
  bool injective = true;
  for (Element e = 0; e < bub.size(); ++e) {
    auto t = sigma_tilde(bub.word(e), n);
    auto id = hoch.find(t);
    if (!id) {
      r.violations.push_back(bub.word(e).str() + " -> " + t.str() + " is not a triword");
      injective = false;
      continue;
    }
    if (hit[*id]) {
      r.violations.push_back(bub.word(e).str() + " -> " + t.str() + " collides");
      injective = false;
    }
    hit[*id] = true;
    map[e] = *id;
  }
  r.bijective = injective && bub.size() == hoch.size();
  if (injective && !r.bijective) r.violations.push_back("sigma is not surjective");
  if (!r.bijective) return r;

  for (Element a = 0; a < bub.size(); ++a) {
    auto up = bub.hasse.upper_covers(a);
    std::vector<Element> img;
    for (Element b : up) img.push_back(map[b]);
    std::sort(img.begin(), img.end());
    auto target = hoch.hasse.upper_covers(map[a]);
    std::vector<Element> want(target.begin(), target.end());
    std::sort(want.begin(), want.end());
    if (img != want) r.violations.push_back("covers above " + bub.word(a).str() + " differ");
  }
  r.covers_match = r.ok();
  return r;
}

}  // namespace bubble
