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

// Brute-force reference implementations used only by the tests. Nothing here
// calls the library's order, cover, or join code; words are handled as plain
// letter vectors and the orders are rebuilt from their move definitions.

#ifndef BUBBLE_TESTS_ORACLES_HPP
#define BUBBLE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "bubble/words.hpp"

namespace oracle {

using bubble::Letter;
using Raw = std::vector<Letter>;

inline bool is_shuffle(const Raw& w) {
  int lx = 0, ly = 0;
  for (const Letter& l : w) {
    int& last = l.is_x() ? lx : ly;
    if (l.index <= last) return false;
    last = l.index;
  }
  return true;
}

/// Every shuffle word, by filtering all arrangements of every letter subset.
inline std::vector<Raw> all_words(int m, int n) {
  std::vector<Letter> alphabet;
  for (int i = 1; i <= m; ++i) alphabet.push_back(Letter::x(i));
  for (int j = 1; j <= n; ++j) alphabet.push_back(Letter::y(j));
  std::set<Raw> out;
  const std::size_t k = alphabet.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    Raw w;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) w.push_back(alphabet[i]);
    std::sort(w.begin(), w.end());
    do {
      if (is_shuffle(w)) out.insert(w);
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return {out.begin(), out.end()};
}

/// Σ C(m,i) C(n,j) C(i+j,i) by Pascal's rule, no closed formulas.
inline std::uint64_t interleaving_count(int m, int n) {
  std::vector<std::vector<std::uint64_t>> c(m + n + 1, std::vector<std::uint64_t>(m + n + 1, 0));
  for (int a = 0; a <= m + n; ++a) {
    c[a][0] = 1;
    for (int b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + (b <= a - 1 ? c[a - 1][b] : 0);
  }
  std::uint64_t total = 0;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j) total += c[m][i] * c[n][j] * c[i + j][i];
  return total;
}

/// Single upward moves: insert any missing y anywhere it fits, delete any x,
/// and (when `swaps`) turn an adjacent x_i y_j into y_j x_i.
inline std::vector<Raw> moves(const Raw& w, int n, bool swaps) {
  std::vector<Raw> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].is_x()) continue;
    Raw d = w;
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(i));
    out.push_back(d);
    if (swaps && i + 1 < w.size() && w[i + 1].is_y()) {
      Raw t = w;
      std::swap(t[i], t[i + 1]);
      out.push_back(t);
    }
  }
  for (int j = 1; j <= n; ++j) {
    if (std::find(w.begin(), w.end(), Letter::y(j)) != w.end()) continue;
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      Raw ins = w;
      ins.insert(ins.begin() + static_cast<std::ptrdiff_t>(pos), Letter::y(j));
      if (is_shuffle(ins)) out.push_back(ins);
    }
  }
  return out;
}

/// Reflexive-transitive closure of the move relation over Shuf(m,n).
struct MoveOrder {
  std::vector<Raw> words;
  std::map<Raw, std::size_t> id;
  std::vector<std::vector<char>> leq;

  MoveOrder(int m, int n, bool swaps) : words(all_words(m, n)) {
    for (std::size_t i = 0; i < words.size(); ++i) id[words[i]] = i;
    const std::size_t k = words.size();
    leq.assign(k, std::vector<char>(k, 0));
    for (std::size_t a = 0; a < k; ++a) {
      std::queue<std::size_t> q;
      q.push(a);
      leq[a][a] = 1;
      while (!q.empty()) {
        const std::size_t u = q.front();
        q.pop();
        for (const Raw& v : moves(words[u], n, swaps)) {
          const std::size_t b = id.at(v);
          if (!leq[a][b]) {
            leq[a][b] = 1;
            q.push(b);
          }
        }
      }
    }
  }

  std::size_t size() const { return words.size(); }

  bool covers(std::size_t a, std::size_t b) const {
    if (a == b || !leq[a][b]) return false;
    for (std::size_t c = 0; c < size(); ++c)
      if (c != a && c != b && leq[a][c] && leq[c][b]) return false;
    return true;
  }

  /// The unique minimal common upper bound, or nothing if there are several.
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> ub;
    for (std::size_t c = 0; c < size(); ++c)
      if (leq[a][c] && leq[b][c]) ub.push_back(c);
    std::vector<std::size_t> minimal;
    for (std::size_t c : ub) {
      bool is_min = true;
      for (std::size_t d : ub)
        if (d != c && leq[d][c]) is_min = false;
      if (is_min) minimal.push_back(c);
    }
    if (minimal.size() != 1) return std::nullopt;
    return minimal[0];
  }

  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> lb;
    for (std::size_t c = 0; c < size(); ++c)
      if (leq[c][a] && leq[c][b]) lb.push_back(c);
    std::vector<std::size_t> maximal;
    for (std::size_t c : lb) {
      bool is_max = true;
      for (std::size_t d : lb)
        if (d != c && leq[c][d]) is_max = false;
      if (is_max) maximal.push_back(c);
    }
    if (maximal.size() != 1) return std::nullopt;
    return maximal[0];
  }
};

/// Inversion pairs by scanning every position pair.
inline std::set<std::pair<int, int>> inversion_pairs(const Raw& w) {
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i].is_y() && w[j].is_x()) out.emplace(w[j].index, w[i].index);
  return out;
}

}  // namespace oracle

#endif  // BUBBLE_TESTS_ORACLES_HPP
