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

#include "bubble/kernels.hpp"

#include <algorithm>
#include <bit>

namespace bubble::kernels::serial {

std::vector<std::vector<Element>> transitive_reduction(const BitMatrix& up, const BitMatrix& down) {
  const std::size_t n = up.size();
  std::vector<std::vector<Element>> covers(n);
  std::vector<Word64> strict(up.stride());
  for (std::size_t a = 0; a < n; ++a) {
    auto row = up.row(a);
    std::copy(row.begin(), row.end(), strict.begin());
    strict[a >> 6] &= ~(Word64{1} << (a & 63));
    for_each_bit(strict, [&](std::size_t b) {
      // b covers a iff the only element of (a, b] is b itself.
      auto d = down.row(b);
      std::size_t between = 0;
      for (std::size_t w = 0; w < strict.size(); ++w) between += std::popcount(strict[w] & d[w]);
      if (between == 1) covers[a].push_back(static_cast<Element>(b));
    });
  }
  return covers;
}

Table join_table(const BitMatrix& up) {
  const std::size_t n = up.size();
  std::vector<std::size_t> count(n);
  for (std::size_t c = 0; c < n; ++c) count[c] = bit_count(up.row(c));
  Table table(n * n, kNoElement);
  std::vector<Word64> ub(up.stride());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto ra = up.row(a);
      auto rb = up.row(b);
      for (std::size_t w = 0; w < ub.size(); ++w) ub[w] = ra[w] & rb[w];
      const std::size_t total = bit_count(ub);
      Element best = kNoElement;
      std::size_t best_count = 0;
      for_each_bit(ub, [&](std::size_t c) {
        if (count[c] > best_count) {
          best_count = count[c];
          best = static_cast<Element>(c);
        }
      });
      // The least upper bound is the bound whose up-set is all of ub.
      const Element j = (best != kNoElement && best_count == total) ? best : kNoElement;
      table[a * n + b] = j;
      table[b * n + a] = j;
    }
  }
  return table;
}

std::optional<std::array<Element, 3>> join_sd_violation(std::span<const Element> join,
                                                         std::span<const Element> meet, std::size_t n) {
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = q + 1; r < n; ++r) {
        const Element pq = join[p * n + q];
        if (pq != join[p * n + r]) continue;
        if (pq != join[p * n + meet[q * n + r]])
          return std::array<Element, 3>{Element(p), Element(q), Element(r)};
      }
  return std::nullopt;
}

std::optional<std::array<Element, 3>> distributive_violation(std::span<const Element> join,
                                                             std::span<const Element> meet,
                                                             std::size_t n) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const Element lhs = meet[x * n + join[y * n + z]];
        const Element rhs = join[meet[x * n + y] * n + meet[x * n + z]];
        if (lhs != rhs) return std::array<Element, 3>{Element(x), Element(y), Element(z)};
      }
  return std::nullopt;
}

std::vector<char> left_modular_flags(std::span<const Element> join, std::span<const Element> meet,
                                     const BitMatrix& up) {
  const std::size_t n = up.size();
  std::vector<char> flags(n, 1);
  for (std::size_t p = 0; p < n; ++p) {
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r)
      for_each_bit(up.row(r), [&](std::size_t q) {
        if (!ok || q == r) return;
        if (meet[join[r * n + p] * n + q] != join[r * n + meet[p * n + q]]) ok = false;
      });
    flags[p] = ok ? 1 : 0;
  }
  return flags;
}

}  // namespace bubble::kernels::serial
