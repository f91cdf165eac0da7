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

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>

#include "bubble/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bubble::kernels::omp {

namespace {

using Index = std::int64_t;

// Reduces per-row "first violation" results to the one the serial scan finds.
template <typename RowScan>
std::optional<std::array<Element, 3>> first_violation(std::size_t n, RowScan scan) {
  std::vector<std::optional<std::array<Element, 3>>> found(n);
  std::atomic<Index> best{static_cast<Index>(n)};
#pragma omp parallel for schedule(dynamic, 4)
  for (Index p = 0; p < static_cast<Index>(n); ++p) {
    if (p > best.load(std::memory_order_relaxed)) continue;
    found[p] = scan(static_cast<std::size_t>(p));
    if (found[p]) {
      Index cur = best.load();
      while (p < cur && !best.compare_exchange_weak(cur, p)) {
      }
    }
  }
  const Index b = best.load();
  if (b == static_cast<Index>(n)) return std::nullopt;
  return found[b];
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<std::vector<Element>> transitive_reduction(const BitMatrix& up, const BitMatrix& down) {
  const std::size_t n = up.size();
  std::vector<std::vector<Element>> covers(n);
#pragma omp parallel
  {
    std::vector<Word64> strict(up.stride());
#pragma omp for schedule(dynamic, 8)
    for (Index ai = 0; ai < static_cast<Index>(n); ++ai) {
      const auto a = static_cast<std::size_t>(ai);
      auto row = up.row(a);
      std::copy(row.begin(), row.end(), strict.begin());
      strict[a >> 6] &= ~(Word64{1} << (a & 63));
      for_each_bit(strict, [&](std::size_t b) {
        auto d = down.row(b);
        std::size_t between = 0;
        for (std::size_t w = 0; w < strict.size(); ++w) between += std::popcount(strict[w] & d[w]);
        if (between == 1) covers[a].push_back(static_cast<Element>(b));
      });
    }
  }
  return covers;
}

Table join_table(const BitMatrix& up) {
  const std::size_t n = up.size();
  std::vector<std::size_t> count(n);
  for (std::size_t c = 0; c < n; ++c) count[c] = bit_count(up.row(c));
  Table table(n * n, kNoElement);
#pragma omp parallel
  {
    std::vector<Word64> ub(up.stride());
#pragma omp for schedule(dynamic, 8)
    for (Index ai = 0; ai < static_cast<Index>(n); ++ai) {
      const auto a = static_cast<std::size_t>(ai);
      auto ra = up.row(a);
      // Pair {a, b} with a <= b belongs to row a's thread alone.
      for (std::size_t b = a; b < n; ++b) {
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
        const Element j = (best != kNoElement && best_count == total) ? best : kNoElement;
        table[a * n + b] = j;
        table[b * n + a] = j;
      }
    }
  }
  return table;
}

std::optional<std::array<Element, 3>> join_sd_violation(std::span<const Element> join,
                                                         std::span<const Element> meet, std::size_t n) {
  return first_violation(n, [&](std::size_t p) -> std::optional<std::array<Element, 3>> {
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = q + 1; r < n; ++r) {
        const Element pq = join[p * n + q];
        if (pq != join[p * n + r]) continue;
        if (pq != join[p * n + meet[q * n + r]])
          return std::array<Element, 3>{Element(p), Element(q), Element(r)};
      }
    return std::nullopt;
  });
}

std::optional<std::array<Element, 3>> distributive_violation(std::span<const Element> join,
                                                             std::span<const Element> meet,
                                                             std::size_t n) {
  return first_violation(n, [&](std::size_t x) -> std::optional<std::array<Element, 3>> {
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const Element lhs = meet[x * n + join[y * n + z]];
        const Element rhs = join[meet[x * n + y] * n + meet[x * n + z]];
        if (lhs != rhs) return std::array<Element, 3>{Element(x), Element(y), Element(z)};
      }
    return std::nullopt;
  });
}

std::vector<char> left_modular_flags(std::span<const Element> join, std::span<const Element> meet,
                                     const BitMatrix& up) {
  const std::size_t n = up.size();
  std::vector<char> flags(n, 1);
#pragma omp parallel for schedule(dynamic, 4)
  for (Index pi = 0; pi < static_cast<Index>(n); ++pi) {
    const auto p = static_cast<std::size_t>(pi);
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

}  // namespace bubble::kernels::omp
