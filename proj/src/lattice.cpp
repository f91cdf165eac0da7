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

#include "bubble/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "bubble/error.hpp"

namespace bubble {

std::optional<Lattice> Lattice::from_poset(FinitePoset p) {
  const std::size_t n = p.size();
  if (n == 0) return std::nullopt;
  Lattice l;
  l.join_ = kernels::omp::join_table(p.up_matrix());
  if (std::find(l.join_.begin(), l.join_.end(), kernels::kNoElement) != l.join_.end()) return std::nullopt;
  l.meet_ = kernels::omp::join_table(p.down_matrix());
  if (std::find(l.meet_.begin(), l.meet_.end(), kernels::kNoElement) != l.meet_.end()) return std::nullopt;
  // With all pairwise joins and meets present, bottom and top exist.
  l.bottom_ = 0;
  l.top_ = 0;
  for (Element a = 1; a < n; ++a) {
    l.bottom_ = l.meet_[l.bottom_ * n + a];
    l.top_ = l.join_[l.top_ * n + a];
  }
  l.poset_ = std::move(p);
  return l;
}

Element Lattice::join_all(std::span<const Element> xs) const {
  Element acc = bottom_;
  for (Element x : xs) acc = join(acc, x);
  return acc;
}

Element Lattice::meet_all(std::span<const Element> xs) const {
  Element acc = top_;
  for (Element x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<Element> join_irreducibles(const Lattice& l) {
  std::vector<Element> out;
  for (Element a = 0; a < l.size(); ++a)
    if (l.poset().lower_covers(a).size() == 1) out.push_back(a);
  return out;
}

std::vector<Element> meet_irreducibles(const Lattice& l) {
  std::vector<Element> out;
  for (Element a = 0; a < l.size(); ++a)
    if (l.poset().upper_covers(a).size() == 1) out.push_back(a);
  return out;
}

std::vector<Element> atoms(const Lattice& l) {
  auto ups = l.poset().upper_covers(l.bottom());
  return {ups.begin(), ups.end()};
}

Semidistributivity check_semidistributive(const Lattice& l) {
  Semidistributivity sd;
  sd.join_witness = kernels::omp::join_sd_violation(l.join_table(), l.meet_table(), l.size());
  sd.meet_witness = kernels::omp::join_sd_violation(l.meet_table(), l.join_table(), l.size());
  sd.join_sd = !sd.join_witness;
  sd.meet_sd = !sd.meet_witness;
  return sd;
}

bool is_distributive(const Lattice& l) {
  return !kernels::omp::distributive_violation(l.join_table(), l.meet_table(), l.size());
}

Element lambda_jsd(const Lattice& l, EdgeRef e) {
  Element acc = l.top();
  for (Element r = 0; r < l.size(); ++r)
    if (l.join(e.lower, r) == e.upper) acc = l.meet(acc, r);
  if (l.poset().lower_covers(acc).size() != 1)
    throw Error(Errc::kNotJoinSemidistributive,
                "label of edge " + std::to_string(e.lower) + "->" + std::to_string(e.upper) +
                    " is not join-irreducible");
  return acc;
}

std::vector<Element> canonical_join_rep(const Lattice& l, Element p) {
  std::vector<Element> out;
  for (Element lower : l.poset().lower_covers(p)) out.push_back(lambda_jsd(l, {lower, p}));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_perspective(const Lattice& l, EdgeRef e1, EdgeRef e2) {
  const auto [p, q] = e1;
  const auto [p2, q2] = e2;
  return (l.join(q, p2) == q2 && l.meet(q, p2) == p) || (l.join(q2, p) == q && l.meet(q2, p) == p2);
}

Extremality check_extremality(const Lattice& l) {
  Extremality e;
  e.length = l.poset().height();
  e.join_irreducibles = join_irreducibles(l).size();
  e.meet_irreducibles = meet_irreducibles(l).size();
  if (e.length > std::min(e.join_irreducibles, e.meet_irreducibles))
    throw std::logic_error("lattice length exceeds its irreducible counts");
  return e;
}

std::vector<char> left_modular_elements(const Lattice& l) {
  return kernels::omp::left_modular_flags(l.join_table(), l.meet_table(), l.poset().up_matrix());
}

std::optional<std::vector<Element>> left_modular_chain(const Lattice& l, std::span<const Element> hint) {
  const FinitePoset& p = l.poset();
  const std::size_t k = p.height();
  const auto flags = left_modular_elements(l);

  if (hint.size() == k + 1 && hint.front() == l.bottom() && hint.back() == l.top()) {
    bool ok = true;
    for (std::size_t i = 0; i < hint.size() && ok; ++i) {
      if (!flags[hint[i]]) ok = false;
      if (i > 0 && !p.covers(hint[i - 1], hint[i])) ok = false;
    }
    if (ok) return std::vector<Element>(hint.begin(), hint.end());
  }

  // Longest cover path from bottom through left-modular elements only.
  constexpr std::size_t kUnreached = static_cast<std::size_t>(-1);
  std::vector<std::size_t> best(l.size(), kUnreached);
  std::vector<Element> prev(l.size(), kernels::kNoElement);
  best[l.bottom()] = 0;
  for (Element a : p.topological_order()) {
    if (best[a] == kUnreached || !flags[a]) continue;
    for (Element b : p.upper_covers(a))
      if (flags[b] && (best[b] == kUnreached || best[a] + 1 > best[b])) {
        best[b] = best[a] + 1;
        prev[b] = a;
      }
  }
  if (best[l.top()] != k) return std::nullopt;
  std::vector<Element> chain{l.top()};
  while (chain.back() != l.bottom()) chain.push_back(prev[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

bool is_trim(const Lattice& l, std::span<const Element> hint) {
  return is_extremal(l) && left_modular_chain(l, hint).has_value();
}

std::vector<Polygon> polygonal_intervals(const Lattice& l) {
  const FinitePoset& p = l.poset();
  std::vector<Polygon> out;
  for (Element bottom = 0; bottom < l.size(); ++bottom) {
    auto ups = p.upper_covers(bottom);
    for (std::size_t i = 0; i < ups.size(); ++i)
      for (std::size_t j = i + 1; j < ups.size(); ++j) {
        const Element top = l.join(ups[i], ups[j]);
        auto in_interval = [&](Element x) { return p.leq(bottom, x) && p.leq(x, top); };
        auto walk = [&](Element start) -> std::optional<std::vector<Element>> {
          std::vector<Element> chain{bottom, start};
          while (chain.back() != top) {
            Element next = kernels::kNoElement;
            for (Element c : p.upper_covers(chain.back()))
              if (in_interval(c)) {
                if (next != kernels::kNoElement) return std::nullopt;
                next = c;
              }
            chain.push_back(next);
          }
          return chain;
        };
        auto left = walk(ups[i]);
        auto right = walk(ups[j]);
        if (!left || !right) continue;
        std::size_t interval = 0;
        for (Element x = 0; x < l.size(); ++x) interval += in_interval(x) ? 1 : 0;
        if (interval != left->size() + right->size() - 2) continue;
        out.push_back({bottom, top, std::move(*left), std::move(*right)});
      }
  }
  return out;
}

Crown find_crown(const Lattice& l) {
  Crown c;
  c.atoms = atoms(l);
  const FinitePoset& p = l.poset();
  for (Element a : c.atoms) {
    // K(a) = {x : a ≰ x}; its greatest element g satisfies down(g) = K(a).
    std::size_t k_size = 0;
    Element g = kernels::kNoElement;
    std::size_t g_down = 0;
    for (Element x = 0; x < l.size(); ++x) {
      if (p.leq(a, x)) continue;
      ++k_size;
      const std::size_t d = bit_count(p.down_set(x));
      if (d > g_down) {
        g_down = d;
        g = x;
      }
    }
    if (g == kernels::kNoElement || g_down != k_size)
      throw Error(Errc::kKappaMissing, "K(" + std::to_string(a) + ") has no greatest element");
    c.kappas.push_back(g);
  }
  return c;
}

bool is_standard_crown(const Lattice& l, const Crown& c) {
  const std::size_t k = c.size();
  std::vector<Element> all = c.atoms;
  all.insert(all.end(), c.kappas.begin(), c.kappas.end());
  auto sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t u = 0; u < 2 * k; ++u)
    for (std::size_t v = 0; v < 2 * k; ++v) {
      if (u == v) continue;
      const bool expected = u < k && v >= k && (v - k) != u;
      if (l.leq(all[u], all[v]) != expected) return false;
    }
  return true;
}

}  // namespace bubble
