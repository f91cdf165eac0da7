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

#include "bubble/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "bubble/error.hpp"
#include "bubble/kernels.hpp"

namespace bubble {

namespace {

std::vector<std::size_t> chain_depths(const FinitePoset& p) {
  std::vector<std::size_t> depth(p.size(), 0);
  for (Element a : p.topological_order())
    for (Element l : p.lower_covers(a)) depth[a] = std::max(depth[a], depth[l] + 1);
  return depth;
}

}  // namespace

FinitePoset FinitePoset::from_covers(std::size_t n, std::span<const EdgeRef> covers) {
  FinitePoset p;
  p.upper_.assign(n, {});
  for (const EdgeRef& e : covers) {
    if (e.lower >= n || e.upper >= n || e.lower == e.upper)
      throw Error(Errc::kInvalidPoset, "edge endpoint out of range or a loop");
    p.upper_[e.lower].push_back(e.upper);
  }
  for (auto& ups : p.upper_) {
    std::sort(ups.begin(), ups.end());
    ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
  }

  // Kahn's algorithm; smallest ready id first for a deterministic order.
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& ups : p.upper_)
    for (Element b : ups) ++indeg[b];
  std::vector<Element> ready;
  for (Element a = 0; a < n; ++a)
    if (indeg[a] == 0) ready.push_back(a);
  std::vector<Element> topo;
  while (!ready.empty()) {
    std::pop_heap(ready.begin(), ready.end(), std::greater<>());
    const Element a = ready.back();
    ready.pop_back();
    topo.push_back(a);
    for (Element b : p.upper_[a])
      if (--indeg[b] == 0) {
        ready.push_back(b);
        std::push_heap(ready.begin(), ready.end(), std::greater<>());
      }
  }
  if (topo.size() != n) throw Error(Errc::kInvalidPoset, "cover relation has a cycle");

  p.up_ = BitMatrix(n);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    p.up_.set(*it, *it);
    for (Element b : p.upper_[*it]) p.up_.or_row(*it, b);
  }
  for (Element a = 0; a < n; ++a)
    for (Element b : p.upper_[a])
      for (Element c : p.upper_[a])
        if (c != b && p.up_.test(c, b))
          throw Error(Errc::kInvalidPoset, "edge " + std::to_string(a) + "->" + std::to_string(b) +
                                               " is implied by transitivity");
  p.down_ = p.up_.transposed();
  p.topo_ = std::move(topo);
  p.finish_from_covers();
  return p;
}

FinitePoset FinitePoset::from_relation(std::size_t n, const std::function<bool(Element, Element)>& leq) {
  BitMatrix m(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (a == b || leq(a, b)) m.set(a, b);
  // Warshall closure over bit rows.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (i != k && m.test(i, k)) m.or_row(i, k);
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (m.test(a, b) && m.test(b, a))
        throw Error(Errc::kInvalidPoset, "relation is not antisymmetric");
  return from_closed(std::move(m));
}

FinitePoset FinitePoset::from_closed(BitMatrix up) {
  FinitePoset p;
  const std::size_t n = up.size();
  p.down_ = up.transposed();
  p.upper_ = kernels::omp::transitive_reduction(up, p.down_);
  p.up_ = std::move(up);
  std::vector<std::size_t> below(n);
  for (Element a = 0; a < n; ++a) below[a] = bit_count(p.down_.row(a));
  p.topo_.resize(n);
  std::iota(p.topo_.begin(), p.topo_.end(), Element{0});
  std::stable_sort(p.topo_.begin(), p.topo_.end(),
                   [&](Element a, Element b) { return below[a] < below[b]; });
  p.finish_from_covers();
  return p;
}

void FinitePoset::finish_from_covers() {
  const std::size_t n = upper_.size();
  lower_.assign(n, {});
  edges_.clear();
  for (Element a = 0; a < n; ++a) {
    std::sort(upper_[a].begin(), upper_[a].end());
    for (Element b : upper_[a]) {
      lower_[b].push_back(a);
      edges_.push_back({a, b});
    }
  }
}

bool FinitePoset::covers(Element lower, Element upper) const {
  const auto& ups = upper_[lower];
  return std::binary_search(ups.begin(), ups.end(), upper);
}

std::vector<Element> FinitePoset::minimal_elements() const {
  std::vector<Element> out;
  for (Element a = 0; a < size(); ++a)
    if (lower_[a].empty()) out.push_back(a);
  return out;
}

std::vector<Element> FinitePoset::maximal_elements() const {
  std::vector<Element> out;
  for (Element a = 0; a < size(); ++a)
    if (upper_[a].empty()) out.push_back(a);
  return out;
}

std::size_t FinitePoset::height() const {
  const auto depth = chain_depths(*this);
  return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

std::vector<Element> FinitePoset::longest_chain() const {
  if (size() == 0) return {};
  const auto depth = chain_depths(*this);
  Element cur = static_cast<Element>(std::max_element(depth.begin(), depth.end()) - depth.begin());
  std::vector<Element> chain{cur};
  while (depth[cur] > 0) {
    for (Element l : lower_[cur])
      if (depth[l] + 1 == depth[cur]) {
        cur = l;
        break;
      }
    chain.push_back(cur);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

FinitePoset FinitePoset::dual() const {
  FinitePoset d;
  d.upper_ = lower_;
  d.up_ = down_;
  d.down_ = up_;
  d.topo_.assign(topo_.rbegin(), topo_.rend());
  d.finish_from_covers();
  return d;
}

FinitePoset FinitePoset::induced(std::span<const Element> subset) const {
  const std::size_t k = subset.size();
  BitMatrix m(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (leq(subset[i], subset[j])) m.set(i, j);
  return from_closed(std::move(m));
}

Doubling doubling(const FinitePoset& p, std::span<const Element> subset) {
  std::vector<Word64> down(words_for(p.size()), 0);
  std::vector<char> in_x(p.size(), 0);
  for (Element x : subset) {
    in_x[x] = 1;
    auto row = p.down_set(x);
    for (std::size_t w = 0; w < down.size(); ++w) down[w] |= row[w];
  }
  Doubling d;
  for (Element a = 0; a < p.size(); ++a)
    if (bit_test(down, a)) d.origin.emplace_back(a, 1);
  for (Element a = 0; a < p.size(); ++a)
    if (!bit_test(down, a) || in_x[a]) d.origin.emplace_back(a, 2);
  d.poset = FinitePoset::from_relation(d.origin.size(), [&](Element i, Element j) {
    return d.origin[i].second <= d.origin[j].second && p.leq(d.origin[i].first, d.origin[j].first);
  });
  return d;
}

FinitePoset chains_poset(std::span<const std::size_t> chain_sizes) {
  std::vector<EdgeRef> edges;
  Element next = 0;
  for (std::size_t len : chain_sizes) {
    for (std::size_t i = 0; i + 1 < len; ++i) edges.push_back({next + Element(i), next + Element(i + 1)});
    next += static_cast<Element>(len);
  }
  return FinitePoset::from_covers(next, edges);
}

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

using Signature = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Signature> signatures(const FinitePoset& p) {
  const auto depth = chain_depths(p);
  const auto rdepth = chain_depths(p.dual());
  std::vector<Signature> sig(p.size());
  for (Element a = 0; a < p.size(); ++a)
    sig[a] = {depth[a], rdepth[a], p.lower_covers(a).size(), p.upper_covers(a).size(),
              bit_count(p.down_set(a)), bit_count(p.up_set(a))};
  return sig;
}

class IsoSearch {
 public:
  IsoSearch(const FinitePoset& p, const FinitePoset& q)
      : p_(p), q_(q), sp_(signatures(p)), sq_(signatures(q)), map_(p.size(), kernels::kNoElement),
        used_(q.size(), 0) {
    for (Element b = 0; b < q.size(); ++b) by_sig_[sq_[b]].push_back(b);
  }

  std::optional<std::vector<Element>> run() {
    {
      auto a = sp_;
      auto b = sq_;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b || p_.edges().size() != q_.edges().size()) return std::nullopt;
    }
    order_ = p_.topological_order();
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t i) {
    if (i == order_.size()) return true;
    const Element a = order_[i];
    auto it = by_sig_.find(sp_[a]);
    if (it == by_sig_.end()) return false;
    for (Element b : it->second) {
      if (used_[b]) continue;
      bool ok = true;
      // Lower covers precede a in topological order, so they are mapped.
      for (Element l : p_.lower_covers(a))
        if (!q_.covers(map_[l], b)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      map_[a] = b;
      used_[b] = 1;
      if (extend(i + 1)) return true;
      used_[b] = 0;
      map_[a] = kernels::kNoElement;
    }
    return false;
  }

  const FinitePoset& p_;
  const FinitePoset& q_;
  std::vector<Signature> sp_;
  std::vector<Signature> sq_;
  std::map<Signature, std::vector<Element>> by_sig_;
  std::vector<Element> order_;
  std::vector<Element> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size())
    throw Error(Errc::kSizeMismatch,
                std::to_string(p.size()) + " vs " + std::to_string(q.size()) + " elements");
  return IsoSearch(p, q).run();
}

std::optional<std::vector<Element>> find_anti_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  return find_isomorphism(p, q.dual());
}

bool is_cover_bijection(const FinitePoset& p, const FinitePoset& q, std::span<const Element> map) {
  if (p.size() != q.size() || map.size() != p.size()) return false;
  std::vector<char> hit(q.size(), 0);
  for (Element b : map) {
    if (b >= q.size() || hit[b]) return false;
    hit[b] = 1;
  }
  if (p.edges().size() != q.edges().size()) return false;
  for (const EdgeRef& e : p.edges())
    if (!q.covers(map[e.lower], map[e.upper])) return false;
  return true;
}

}  // namespace bubble
