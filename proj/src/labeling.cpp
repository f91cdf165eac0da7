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

#include "bubble/labeling.hpp"

#include <algorithm>
#include <map>

#include "bubble/error.hpp"

namespace bubble {

std::string to_string(const BubbleLabel& l) {
  switch (l.kind) {
    case BubbleLabel::Kind::kX:
      return "x" + std::to_string(l.s);
    case BubbleLabel::Kind::kY:
      return "y" + std::to_string(l.t);
    case BubbleLabel::Kind::kPair:
      return "(x" + std::to_string(l.s) + ",y" + std::to_string(l.t) + ")";
  }
  return "?";
}

BubbleLabel lambda_bubble(const ShuffleWord& u, const ShuffleWord& v, int n) {
  auto k = cover_kind(u, v, n);
  if (!k) throw Error(Errc::kNotACover, u.str() + " is not covered by " + v.str());
  switch (k->kind) {
    case CoverKind::Kind::kDeleteX:
      return BubbleLabel::x(k->s);
    case CoverKind::Kind::kInsertY:
      return BubbleLabel::y(k->t);
    case CoverKind::Kind::kTransposition:
      break;
  }
  return BubbleLabel::pair(k->s, k->t);
}

LabelPoset LabelPoset::build(int m, int n) {
  LabelPoset p;
  p.m_ = m;
  p.n_ = n;
  for (int s = 1; s <= m; ++s) p.labels_.push_back(BubbleLabel::x(s));
  for (int t = 1; t <= n; ++t) p.labels_.push_back(BubbleLabel::y(t));
  for (int s = 1; s <= m; ++s)
    for (int t = 1; t <= n; ++t) p.labels_.push_back(BubbleLabel::pair(s, t));
  const auto& ls = p.labels_;
  p.order_ = FinitePoset::from_relation(ls.size(), [&](Element i, Element j) {
    const BubbleLabel& a = ls[i];
    const BubbleLabel& b = ls[j];
    if (i == j) return true;
    if (b.kind != BubbleLabel::Kind::kPair) return false;
    switch (a.kind) {
      case BubbleLabel::Kind::kX:
        return a.s == b.s;
      case BubbleLabel::Kind::kY:
        return a.t == b.t;
      case BubbleLabel::Kind::kPair:
        return (a.t == b.t && a.s > b.s) || (a.s == b.s && a.t > b.t);
    }
    return false;
  });
  return p;
}

Element LabelPoset::id(const BubbleLabel& l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) throw Error(Errc::kOutOfAlphabet, to_string(l) + " is not a label");
  return static_cast<Element>(it - labels_.begin());
}

std::size_t edge_index(const FinitePoset& p, EdgeRef e) {
  const auto& es = p.edges();
  auto it = std::lower_bound(es.begin(), es.end(), e);
  if (it == es.end() || *it != e)
    throw Error(Errc::kNotACover, std::to_string(e.lower) + "->" + std::to_string(e.upper) + " is not an edge");
  return static_cast<std::size_t>(it - es.begin());
}

std::vector<Element> bubble_edge_labels(const WordFamily& f, const LabelPoset& s) {
  std::vector<Element> out;
  out.reserve(f.hasse.edges().size());
  for (auto [a, b] : f.hasse.edges()) out.push_back(s.id(lambda_bubble(f.word(a), f.word(b), f.n)));
  return out;
}

std::vector<Element> jsd_edge_labels(const Lattice& l) {
  std::vector<Element> out;
  out.reserve(l.poset().edges().size());
  for (auto e : l.poset().edges()) out.push_back(lambda_jsd(l, e));
  return out;
}

std::array<std::size_t, 5> CuReport::counts() const {
  std::array<std::size_t, 5> c{};
  for (auto& v : violations) ++c[static_cast<std::size_t>(v.condition - 1)];
  return c;
}

namespace {

std::vector<Element> polygon_witness(const Polygon& p) {
  std::vector<Element> w = p.left;
  w.insert(w.end(), p.right.begin() + 1, p.right.end() - 1);
  return w;
}

}  // namespace

CuReport verify_cu_labeling(const Lattice& l, std::span<const Element> edge_labels, const FinitePoset& labels) {
  const FinitePoset& p = l.poset();
  auto lab = [&](Element a, Element b) { return edge_labels[edge_index(p, {a, b})]; };
  CuReport r;
  const auto polys = polygonal_intervals(l);
  r.polygons = polys.size();
  for (const Polygon& poly : polys) {
    const auto& c1 = poly.left;
    const auto& c2 = poly.right;
    const Element base1 = lab(poly.bottom, c1[1]);
    const Element base2 = lab(poly.bottom, c2[1]);
    auto add = [&](int cond, std::string detail) {
      r.violations.push_back({cond, std::move(detail), polygon_witness(poly)});
    };
    // CU1: the last edge of each chain carries the other chain's first label.
    if (lab(c2[c2.size() - 2], poly.top) != base1 || lab(c1[c1.size() - 2], poly.top) != base2)
      add(1, "end labels not swapped");
    // CU2: interior edges sit strictly above both base labels.
    for (const auto* chain : {&c1, &c2})
      for (std::size_t i = 1; i + 2 < chain->size(); ++i) {
        const Element x = lab((*chain)[i], (*chain)[i + 1]);
        if (!labels.lt(base1, x) || !labels.lt(base2, x)) add(2, "interior label not above both base labels");
      }
    // CU3: no repeated label along either chain.
    for (const auto* chain : {&c1, &c2}) {
      std::vector<Element> seen;
      for (std::size_t i = 0; i + 1 < chain->size(); ++i) seen.push_back(lab((*chain)[i], (*chain)[i + 1]));
      std::sort(seen.begin(), seen.end());
      if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) add(3, "repeated label on a chain");
    }
  }
  // CU4 / CU5: irreducible edges carry pairwise distinct labels.
  auto distinct = [&](const std::vector<Element>& irr, bool join_side, int cond) {
    std::map<Element, Element> first;
    for (Element j : irr) {
      const Element x = join_side ? lab(p.lower_covers(j)[0], j) : lab(j, p.upper_covers(j)[0]);
      auto [it, fresh] = first.emplace(x, j);
      if (!fresh) r.violations.push_back({cond, "irreducibles share a label", {it->second, j}});
    }
  };
  distinct(join_irreducibles(l), true, 4);
  distinct(meet_irreducibles(l), false, 5);
  return r;
}

bool same_fibers(std::span<const Element> a, std::span<const Element> b) {
  if (a.size() != b.size()) return false;
  std::map<Element, Element> ab, ba;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [x, fx] = ab.emplace(a[i], b[i]);
    auto [y, fy] = ba.emplace(b[i], a[i]);
    if (x->second != b[i] || y->second != a[i]) return false;
  }
  return true;
}

bool check_cu_equals_jsd(const Lattice& l, std::span<const Element> edge_labels) {
  return same_fibers(edge_labels, jsd_edge_labels(l));
}

}  // namespace bubble
