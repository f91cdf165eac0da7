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

#include "bubble/galois.hpp"

#include <algorithm>
#include <bit>

#include "bubble/error.hpp"

namespace bubble {

IrreducibleOrdering order_irreducibles(const Lattice& l, std::span<const Element> chain) {
  const FinitePoset& p = l.poset();
  const auto ex = check_extremality(l);
  if (!ex.extremal()) throw Error(Errc::kNotExtremal, "lattice is not extremal");
  const std::size_t k = ex.length;

  IrreducibleOrdering o;
  bool use_hint = chain.size() == k + 1 && chain.front() == l.bottom() && chain.back() == l.top();
  for (std::size_t i = 1; use_hint && i < chain.size(); ++i) use_hint = p.covers(chain[i - 1], chain[i]);
  if (use_hint)
    o.chain.assign(chain.begin(), chain.end());
  else
    o.chain = p.longest_chain();

  const auto js = join_irreducibles(l);
  const auto ms = meet_irreducibles(l);
  for (std::size_t s = 1; s <= k; ++s) {
    const Element lo = o.chain[s - 1], hi = o.chain[s];
    std::vector<Element> jc, mc;
    for (Element j : js)
      if (l.leq(j, hi) && !l.leq(j, lo)) jc.push_back(j);
    for (Element m : ms)
      if (l.leq(lo, m) && !l.leq(hi, m)) mc.push_back(m);
    if (jc.size() != 1 || mc.size() != 1)
      throw Error(Errc::kNotExtremal, "chain step " + std::to_string(s) + " does not single out one irreducible");
    o.jseq.push_back(jc[0]);
    o.mseq.push_back(mc[0]);
  }
  // j_1 ∨ … ∨ j_s = c_s = m_{s+1} ∧ … ∧ m_k for all s.
  Element acc = l.bottom();
  for (std::size_t s = 1; s <= k; ++s) {
    acc = l.join(acc, o.jseq[s - 1]);
    const Element tail = l.meet_all(std::span<const Element>(o.mseq).subspan(s));
    if (acc != o.chain[s] || tail != o.chain[s])
      throw Error(Errc::kNotExtremal, "ordering identity fails at step " + std::to_string(s));
  }
  return o;
}

std::size_t GaloisGraph::arc_count() const {
  std::size_t c = 0;
  for (std::size_t s = 0; s < size(); ++s) c += bit_count(arcs.row(s));
  return c;
}

GaloisGraph reversed(const GaloisGraph& g) {
  GaloisGraph r{g.names, g.arcs.transposed()};
  return r;
}

namespace {

GaloisGraph named(const IrreducibleOrdering& o) {
  GaloisGraph g;
  for (Element j : o.jseq) g.names.push_back(std::to_string(j));
  g.arcs = BitMatrix(o.length());
  return g;
}

}  // namespace

GaloisGraph galois_graph(const Lattice& l, const IrreducibleOrdering& o) {
  GaloisGraph g = named(o);
  for (std::size_t s = 0; s < o.length(); ++s)
    for (std::size_t t = 0; t < o.length(); ++t)
      if (s != t && !l.leq(o.jseq[s], o.mseq[t])) g.arcs.set(s, t);
  return g;
}

GaloisGraph galois_graph_sd(const Lattice& l, const IrreducibleOrdering& o) {
  GaloisGraph g = named(o);
  for (std::size_t t = 0; t < o.length(); ++t) {
    const Element jt = o.jseq[t];
    const Element below = l.poset().lower_covers(jt)[0];
    for (std::size_t s = 0; s < o.length(); ++s)
      if (s != t && l.leq(jt, l.join(below, o.jseq[s]))) g.arcs.set(s, t);
  }
  return g;
}

GaloisGraph bubble_galois_explicit(int m, int n) {
  const LabelPoset s = LabelPoset::build(m, n);
  GaloisGraph g;
  for (auto& l : s.labels()) g.names.push_back(to_string(l));
  g.arcs = BitMatrix(s.size());
  using K = BubbleLabel::Kind;
  for (Element a = 0; a < s.size(); ++a)
    for (Element b = 0; b < s.size(); ++b) {
      const auto& p = s.label(a);
      const auto& q = s.label(b);
      bool arc = false;
      if (p.kind == K::kPair && q.kind == K::kX) arc = p.s == q.s;
      if (p.kind == K::kY && q.kind == K::kPair) arc = p.t == q.t;
      if (p.kind == K::kPair && q.kind == K::kPair) arc = p.s >= q.s && p.t <= q.t && a != b;
      if (arc) g.arcs.set(a, b);
    }
  return g;
}

GaloisGraph relabel_by_bubble_labels(const WordFamily& f, const IrreducibleOrdering& o, const GaloisGraph& g,
                                     const LabelPoset& s) {
  if (o.length() != s.size() || g.size() != s.size())
    throw Error(Errc::kSizeMismatch, "graph and label poset differ in size");
  std::vector<Element> to(o.length());
  std::vector<char> hit(s.size(), 0);
  for (std::size_t i = 0; i < o.length(); ++i) {
    const Element j = o.jseq[i];
    to[i] = s.id(lambda_bubble(f.word(f.hasse.lower_covers(j)[0]), f.word(j), f.n));
    if (hit[to[i]]++) throw Error(Errc::kSizeMismatch, "two irreducibles share a label");
  }
  GaloisGraph r;
  for (auto& l : s.labels()) r.names.push_back(to_string(l));
  r.arcs = BitMatrix(s.size());
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b)
      if (g.arc(a, b)) r.arcs.set(to[a], to[b]);
  return r;
}

OrthogonalPairs max_orthogonal_pairs(const GaloisGraph& g) {
  const std::size_t k = g.size();
  if (k > 64) throw Error(Errc::kCapExceeded, "orthogonal pairs support at most 64 vertices");
  const Word64 all = k == 64 ? ~Word64{0} : (Word64{1} << k) - 1;
  std::vector<Word64> out(k, 0), in(k, 0);
  for (std::size_t s = 0; s < k; ++s)
    for (std::size_t t = 0; t < k; ++t)
      if (g.arc(s, t)) {
        out[s] |= Word64{1} << t;
        in[t] |= Word64{1} << s;
      }
  // B(A) = vertices outside A not hit from A; A(B) dually. Together they
  // form a Galois connection for the relation "distinct and no arc".
  auto right = [&](Word64 a) {
    Word64 hit = a;
    for (Word64 x = a; x; x &= x - 1) hit |= out[std::countr_zero(x)];
    return all & ~hit;
  };
  auto left = [&](Word64 b) {
    Word64 hit = b;
    for (Word64 x = b; x; x &= x - 1) hit |= in[std::countr_zero(x)];
    return all & ~hit;
  };
  auto closure = [&](Word64 a) { return left(right(a)); };

  // NextClosure: the next closed set in lectic order, smaller vertices
  // being more significant.
  OrthogonalPairs r;
  auto bit = [&](std::size_t i) { return Word64{1} << i; };
  Word64 a = closure(0);
  while (true) {
    r.first.push_back(a);
    r.second.push_back(right(a));
    if (a == all) break;
    bool advanced = false;
    for (std::size_t i = k; i-- > 0;) {
      if (a & bit(i)) continue;
      const Word64 lower = a & (bit(i) - 1);
      const Word64 cand = closure(lower | bit(i));
      if ((cand & (bit(i) - 1)) == lower) {
        a = cand;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  // Sort by (popcount, value) so the output does not depend on the sweep.
  std::vector<std::size_t> idx(r.first.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    const int px = std::popcount(r.first[x]), py = std::popcount(r.first[y]);
    return px != py ? px < py : r.first[x] < r.first[y];
  });
  OrthogonalPairs sorted;
  for (std::size_t i : idx) {
    sorted.first.push_back(r.first[i]);
    sorted.second.push_back(r.second[i]);
  }
  sorted.order = FinitePoset::from_relation(sorted.first.size(), [&](Element x, Element y) {
    return (sorted.first[x] & ~sorted.first[y]) == 0;
  });
  return sorted;
}

}  // namespace bubble
