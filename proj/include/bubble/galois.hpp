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

#ifndef BUBBLE_GALOIS_HPP
#define BUBBLE_GALOIS_HPP

#include <span>
#include <string>
#include <vector>

#include "bubble/bitset.hpp"
#include "bubble/bubble_order.hpp"
#include "bubble/labeling.hpp"
#include "bubble/lattice.hpp"

namespace bubble {

/// A maximal chain c_0 < … < c_k of full length with the irreducibles listed
/// so that j_1 ∨ … ∨ j_s = c_s = m_{s+1} ∧ … ∧ m_k. Index 0 of jseq is j_1.
struct IrreducibleOrdering {
  std::vector<Element> chain;
  std::vector<Element> jseq;
  std::vector<Element> mseq;
  std::size_t length() const { return jseq.size(); }
};

/// Uses `chain` when it is a maximal chain of full length, else a longest
/// chain of l. Throws Errc::kNotExtremal when l is not extremal or the chain
/// does not induce orderings satisfying the identities.
IrreducibleOrdering order_irreducibles(const Lattice& l, std::span<const Element> chain = {});

/// Directed graph on vertices 0..k-1 without loops.
struct GaloisGraph {
  std::vector<std::string> names;
  BitMatrix arcs;

  std::size_t size() const { return names.size(); }
  bool arc(std::size_t s, std::size_t t) const { return arcs.test(s, t); }
  std::size_t arc_count() const;
  friend bool operator==(const GaloisGraph& a, const GaloisGraph& b) { return a.arcs == b.arcs; }
};

/// Same vertices with every arc turned around.
GaloisGraph reversed(const GaloisGraph& g);

/// s → t iff s != t and j_s ≰ m_t. Vertex names are element ids.
GaloisGraph galois_graph(const Lattice& l, const IrreducibleOrdering& o);

/// s → t iff s != t and j_t ≤ (j_t)_* ∨ j_s; uses join-irreducibles only.
GaloisGraph galois_graph_sd(const Lattice& l, const IrreducibleOrdering& o);

/// The closed-form Galois graph of Bub(m,n) on X ⊎ Y ⊎ (X×Y), vertices in
/// LabelPoset order: (x_s,y_t) → x_s; y_t → (x_s,y_t); (x_s,y_t) → (x_s',y_t')
/// when s >= s', t <= t' and the pairs differ.
GaloisGraph bubble_galois_explicit(int m, int n);

/// Renames the vertices of a Galois graph of Bub(m,n) by λ(j_*, j): vertex s
/// moves to the label id of the cover below j_s. Throws Errc::kSizeMismatch
/// if the labels are not a bijection onto S_{m,n}.
GaloisGraph relabel_by_bubble_labels(const WordFamily& f, const IrreducibleOrdering& o, const GaloisGraph& g,
                                     const LabelPoset& s);

/// Maximal orthogonal pairs (A, B) of a graph, as vertex bitmasks, with the
/// poset ordered by inclusion of A. Requires at most 64 vertices.
struct OrthogonalPairs {
  std::vector<Word64> first;
  std::vector<Word64> second;
  FinitePoset order;
};
OrthogonalPairs max_orthogonal_pairs(const GaloisGraph& g);

}  // namespace bubble

#endif  // BUBBLE_GALOIS_HPP
