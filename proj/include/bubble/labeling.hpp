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

#ifndef BUBBLE_LABELING_HPP
#define BUBBLE_LABELING_HPP

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "bubble/bubble_order.hpp"
#include "bubble/lattice.hpp"
#include "bubble/poset.hpp"

namespace bubble {

/// Edge label of Bub(m,n): a deleted x_s, an inserted y_t, or the inversion
/// (x_s, y_t) added by a transposition. Ordered X < Y < pair, then by index;
/// that order is for output only.
struct BubbleLabel {
  enum class Kind : std::uint8_t { kX, kY, kPair };
  Kind kind = Kind::kX;
  int s = 0;
  int t = 0;

  static BubbleLabel x(int s) { return {Kind::kX, s, 0}; }
  static BubbleLabel y(int t) { return {Kind::kY, 0, t}; }
  static BubbleLabel pair(int s, int t) { return {Kind::kPair, s, t}; }

  friend constexpr auto operator<=>(const BubbleLabel&, const BubbleLabel&) = default;
};

std::string to_string(const BubbleLabel& l);

/// Label of the cover u ⋖ v. Throws Errc::kNotACover otherwise.
BubbleLabel lambda_bubble(const ShuffleWord& u, const ShuffleWord& v, int n);

/// The labels X ⊎ Y ⊎ (X×Y) under x_s ≺ (x_s,y_t), y_t ≺ (x_s,y_t),
/// (x_s,y_t) ≺ (x_s',y_t) for s > s', (x_s,y_t) ≺ (x_s,y_t') for t > t'.
class LabelPoset {
 public:
  static LabelPoset build(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<BubbleLabel>& labels() const { return labels_; }
  const BubbleLabel& label(Element e) const { return labels_[e]; }
  /// Throws Errc::kOutOfAlphabet for labels outside the alphabets.
  Element id(const BubbleLabel& l) const;
  const FinitePoset& order() const { return order_; }
  bool precedes(const BubbleLabel& a, const BubbleLabel& b) const { return order_.lt(id(a), id(b)); }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<BubbleLabel> labels_;
  FinitePoset order_;
};

inline LabelPoset build_label_poset(int m, int n) { return LabelPoset::build(m, n); }

/// Position of a cover in poset.edges(); throws Errc::kNotACover if absent.
std::size_t edge_index(const FinitePoset& p, EdgeRef e);

/// For each edge of f.hasse (in edges() order), the id in s of its label.
std::vector<Element> bubble_edge_labels(const WordFamily& f, const LabelPoset& s);

/// For each edge, lambda_jsd as an element of l.
std::vector<Element> jsd_edge_labels(const Lattice& l);

struct CuViolation {
  int condition = 0;  // 1..5
  std::string detail;
  /// Polygon for CU1–CU3; the offending pair of irreducibles for CU4/CU5.
  std::vector<Element> witness;
};

struct CuReport {
  std::size_t polygons = 0;
  std::vector<CuViolation> violations;
  bool ok() const { return violations.empty(); }
  std::array<std::size_t, 5> counts() const;
};

/// Checks CU1–CU5 for an edge labeling (one label per edge of l, values
/// being elements of `labels`, compared by its order).
CuReport verify_cu_labeling(const Lattice& l, std::span<const Element> edge_labels, const FinitePoset& labels);

/// Two labelings induce the same partition of the edges.
bool same_fibers(std::span<const Element> a, std::span<const Element> b);

/// The edge partition of `edge_labels` equals that of lambda_jsd.
bool check_cu_equals_jsd(const Lattice& l, std::span<const Element> edge_labels);

}  // namespace bubble

#endif  // BUBBLE_LABELING_HPP
