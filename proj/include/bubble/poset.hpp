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

#ifndef BUBBLE_POSET_HPP
#define BUBBLE_POSET_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bubble/bitset.hpp"

namespace bubble {

using Element = std::uint32_t;

/// A covering pair lower ⋖ upper.
struct EdgeRef {
  Element lower = 0;
  Element upper = 0;
  friend constexpr auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Finite poset on {0, ..., size-1}: cover lists plus cached reachability.
///
/// `up_set(a)` is the bit row of all b with a <= b and `down_set(a)` the row
/// of all b with b <= a, so order tests are single bit probes. Immutable after
/// construction.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Builds from a cover relation. Throws Errc::kInvalidPoset if the edges
  /// contain a cycle or an edge implied by the others.
  static FinitePoset from_covers(std::size_t n, std::span<const EdgeRef> covers);

  /// Builds from an order predicate; the reflexive-transitive closure is taken
  /// and covers are computed by transitive reduction. Throws
  /// Errc::kInvalidPoset if the closure is not antisymmetric.
  static FinitePoset from_relation(std::size_t n, const std::function<bool(Element, Element)>& leq);

  std::size_t size() const { return upper_.size(); }

  bool leq(Element a, Element b) const { return up_.test(a, b); }
  bool lt(Element a, Element b) const { return a != b && up_.test(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }
  bool covers(Element lower, Element upper) const;

  std::span<const Element> upper_covers(Element a) const { return upper_[a]; }
  std::span<const Element> lower_covers(Element a) const { return lower_[a]; }

  std::span<const Word64> up_set(Element a) const { return up_.row(a); }
  std::span<const Word64> down_set(Element a) const { return down_.row(a); }
  const BitMatrix& up_matrix() const { return up_; }
  const BitMatrix& down_matrix() const { return down_; }

  /// Cover relation sorted by (lower, upper).
  const std::vector<EdgeRef>& edges() const { return edges_; }

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;

  /// Elements sorted so that a < b implies a appears first.
  const std::vector<Element>& topological_order() const { return topo_; }

  /// Length of a longest chain (number of cover steps).
  std::size_t height() const;

  /// A longest maximal chain, listed bottom-up.
  std::vector<Element> longest_chain() const;

  /// Same ground set with the order reversed.
  FinitePoset dual() const;

  /// Induced subposet; element i of the result is subset[i].
  FinitePoset induced(std::span<const Element> subset) const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) { return a.up_ == b.up_; }

 private:
  static FinitePoset from_closed(BitMatrix up);
  void finish_from_covers();

  std::vector<std::vector<Element>> upper_;
  std::vector<std::vector<Element>> lower_;
  std::vector<EdgeRef> edges_;
  std::vector<Element> topo_;
  BitMatrix up_;
  BitMatrix down_;
};

/// Doubling P[X]: the induced subposet of P × 2 on
/// (P_{<=X} × {1}) ⊎ (((P \ P_{<=X}) ∪ X) × {2}).
struct Doubling {
  FinitePoset poset;
  /// origin[i] = (element of P, copy index 1 or 2) for element i.
  std::vector<std::pair<Element, int>> origin;
};
Doubling doubling(const FinitePoset& p, std::span<const Element> subset);

/// Disjoint union of chains with the given element counts.
FinitePoset chains_poset(std::span<const std::size_t> chain_sizes);

/// A cover-preserving bijection f with a ⋖ b in P iff f(a) ⋖ f(b) in Q, if any.
/// Throws Errc::kSizeMismatch when the sizes differ.
std::optional<std::vector<Element>> find_isomorphism(const FinitePoset& p, const FinitePoset& q);
inline bool is_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  return find_isomorphism(p, q).has_value();
}
/// Isomorphism from P onto the dual of Q.
std::optional<std::vector<Element>> find_anti_isomorphism(const FinitePoset& p, const FinitePoset& q);
inline bool is_anti_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  return find_anti_isomorphism(p, q).has_value();
}

/// True iff `map` is a bijection carrying the covers of P exactly onto those of Q.
bool is_cover_bijection(const FinitePoset& p, const FinitePoset& q, std::span<const Element> map);

}  // namespace bubble

#endif  // BUBBLE_POSET_HPP
