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

#ifndef BUBBLE_LATTICE_HPP
#define BUBBLE_LATTICE_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "bubble/kernels.hpp"
#include "bubble/poset.hpp"

namespace bubble {

/// A finite poset known to be a lattice, with dense join and meet tables.
class Lattice {
 public:
  /// Returns the lattice view of `p`, or nothing if some pair lacks a join
  /// or a meet (including the empty poset).
  static std::optional<Lattice> from_poset(FinitePoset p);

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  bool leq(Element a, Element b) const { return poset_.leq(a, b); }

  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join_all(std::span<const Element> xs) const;
  Element meet_all(std::span<const Element> xs) const;

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  std::span<const Element> join_table() const { return join_; }
  std::span<const Element> meet_table() const { return meet_; }

 private:
  Lattice() = default;

  FinitePoset poset_;
  kernels::Table join_;
  kernels::Table meet_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// Elements with exactly one lower cover.
std::vector<Element> join_irreducibles(const Lattice& l);
/// Elements with exactly one upper cover.
std::vector<Element> meet_irreducibles(const Lattice& l);
/// Upper covers of the bottom element.
std::vector<Element> atoms(const Lattice& l);

struct Semidistributivity {
  bool join_sd = false;
  bool meet_sd = false;
  std::optional<std::array<Element, 3>> join_witness;
  std::optional<std::array<Element, 3>> meet_witness;
  bool both() const { return join_sd && meet_sd; }
};
Semidistributivity check_semidistributive(const Lattice& l);
inline bool is_semidistributive(const Lattice& l) { return check_semidistributive(l).both(); }

/// x∧(y∨z) = (x∧y)∨(x∧z) for all triples.
bool is_distributive(const Lattice& l);

/// ⋀{r : lower ∨ r = upper}. Throws Errc::kNotJoinSemidistributive if the
/// result is not join-irreducible.
Element lambda_jsd(const Lattice& l, EdgeRef e);

/// {lambda_jsd(p', p) : p' ⋖ p}, sorted.
std::vector<Element> canonical_join_rep(const Lattice& l, Element p);

/// Either q∨p' = q' and q∧p' = p, or q'∨p = q and q'∧p = p'.
bool is_perspective(const Lattice& l, EdgeRef e1, EdgeRef e2);

struct Extremality {
  std::size_t length = 0;
  std::size_t join_irreducibles = 0;
  std::size_t meet_irreducibles = 0;
  bool extremal() const { return length == join_irreducibles && length == meet_irreducibles; }
};
/// Also asserts length <= min(|J|, |M|); a violation means the tables are corrupt.
Extremality check_extremality(const Lattice& l);
inline bool is_extremal(const Lattice& l) { return check_extremality(l).extremal(); }

/// p is left modular iff (r∨p)∧q = r∨(p∧q) for all r < q.
std::vector<char> left_modular_elements(const Lattice& l);

/// A maximal chain of maximum length made of left-modular elements, if one
/// exists. `hint`, when given and valid, is tried first.
std::optional<std::vector<Element>> left_modular_chain(const Lattice& l,
                                                       std::span<const Element> hint = {});

/// Extremal and left modular.
bool is_trim(const Lattice& l, std::span<const Element> hint = {});

/// Interval [bottom, top] that is the union of two chains meeting only at
/// its ends. Chains are listed bottom-up and include both ends.
struct Polygon {
  Element bottom = 0;
  Element top = 0;
  std::vector<Element> left;
  std::vector<Element> right;
  std::size_t size() const { return left.size() + right.size() - 2; }
};
std::vector<Polygon> polygonal_intervals(const Lattice& l);

/// Atoms a_i together with κ(a_i), the greatest element not above a_i.
struct Crown {
  std::vector<Element> atoms;
  std::vector<Element> kappas;
  std::size_t size() const { return atoms.size(); }
};
/// Throws Errc::kKappaMissing if some K(a) has no greatest element.
Crown find_crown(const Lattice& l);

/// True iff a_i < κ(a_j) exactly when i != j and no other relations hold
/// among the 2k elements (so the induced subposet is the standard k-crown).
bool is_standard_crown(const Lattice& l, const Crown& c);

}  // namespace bubble

#endif  // BUBBLE_LATTICE_HPP
