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

#ifndef BUBBLE_KERNELS_HPP
#define BUBBLE_KERNELS_HPP

// Exhaustive order-theoretic checks. Each kernel exists twice: a plain serial
// loop kept as the reference, and an OpenMP version split over the outermost
// index. Both return identical results; tests and bench/ compare them.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bubble/bitset.hpp"
#include "bubble/poset.hpp"

namespace bubble::kernels {

/// Dense n×n operation table, row-major.
using Table = std::vector<Element>;

inline constexpr Element kNoElement = static_cast<Element>(-1);

namespace serial {

/// Upper covers of every element from a reflexive-transitive order matrix.
std::vector<std::vector<Element>> transitive_reduction(const BitMatrix& up, const BitMatrix& down);

/// Least upper bounds from the up-set matrix; kNoElement where none exists.
Table join_table(const BitMatrix& up);

/// First triple (p, q, r) with p∨q = p∨r but p∨q != p∨(q∧r), if any.
std::optional<std::array<Element, 3>> join_sd_violation(std::span<const Element> join,
                                                         std::span<const Element> meet, std::size_t n);

/// First triple violating x∧(y∨z) = (x∧y)∨(x∧z), if any.
std::optional<std::array<Element, 3>> distributive_violation(std::span<const Element> join,
                                                             std::span<const Element> meet,
                                                             std::size_t n);

/// flags[p] = 1 iff (r∨p)∧q = r∨(p∧q) for all r < q.
std::vector<char> left_modular_flags(std::span<const Element> join, std::span<const Element> meet,
                                     const BitMatrix& up);

}  // namespace serial

namespace omp {

std::vector<std::vector<Element>> transitive_reduction(const BitMatrix& up, const BitMatrix& down);
Table join_table(const BitMatrix& up);
std::optional<std::array<Element, 3>> join_sd_violation(std::span<const Element> join,
                                                         std::span<const Element> meet, std::size_t n);
std::optional<std::array<Element, 3>> distributive_violation(std::span<const Element> join,
                                                             std::span<const Element> meet,
                                                             std::size_t n);
std::vector<char> left_modular_flags(std::span<const Element> join, std::span<const Element> meet,
                                     const BitMatrix& up);

/// Worker count the OpenMP kernels will use.
int max_threads();

}  // namespace omp

}  // namespace bubble::kernels

#endif  // BUBBLE_KERNELS_HPP
