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

#ifndef BUBBLE_EXPORT_HPP
#define BUBBLE_EXPORT_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bubble/bubble_order.hpp"
#include "bubble/galois.hpp"
#include "bubble/poset.hpp"

namespace bubble {

/// Hasse diagram, bottom to top. `edge_labels` follows poset.edges() order
/// and may be empty.
std::string hasse_dot(const FinitePoset& p, std::string_view graph_name,
                      const std::function<std::string(Element)>& node_label,
                      const std::vector<std::string>& edge_labels = {});

/// Words of the family with their inversion sets, one row per element.
std::string element_table_csv(const WordFamily& f);

/// Each word of Shuf(n-1,1) with its triword.
std::string sigma_table_csv(int n);

std::string galois_dot(const GaloisGraph& g, std::string_view graph_name);

/// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(std::string_view s);

}  // namespace bubble

#endif  // BUBBLE_EXPORT_HPP
