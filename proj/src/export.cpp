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

#include "bubble/export.hpp"

#include "bubble/hochschild.hpp"

namespace bubble {

namespace {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string hasse_dot(const FinitePoset& p, std::string_view graph_name,
                      const std::function<std::string(Element)>& node_label,
                      const std::vector<std::string>& edge_labels) {
  std::string out = "digraph " + dot_quote(graph_name) + " {\n  rankdir=BT;\n";
  for (Element e = 0; e < p.size(); ++e)
    out += "  n" + std::to_string(e) + " [label=" + dot_quote(node_label(e)) + "];\n";
  const auto edges = p.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    out += "  n" + std::to_string(edges[i].lower) + " -> n" + std::to_string(edges[i].upper);
    if (i < edge_labels.size()) out += " [label=" + dot_quote(edge_labels[i]) + "]";
    out += ";\n";
  }
  return out + "}\n";
}

std::string element_table_csv(const WordFamily& f) {
  std::string out = "word,inversions\n";
  for (const auto& w : f.elements) out += csv_field(w.str()) + "," + csv_field(w.inversions().str()) + "\n";
  return out;
}

std::string sigma_table_csv(int n) {
  std::string out = "word,triword\n";
  for (const auto& w : enumerate_shuffle(n - 1, 1))
    out += csv_field(w.str()) + "," + csv_field(sigma_tilde(w, n).str()) + "\n";
  return out;
}

std::string galois_dot(const GaloisGraph& g, std::string_view graph_name) {
  std::string out = "digraph " + dot_quote(graph_name) + " {\n";
  for (std::size_t s = 0; s < g.size(); ++s)
    out += "  v" + std::to_string(s) + " [label=" + dot_quote(g.names[s]) + "];\n";
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t t = 0; t < g.size(); ++t)
      if (g.arc(s, t)) out += "  v" + std::to_string(s) + " -> v" + std::to_string(t) + ";\n";
  return out + "}\n";
}

}  // namespace bubble
