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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bubble/bubble_order.hpp"
#include "bubble/error.hpp"
#include "bubble/poset.hpp"
#include "zoo.hpp"

using namespace bubble;

TEST_CASE("from_covers rejects cycles and implied edges") {
  const std::vector<EdgeRef> cyc = {{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(FinitePoset::from_covers(3, cyc), Error);
  const std::vector<EdgeRef> implied = {{0, 1}, {1, 2}, {0, 2}};
  try {
    FinitePoset::from_covers(3, implied);
    FAIL("implied edge accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kInvalidPoset);
  }
}

TEST_CASE("from_relation takes the closure and reduces") {
  // 0 < 1 < 2 given only as generating pairs.
  auto p = FinitePoset::from_relation(3, [](Element a, Element b) { return b == a + 1; });
  CHECK(p.leq(0, 2));
  CHECK(p.edges().size() == 2);
  CHECK_FALSE(p.covers(0, 2));
  CHECK(p.height() == 2);
  CHECK_THROWS_AS(FinitePoset::from_relation(2, [](Element, Element) { return true; }), Error);
}

TEST_CASE("basic queries") {
  auto p = zoo::n5();
  CHECK(p.minimal_elements() == std::vector<Element>{0});
  CHECK(p.maximal_elements() == std::vector<Element>{4});
  CHECK(p.height() == 3);
  CHECK(p.longest_chain() == std::vector<Element>{0, 1, 2, 4});
  CHECK(p.comparable(1, 2));
  CHECK_FALSE(p.comparable(1, 3));
  CHECK(bit_count(p.up_set(1)) == 3);
  CHECK(bit_count(p.down_set(4)) == 5);
  const auto& topo = p.topological_order();
  for (auto [a, b] : p.edges())
    CHECK(std::find(topo.begin(), topo.end(), a) < std::find(topo.begin(), topo.end(), b));
}

TEST_CASE("covers equal the transitive reduction of the closure") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 5 + trial % 20;
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) rel[a][b] = (rng() % 4) == 0;
    // Warshall by hand.
    for (std::size_t a = 0; a < n; ++a) rel[a][a] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (rel[a][k] && rel[k][b]) rel[a][b] = 1;
    auto p = FinitePoset::from_relation(n, [&](Element a, Element b) { return rel[a][b]; });
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        bool cover = a != b && rel[a][b];
        for (std::size_t c = 0; c < n && cover; ++c)
          if (c != a && c != b && rel[a][c] && rel[c][b]) cover = false;
        CHECK(p.covers(static_cast<Element>(a), static_cast<Element>(b)) == cover);
        CHECK(p.leq(static_cast<Element>(a), static_cast<Element>(b)) == static_cast<bool>(rel[a][b]));
      }
    CHECK(FinitePoset::from_covers(n, p.edges()) == p);
  }
}

TEST_CASE("dual and induced") {
  auto p = zoo::n5();
  auto d = p.dual();
  for (Element a = 0; a < 5; ++a)
    for (Element b = 0; b < 5; ++b) CHECK(d.leq(a, b) == p.leq(b, a));
  const std::vector<Element> sub = {0, 2, 3};
  auto s = p.induced(sub);
  CHECK(s.size() == 3);
  CHECK(s.covers(0, 1));
  CHECK(s.covers(0, 2));
  CHECK_FALSE(s.comparable(1, 2));
}

TEST_CASE("doubling") {
  auto p = zoo::chain(2);
  auto empty = doubling(p, {});
  CHECK(is_isomorphic(empty.poset, p));

  // Doubling a 2-chain at its top gives a 3-chain; check against P × 2 filtered.
  const std::vector<Element> top = {1};
  auto d = doubling(p, top);
  CHECK(is_isomorphic(d.poset, zoo::chain(3)));
  for (Element i = 0; i < d.poset.size(); ++i)
    for (Element j = 0; j < d.poset.size(); ++j) {
      auto [a, ca] = d.origin[i];
      auto [b, cb] = d.origin[j];
      CHECK(d.poset.leq(i, j) == (ca <= cb && p.leq(a, b)));
    }

  // Doubling an interval of a lattice yields a lattice.
  auto b3 = zoo::boolean(3);
  for (Element lo = 0; lo < 8; ++lo)
    for (Element hi = 0; hi < 8; ++hi) {
      if (!b3.leq(lo, hi)) continue;
      std::vector<Element> interval;
      for (Element x = 0; x < 8; ++x)
        if (b3.leq(lo, x) && b3.leq(x, hi)) interval.push_back(x);
      auto dd = doubling(b3, interval);
      CHECK(dd.poset.size() == 8 + interval.size());
      CHECK(Lattice::from_poset(dd.poset).has_value());
    }

  // Doubling the pentagon's middle element: a lattice with one more element.
  const std::vector<Element> mid = {1};
  CHECK(Lattice::from_poset(doubling(zoo::n5(), mid).poset).has_value());
}

TEST_CASE("chains_poset") {
  const std::vector<std::size_t> sizes = {1, 3, 2};
  auto p = chains_poset(sizes);
  CHECK(p.size() == 6);
  CHECK(p.edges().size() == 3);
  CHECK(p.minimal_elements().size() == 3);
}

TEST_CASE("isomorphism") {
  auto p = zoo::n5();
  CHECK(is_isomorphic(p, p));
  // Relabel N5 and find the map back.
  const std::vector<Element> perm = {3, 0, 4, 2, 1};
  std::vector<EdgeRef> e;
  for (auto [a, b] : p.edges()) e.push_back({perm[a], perm[b]});
  auto q = FinitePoset::from_covers(5, e);
  auto f = find_isomorphism(p, q);
  REQUIRE(f.has_value());
  CHECK(is_cover_bijection(p, q, *f));
  CHECK_FALSE(is_isomorphic(zoo::n5(), zoo::m3()));
  CHECK(is_anti_isomorphic(zoo::n5(), zoo::n5()));
  CHECK_FALSE(is_isomorphic(zoo::grid(2, 3), zoo::grid(1, 6)));
  CHECK(is_isomorphic(zoo::grid(2, 3), zoo::grid(3, 2)));
  try {
    find_isomorphism(zoo::chain(2), zoo::chain(3));
    FAIL("size mismatch not reported");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::kSizeMismatch);
  }

  auto b21 = build_bubble_lattice(2, 1).hasse;
  auto b12 = build_bubble_lattice(1, 2).hasse;
  CHECK(is_anti_isomorphic(b21, b12));
  CHECK(is_isomorphic(build_bubble_lattice(3, 2).hasse, build_bubble_lattice(3, 2, kDefaultCap, true).hasse));
  // Shuf(2,1) and Bub(2,1) share size but not shape.
  CHECK_FALSE(is_isomorphic(b21, build_shuffle_poset(2, 1).hasse));
}

TEST_CASE("is_cover_bijection rejects non-bijections") {
  auto p = zoo::chain(3);
  const std::vector<Element> id = {0, 1, 2}, rev = {2, 1, 0}, dup = {0, 0, 2};
  CHECK(is_cover_bijection(p, p, id));
  CHECK_FALSE(is_cover_bijection(p, p, rev));
  CHECK(is_cover_bijection(p, p.dual(), rev));
  CHECK_FALSE(is_cover_bijection(p, p, dup));
}
