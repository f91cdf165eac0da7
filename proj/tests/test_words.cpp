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

#include <set>

#include "bubble/error.hpp"
#include "bubble/words.hpp"
#include "oracles.hpp"

using namespace bubble;

namespace {

ShuffleWord W(const char* s) { return ShuffleWord::parse(s); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::kIo;
}

}  // namespace

TEST_CASE("make validates letters") {
  auto w = ShuffleWord::make({Letter::x(1), Letter::y(1), Letter::x(2)}, 2, 1);
  CHECK(w.str() == "x1.y1.x2");
  CHECK(ShuffleWord::make({}, 2, 1).str() == "-");
  CHECK(code_of([] { ShuffleWord::make({Letter::x(2), Letter::x(1)}, 2, 1); }) == Errc::kNotIncreasing);
  CHECK(code_of([] { ShuffleWord::make({Letter::x(1), Letter::x(1)}, 2, 1); }) == Errc::kDuplicateLetter);
  CHECK(code_of([] { ShuffleWord::make({Letter::y(2)}, 2, 1); }) == Errc::kOutOfAlphabet);
  CHECK(code_of([] { ShuffleWord::parse("x1.z2"); }) == Errc::kParse);
  CHECK(code_of([] { ShuffleWord::parse("x1..y1"); }) == Errc::kParse);
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"-", "x1", "y3.x1.x4", "x1.y1.y2.x2"}) CHECK(W(s).str() == s);
}

TEST_CASE("enumeration of Shuf(2,1) in canonical order") {
  std::vector<std::string> got;
  for (auto& w : enumerate_shuffle(2, 1)) got.push_back(w.str());
  const std::vector<std::string> expected = {"-",        "x1",       "x2",       "y1",
                                             "x1.x2",    "x1.y1",    "x2.y1",    "y1.x1",
                                             "y1.x2",    "x1.x2.y1", "x1.y1.x2", "y1.x1.x2"};
  CHECK(got == expected);
  CHECK(enumerate_shuffle(0, 0).size() == 1);
  CHECK(enumerate_shuffle(0, 0)[0].empty());
}

TEST_CASE("enumeration matches the brute-force word set") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; m + n <= 6 && n <= 5; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const auto words = enumerate_shuffle(m, n);
      CHECK(words.size() == oracle::interleaving_count(m, n));
      CHECK(shuffle_count(m, n) == oracle::interleaving_count(m, n));
      std::set<oracle::Raw> ours;
      for (auto& w : words) ours.insert(w.letters());
      const auto brute = oracle::all_words(m, n);
      CHECK(ours == std::set<oracle::Raw>(brute.begin(), brute.end()));
      CHECK(std::is_sorted(words.begin(), words.end()));
    }
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) CHECK(enumerate_shuffle(m, n).size() == oracle::interleaving_count(m, n));
  CHECK(shuffle_count(4, 4) == 1921);
}

TEST_CASE("restriction") {
  CHECK(restriction(W("x1.y1.x2.x3.y3"), W("x3.y1.x4")).str() == "y1.x3");
  const auto u = W("x1.y2.x3");
  CHECK(restriction(u, u) == u);
  CHECK(restriction(u, ShuffleWord()).empty());
  for (auto& a : enumerate_shuffle(2, 2))
    for (auto& b : enumerate_shuffle(2, 2)) CHECK(restriction(restriction(a, b), b) == restriction(a, b));
}

TEST_CASE("inversion sets") {
  CHECK(W("y1.x1.x2").inversions().str() == "{(x1,y1),(x2,y1)}");
  CHECK(W("x1.x2.y1").inversions().empty());
  CHECK(W("x1.y1.x2").inversions().str() == "{(x2,y1)}");
  for (auto& w : enumerate_shuffle(3, 3)) {
    std::set<std::pair<int, int>> ours;
    for (auto p : w.inversions().pairs()) ours.insert(p);
    CHECK(ours == oracle::inversion_pairs(w.letters()));
  }
}

TEST_CASE("y_fill") {
  // Missing y2, y4, y6 go right before y3, before y5, and at the end.
  CHECK(y_fill(W("x2.x3.y1.y3.x4.y5.x5"), 6).str() == "x2.x3.y1.y2.y3.x4.y4.y5.x5.y6");
  CHECK(y_fill(W("x1.y1.y2"), 2).str() == "x1.y1.y2");
  CHECK(y_fill(ShuffleWord(), 2).str() == "y1.y2");
  for (auto& u : enumerate_shuffle(3, 3)) {
    const auto f = y_fill(u, 3);
    CHECK(restriction(f, 0, ~Word64{0}) == y_word(3));
    CHECK(restriction(f, u) == u);
  }
}

TEST_CASE("x_fill and dualize") {
  CHECK(x_fill(ShuffleWord(), 2).str() == "x1.x2");
  CHECK(x_fill(W("y1.x1.x2"), 2).str() == "y1.x1.x2");
  CHECK(dualize(W("x1.y1.x2")).str() == "y1.x1.y2");
  CHECK(dualize(ShuffleWord()).empty());
  for (auto& u : enumerate_shuffle(3, 2)) {
    CHECK(dualize(dualize(u)) == u);
    CHECK(dualize(x_fill(u, 3)) == y_fill(dualize(u), 3));
    // Inv of the dual is the complement of Inv(u) on the transposed support.
    const auto d = dualize(u);
    for (int s = 1; s <= 2; ++s)
      for (int t = 1; t <= 3; ++t)
        if (d.contains(Letter::x(s)) && d.contains(Letter::y(t)))
          CHECK(d.inversions().contains(s, t) == !u.inversions().contains(t, s));
  }
}

TEST_CASE("word_from_profile") {
  SupportProfile p;
  p.xsupp = index_bit(4) | index_bit(5);
  p.ysupp = index_bit(1) | index_bit(3) | index_bit(4) | index_bit(5);
  for (auto [s, t] : {std::pair{4, 1}, {4, 3}, {5, 1}, {5, 3}, {5, 4}}) p.inv.insert(s, t);
  CHECK(word_from_profile(p).str() == "y1.y3.x4.y4.x5.y5");

  SupportProfile q{index_bit(1) | index_bit(2), 0, {}};
  CHECK(word_from_profile(q).str() == "x1.x2");

  // y2 inverted with x1 but y1 not: no word on {x1,y1,y2} has that.
  SupportProfile bad{index_bit(1), index_bit(1) | index_bit(2), {}};
  bad.inv.insert(1, 2);
  CHECK_FALSE(is_realizable(bad));
  bool found = false;
  for (auto& w : enumerate_shuffle(1, 2))
    if (w.x_support() == bad.xsupp && w.y_support() == bad.ysupp && w.inversions() == bad.inv) found = true;
  CHECK_FALSE(found);
  CHECK_THROWS_AS(word_from_profile(bad), Error);

  for (int m = 0; m <= 7; ++m)
    for (int n = 0; m + n <= 7; ++n)
      for (auto& u : enumerate_shuffle(m, n)) {
        CHECK(is_realizable(profile(u)));
        CHECK(word_from_profile(profile(u)) == u);
      }
}

TEST_CASE("realizability agrees with exhaustive search on small supports") {
  // Every inversion set on a 2x2 support, realizable iff some word has it.
  const Word64 xs = index_bit(1) | index_bit(2), ys = index_bit(1) | index_bit(2);
  std::set<std::vector<std::pair<int, int>>> realized;
  for (auto& w : enumerate_shuffle(2, 2))
    if (w.x_support() == xs && w.y_support() == ys) realized.insert(w.inversions().pairs());
  for (int mask = 0; mask < 16; ++mask) {
    SupportProfile p{xs, ys, {}};
    for (int b = 0; b < 4; ++b)
      if (mask & (1 << b)) p.inv.insert(b / 2 + 1, b % 2 + 1);
    CHECK(is_realizable(p) == realized.contains(p.inv.pairs()));
  }
}
