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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "bubblelat");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = bubble::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// Fresh output directory for the duration of a test.
struct OutDir {
  fs::path path;
  explicit OutDir(const std::string& name) : path(fs::temp_directory_path() / ("bubblelat_test_" + name)) {
    fs::remove_all(path);
    setenv("BUBBLE_OUT_DIR", path.c_str(), 1);
  }
  ~OutDir() {
    fs::remove_all(path);
    unsetenv("BUBBLE_OUT_DIR");
  }
  std::string read(const std::string& file) const {
    std::ifstream f(path / file, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
  }
};

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST_CASE("generate prints the element table") {
  auto r = run({"generate", "2", "1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "word,inversions\n-,{}\nx1,{}\nx2,{}\ny1,{}\nx1.x2,{}\nx1.y1,{}\nx2.y1,{}\n"
        "y1.x1,\"{(x1,y1)}\"\ny1.x2,\"{(x2,y1)}\"\nx1.x2.y1,{}\nx1.y1.x2,\"{(x2,y1)}\"\n"
        "y1.x1.x2,\"{(x1,y1),(x2,y1)}\"\n");
  CHECK(run({"generate", "--m", "2", "--n", "1"}).out == r.out);
  CHECK(run({"generate", "0", "0"}).out == "word,inversions\n-,{}\n");
}

TEST_CASE("generate writes files") {
  OutDir d("generate");
  auto r = run({"generate", "2", "2", "--dot", "--csv", "--json"});
  REQUIRE(r.code == 0);
  auto dot = d.read("bub_2_2.dot");
  CHECK(count(dot, "[label=") == 33 + 33 * 4 / 2);
  CHECK(count(dot, " -> ") == 66);
  CHECK(count(d.read("shuf_2_2.dot"), "];\n") == 33);
  auto j = nlohmann::json::parse(d.read("bub_2_2.json"));
  CHECK(j["schema"] == 1);
  CHECK(j["elements"].size() == 33);
  CHECK(j["covers"].size() == 66);
  CHECK(count(d.read("bub_2_2.csv"), "\n") == 34);
}

TEST_CASE("check exit codes") {
  CHECK(run({"check", "2", "1", "--suite", "order,lattice"}).code == 0);
  CHECK(run({"check", "1", "0"}).code == 0);
  CHECK(run({"check", "0", "0"}).code == 0);
  auto g = run({"check", "3", "2", "--suite", "galois"});
  CHECK(g.code == 1);
  CHECK(g.out.find("FAIL galois.explicit") != std::string::npos);
  CHECK(run({"check", "2", "1", "--suite", "bogus"}).code == 2);
  CHECK(run({"check"}).code == 0);
}

TEST_CASE("cap handling") {
  auto big = run({"generate", "8", "8"});
  CHECK(big.code == 2);
  CHECK(big.err.find("CapExceeded") != std::string::npos);
  CHECK(run({"generate", "2", "1", "--cap", "100000"}).code == 2);
  CHECK(run({"generate", "2", "1", "--cap", "100000", "--allow-large"}).code == 0);
  CHECK(run({"generate", "3", "3", "--cap", "100"}).code == 2);
}

TEST_CASE("reports are byte-stable and versioned") {
  OutDir d("report");
  // The only violation is the arc direction of the explicit Galois graph.
  REQUIRE(run({"check", "2", "1", "--json"}).code == 1);
  const auto first = d.read("check_2_1.json");
  REQUIRE(run({"check", "2", "1", "--json", "--parallel"}).code == 1);
  CHECK(d.read("check_2_1.json") == first);
  CHECK(first.find("seconds") == std::string::npos);
  auto j = nlohmann::json::parse(first);
  CHECK(j["schema"] == 1);
  CHECK(j["ok"] == false);
  CHECK(j["violations"] == nlohmann::json::array({"galois.explicit"}));
  CHECK(j["suites"].size() == 7);

  REQUIRE(run({"check", "2", "1", "--json", "--timing", "--suite", "order"}).code == 0);
  CHECK(d.read("check_2_1.json").find("seconds") != std::string::npos);
}

TEST_CASE("exit code tracks the violation list") {
  OutDir d("violations");
  auto r = run({"galois", "2", "1", "--json", "--dot"});
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(d.read("galois_2_1.json"));
  CHECK(j["violations"] == nlohmann::json::array({"galois.explicit"}));
  CHECK(j["vertices"].size() == 5);
  CHECK(j["orthogonal_pairs"].size() == 12);
  CHECK(count(d.read("galois_2_1.dot"), " -> ") == 5);
  CHECK(run({"galois", "1", "0"}).code == 0);
}

TEST_CASE("hochschild") {
  auto r = run({"hochschild", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("y1,\"(1,2,2)\"\n") != std::string::npos);
  CHECK(r.out.find("x1.x2,\"(0,0,0)\"\n") != std::string::npos);
  CHECK(run({"hochschild", "1"}).code == 0);
  CHECK(run({"hochschild", "--n", "7"}).code == 0);
  CHECK(run({"hochschild", "0"}).code == 2);
}

TEST_CASE("label") {
  OutDir d("label");
  auto r = run({"label", "2", "1", "--json", "--csv", "--dot"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(d.read("labels_2_1.json"));
  CHECK(j["cu_violations"].empty());
  CHECK(j["polygons"] == 8);
  CHECK(count(d.read("labels_2_1.csv"), "\n") == 19);
  CHECK(count(d.read("label_poset_2_1.dot"), " -> ") == 4);
}
