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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bubble/error.hpp"
#include "bubble/export.hpp"
#include "bubble/galois.hpp"
#include "bubble/hochschild.hpp"
#include "bubble/labeling.hpp"
#include "bubble/suites.hpp"

namespace bubble::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  int m = 0;
  int n = 0;
  std::vector<std::string> suites;
  bool dot = false;
  bool csv = false;
  bool json = false;
  std::uint64_t cap = kDefaultCap;
  bool allow_large = false;
  bool parallel = false;
  bool timing = false;
};

std::filesystem::path out_dir() {
  const char* env = std::getenv("BUBBLE_OUT_DIR");
  return env && *env ? std::filesystem::path(env) : std::filesystem::current_path();
}

std::string tag(int m, int n) { return std::to_string(m) + "_" + std::to_string(n); }

void write_file(const std::string& name, const std::string& body, std::ostream& out) {
  const auto dir = out_dir();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = dir / name;
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << body)) throw Error(Errc::kIo, "cannot write " + path.string());
  out << "wrote " << name << "\n";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json report_header(std::string_view command, const Options& o) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["m"] = o.m;
  j["n"] = o.n;
  return j;
}

const char* status(const CheckResult& c) { return c.skipped ? "skip" : c.ok ? "pass" : "fail"; }

Json check_json(const CheckResult& c, bool timing) {
  Json j;
  j["id"] = c.id;
  j["status"] = status(c);
  j["detail"] = c.detail;
  if (timing) j["seconds"] = c.seconds;
  return j;
}

void print_check(const CheckResult& c, bool timing, std::ostream& out) {
  out << (c.skipped ? "SKIP " : c.ok ? "PASS " : "FAIL ") << c.id;
  if (!c.detail.empty()) out << "  " << c.detail;
  if (timing) out << "  [" << c.seconds << " s]";
  out << "\n";
}

// Prints and collects a list of checks; returns the exit code.
int finish(Json report, const std::vector<CheckResult>& checks, const Options& o, const std::string& file,
           std::ostream& out) {
  Json arr = Json::array(), violations = Json::array();
  for (const auto& c : checks) {
    print_check(c, o.timing, out);
    arr.push_back(check_json(c, o.timing));
    if (!c.ok) violations.push_back(c.id);
  }
  out << "violations: " << violations.size() << "\n";
  report["checks"] = arr;
  report["violations"] = violations;
  report["ok"] = violations.empty();
  if (o.json) write_file(file, dump(report), out);
  return violations.empty() ? kOk : kViolations;
}

std::vector<Suite> selected_suites(const Options& o) {
  std::vector<Suite> out;
  for (const auto& item : o.suites) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name == "all") return all_suites();
      auto s = parse_suite(name);
      if (!s) throw CLI::ValidationError("--suite", "unknown suite '" + name + "'");
      if (std::find(out.begin(), out.end(), *s) == out.end()) out.push_back(*s);
    }
  }
  return out.empty() ? all_suites() : out;
}

Json inversions_json(const ShuffleWord& w) {
  Json arr = Json::array();
  for (auto [s, t] : w.inversions().pairs()) arr.push_back({s, t});
  return arr;
}

int cmd_generate(const Options& o, std::ostream& out) {
  check_cap(o.m, o.n, o.cap);
  auto bub = build_bubble_lattice(o.m, o.n, o.cap, o.parallel);
  if (!o.dot && !o.csv && !o.json) {
    out << element_table_csv(bub);
    return kOk;
  }
  auto word = [&](Element e) { return bub.word(e).str(); };
  if (o.csv) write_file("bub_" + tag(o.m, o.n) + ".csv", element_table_csv(bub), out);
  if (o.dot) {
    std::vector<std::string> labels;
    for (auto e : bub.hasse.edges()) labels.push_back(to_string(lambda_bubble(bub.word(e.lower), bub.word(e.upper), o.n)));
    write_file("bub_" + tag(o.m, o.n) + ".dot",
               hasse_dot(bub.hasse, "Bub(" + std::to_string(o.m) + "," + std::to_string(o.n) + ")", word, labels), out);
    auto shuf = build_shuffle_poset(o.m, o.n, o.cap);
    write_file("shuf_" + tag(o.m, o.n) + ".dot",
               hasse_dot(shuf.hasse, "Shuf(" + std::to_string(o.m) + "," + std::to_string(o.n) + ")",
                         [&](Element e) { return shuf.word(e).str(); }),
               out);
  }
  if (o.json) {
    Json j = report_header("generate", o);
    Json elems = Json::array(), covers = Json::array();
    for (Element e = 0; e < bub.size(); ++e) elems.push_back({{"id", e}, {"word", word(e)}, {"inversions", inversions_json(bub.word(e))}});
    for (auto e : bub.hasse.edges()) {
      auto kind = cover_kind(bub.word(e.lower), bub.word(e.upper), o.n);
      covers.push_back({{"lower", e.lower},
                        {"upper", e.upper},
                        {"kind", kind ? to_string(*kind) : std::string("?")},
                        {"label", to_string(lambda_bubble(bub.word(e.lower), bub.word(e.upper), o.n))}});
    }
    j["elements"] = elems;
    j["covers"] = covers;
    write_file("bub_" + tag(o.m, o.n) + ".json", dump(j), out);
  }
  return kOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  RunConfig cfg{o.m, o.n, selected_suites(o), o.cap, o.parallel};
  auto results = run_suites(cfg);
  Json report = report_header("check", o);
  Json suites = Json::array();
  std::vector<CheckResult> all;
  for (const auto& r : results) {
    Json s;
    s["name"] = suite_name(r.suite);
    s["ok"] = r.ok();
    if (o.timing) s["seconds"] = r.seconds;
    suites.push_back(s);
    all.insert(all.end(), r.checks.begin(), r.checks.end());
  }
  report["suites"] = suites;
  return finish(report, all, o, "check_" + tag(o.m, o.n) + ".json", out);
}

int cmd_galois(const Options& o, std::ostream& out) {
  check_cap(o.m, o.n, o.cap);
  if (o.m * o.n + o.m + o.n > 64) throw Error(Errc::kCapExceeded, "more than 64 irreducibles");
  auto f = build_bubble_lattice(o.m, o.n, o.cap, o.parallel);
  auto l = Lattice::from_poset(f.hasse);
  std::vector<Element> chain;
  for (const auto& w : extremal_chain(o.m, o.n)) chain.push_back(f.id(w));
  auto ord = order_irreducibles(*l, chain);
  auto s = build_label_poset(o.m, o.n);
  auto generic = relabel_by_bubble_labels(f, ord, galois_graph(*l, ord), s);
  auto expl = bubble_galois_explicit(o.m, o.n);
  out << "vertices: " << generic.size() << ", arcs: " << generic.arc_count() << " computed, " << expl.arc_count()
      << " explicit\n";

  RunConfig cfg{o.m, o.n, {Suite::kGalois}, o.cap, false};
  auto checks = run_suites(cfg).front().checks;
  const std::string name = "galois_" + tag(o.m, o.n);
  if (o.dot) {
    write_file(name + ".dot", galois_dot(generic, "computed"), out);
    write_file(name + "_explicit.dot", galois_dot(expl, "explicit"), out);
  }
  Json report = report_header("galois", o);
  if (o.json) {
    auto arcs = [](const GaloisGraph& g) {
      Json a = Json::array();
      for (std::size_t x = 0; x < g.size(); ++x)
        for (std::size_t y = 0; y < g.size(); ++y)
          if (g.arc(x, y)) a.push_back({g.names[x], g.names[y]});
      return a;
    };
    report["vertices"] = generic.names;
    report["computed_arcs"] = arcs(generic);
    report["explicit_arcs"] = arcs(expl);
    Json pairs = Json::array();
    auto mop = max_orthogonal_pairs(generic);
    for (std::size_t i = 0; i < mop.first.size(); ++i) {
      Json a = Json::array(), b = Json::array();
      for (std::size_t v = 0; v < generic.size(); ++v) {
        if (mop.first[i] >> v & 1) a.push_back(generic.names[v]);
        if (mop.second[i] >> v & 1) b.push_back(generic.names[v]);
      }
      pairs.push_back({a, b});
    }
    report["orthogonal_pairs"] = pairs;
  }
  return finish(report, checks, o, name + ".json", out);
}

int cmd_hochschild(const Options& o, std::ostream& out) {
  if (o.n < 1) throw CLI::ValidationError("n", "must be at least 1");
  check_cap(o.n - 1, 1, o.cap);
  auto rep = verify_hochschild_iso(o.n, o.cap);
  CheckResult c;
  c.id = "hochschild.isomorphism";
  c.ok = rep.ok();
  c.detail = std::to_string(rep.words) + " words, " + std::to_string(rep.triwords) + " triwords";
  for (const auto& v : rep.violations) c.detail += "; " + v;
  Options shown = o;
  shown.m = o.n - 1;
  Json report = report_header("hochschild", shown);
  report["table"] = Json::array();
  for (const auto& w : enumerate_shuffle(o.n - 1, 1))
    report["table"].push_back({w.str(), sigma_tilde(w, o.n).str()});
  if (o.csv)
    write_file("sigma_" + std::to_string(o.n) + ".csv", sigma_table_csv(o.n), out);
  else
    out << sigma_table_csv(o.n);
  return finish(report, {c}, o, "hochschild_" + std::to_string(o.n) + ".json", out);
}

int cmd_label(const Options& o, std::ostream& out) {
  check_cap(o.m, o.n, o.cap);
  auto f = build_bubble_lattice(o.m, o.n, o.cap, o.parallel);
  auto l = Lattice::from_poset(f.hasse);
  auto s = build_label_poset(o.m, o.n);
  auto labels = bubble_edge_labels(f, s);
  const auto& edges = f.hasse.edges();
  std::string csv = "lower,upper,label\n";
  std::vector<std::string> names;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    names.push_back(to_string(s.label(labels[i])));
    csv += csv_field(f.word(edges[i].lower).str()) + "," + csv_field(f.word(edges[i].upper).str()) + "," +
           csv_field(names.back()) + "\n";
  }
  if (o.csv) write_file("labels_" + tag(o.m, o.n) + ".csv", csv, out);
  if (o.dot) {
    write_file("labels_" + tag(o.m, o.n) + ".dot",
               hasse_dot(f.hasse, "Bub(" + std::to_string(o.m) + "," + std::to_string(o.n) + ")",
                         [&](Element e) { return f.word(e).str(); }, names),
               out);
    write_file("label_poset_" + tag(o.m, o.n) + ".dot",
               hasse_dot(s.order(), "S(" + std::to_string(o.m) + "," + std::to_string(o.n) + ")",
                         [&](Element e) { return to_string(s.label(e)); }),
               out);
  }
  if (!o.csv && !o.dot) out << csv;

  auto cu = verify_cu_labeling(*l, labels, s.order());
  Json report = report_header("label", o);
  Json vs = Json::array();
  for (const auto& v : cu.violations) {
    Json w = Json::array();
    for (Element e : v.witness) w.push_back(e);
    vs.push_back({{"condition", "CU" + std::to_string(v.condition)}, {"detail", v.detail}, {"witness", w}});
  }
  report["polygons"] = cu.polygons;
  report["cu_violations"] = vs;
  CheckResult c1{"labeling.cu", cu.ok(), false, std::to_string(cu.polygons) + " polygons", 0};
  CheckResult c2{"labeling.jsd_fibers", check_cu_equals_jsd(*l, labels), false, "", 0};
  return finish(report, {c1, c2}, o, "labels_" + tag(o.m, o.n) + ".json", out);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bubble and shuffle lattices"};
  app.require_subcommand(1);
  Options o;
  std::string cap_text;

  auto common = [&](CLI::App* sub, bool pair) {
    if (pair) {
      sub->add_option("m,--m", o.m, "size of the X alphabet")->check(CLI::Range(0, 63));
      sub->add_option("n,--n", o.n, "size of the Y alphabet")->check(CLI::Range(0, 63));
    } else {
      sub->add_option("n,--n", o.n, "triword length")->required()->check(CLI::Range(1, 63));
    }
    sub->add_flag("--dot", o.dot, "write Graphviz files");
    sub->add_flag("--csv", o.csv, "write CSV tables");
    sub->add_flag("--json", o.json, "write a JSON report");
    sub->add_option("--cap", o.cap, "refuse families larger than this")->check(CLI::PositiveNumber);
    sub->add_flag("--allow-large", o.allow_large, "acknowledge a cap above the default");
    sub->add_flag("--parallel", o.parallel, "use OpenMP where available");
    sub->add_flag("--timing", o.timing, "include timings in reports");
  };
  auto* gen = app.add_subcommand("generate", "element table and Hasse diagrams");
  auto* check = app.add_subcommand("check", "run verification suites");
  auto* gal = app.add_subcommand("galois", "Galois graphs");
  auto* hoch = app.add_subcommand("hochschild", "sigma table and isomorphism check");
  auto* lab = app.add_subcommand("label", "edge labeling and its verification");
  for (auto* sub : {gen, check, gal, lab}) common(sub, true);
  common(hoch, false);
  check->add_option("--suite", o.suites, "comma-separated suites, or all")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream so, se;
    const int code = app.exit(e, so, se);
    out << so.str();
    err << se.str();
    return code == 0 ? kOk : kUsage;
  }

  if (o.cap > kDefaultCap && !o.allow_large) {
    err << "error: --cap above " << kDefaultCap << " needs --allow-large\n";
    return kUsage;
  }
  try {
    if (*gen) return cmd_generate(o, out);
    if (*check) return cmd_check(o, out);
    if (*gal) return cmd_galois(o, out);
    if (*hoch) return cmd_hochschild(o, out);
    return cmd_label(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace bubble::cli
