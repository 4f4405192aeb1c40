#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "partcat/cli/commands.hpp"
#include "partcat/errors.hpp"
#include "partcat/polytope.hpp"
#include "partcat/transform.hpp"
#include "support.hpp"

using namespace partcat;
using namespace partcat::cli;
using partcat::testing::R;
using partcat::testing::V;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  Run r = run(std::move(args));
  INFO(r.err);
  return json::parse(r.out);
}

// Collects every {"exact": "p/q"} string in a document.
void collect_exact(const json& j, std::vector<std::string>& out) {
  if (j.is_object()) {
    if (j.contains("exact") && j["exact"].is_string()) out.push_back(j["exact"]);
    for (const auto& [k, v] : j.items()) collect_exact(v, out);
  } else if (j.is_array()) {
    for (const auto& v : j) collect_exact(v, out);
  }
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

const GlobalOptions kOpt{};

}  // namespace

TEST_CASE("vector text format") {
  auto v = parse_vector_text("# label: psi1\n0.6\n1/5  # second\n\n0.2\n");
  CHECK(v.vec == V({"0.6", "0.2", "0.2"}));
  REQUIRE(v.label);
  CHECK(*v.label == "psi1");
  CHECK(parse_inline_vector("3/5, 1/5, 1/5").vec == V({"0.6", "0.2", "0.2"}));
  CHECK_THROWS_AS(parse_vector_text("# nothing here\n"), ParseError);
  CHECK_THROWS_AS(parse_inline_vector("0.5,-0.5,1"), ParseError);
  CHECK_THROWS_AS(parse_inline_vector("0.5,abc"), ParseError);
}

TEST_CASE("load_vector normalization") {
  CHECK_THROWS_AS(load_vector("0.6,0.2", false), ParseError);
  CHECK(load_vector("3,1,1", true).vec == V({"0.6", "0.2", "0.2"}));
  CHECK(load_vector("0.5,0.5", false).source == "inline");

  auto path = std::filesystem::temp_directory_path() / "partcat_test_vector.txt";
  {
    std::ofstream f(path);
    f << "# label: target\n0.5\n0.4\n0.1\n";
  }
  auto v = load_vector(path.string(), false);
  CHECK(v.vec == V({"0.5", "0.4", "0.1"}));
  CHECK(v.source == path.string());
  std::filesystem::remove(path);
}

TEST_CASE("report rationals round-trip") {
  json j = rational_json(R("122/135"), 6);
  CHECK(j["exact"] == "122/135");
  CHECK(j["decimal"] == "0.903704");
  CHECK(j["decimal_exact"] == false);
  CHECK(rational_json(R("4/5"), 3)["decimal_exact"] == true);
  CHECK(rational_from_json(j) == R("122/135"));
  CHECK(rational_from_json(json("7/20")) == R("7/20"));
  CHECK(ratio_json(std::nullopt, 6)["exact"] == "inf");
  ProbVec c = V({"13/20", "7/20"});
  CHECK(vector_from_json(vector_json(c, 4)) == c);
  CHECK(digest(c) == digest(V({"0.65", "0.35"})));
  CHECK(digest(c) != digest(V({"0.35", "0.65"})));
  CHECK(digest(c).rfind("fnv1a64:", 0) == 0);
}

TEST_CASE("prob command") {
  json a = run_json({"prob", "0.6,0.2,0.2", "0.5,0.4,0.1"});
  CHECK(a["format"] == "partcat-report/1");
  CHECK(a["command"] == "prob");
  CHECK(a["result"]["p"]["exact"] == "4/5");
  CHECK(a["result"]["critical_set"] == json({2}));
  CHECK(a["result"]["partial_catalyst_exists"] == true);
  CHECK(a["result"]["last_ratio"]["exact"] == "2/1");

  json b = run_json({"prob", "0.5,0.3,0.2", "0.5,0.3,0.2"});
  CHECK(b["result"]["p"]["exact"] == "1/1");
  CHECK(b["result"]["partial_catalyst_exists"] == false);
  CHECK(b["result"]["deterministic"] == true);

  json c = run_json({"prob", "0.6,0.2,0.2", "0.5,0.3,0.2"});
  CHECK(c["result"]["p"]["exact"] == "4/5");
  CHECK(c["result"]["critical_set"] == json({2}));
  CHECK(c["result"]["partial_catalyst_exists"] == true);

  // inputs are echoed sorted
  json d = run_json({"prob", "0.2,0.6,0.2", "0.1,0.4,0.5"});
  CHECK(d["inputs"]["x"]["sorted"]["exact"] == json({"3/5", "1/5", "1/5"}));
  CHECK(d["result"]["p"]["exact"] == "4/5");
}

TEST_CASE("check command") {
  Run ok = run({"check", "0.6,0.2,0.2", "0.5,0.4,0.1", "0.65,0.35"});
  CHECK(ok.code == 0);
  json j = json::parse(ok.out);
  CHECK(j["result"]["is_partial"] == true);
  CHECK(j["result"]["p_with"]["exact"] == "122/135");
  CHECK(j["result"]["combinatorial"]["agrees"] == true);

  Run uni = run({"check", "0.6,0.2,0.2", "0.5,0.4,0.1", "0.5,0.5"});
  CHECK(uni.code == 1);
  json u = json::parse(uni.out);
  CHECK(u["result"]["is_partial"] == false);
  CHECK(u["result"]["combinatorial"]["blocking_tuple"].is_array());

  CHECK(run({"check", "0.6,0.2,0.2", "0.5,0.4,0.1", "1,0"}).code == 2);
}

TEST_CASE("find command") {
  json a = run_json({"find", "0.6,0.2,0.2", "0.5,0.4,0.1", "--min-dim"});
  CHECK(a["result"]["dimension"] == 2);
  ProbVec w = vector_from_json(a["result"]["witness"]["catalyst"]);
  Rat rho = w[1] / w[0];
  CHECK(rho > R("1/4"));
  CHECK(rho < R("4/5"));

  Run none = run({"find", "0.6,0.2,0.2", "0.5,0.3,0.2", "--k", "2"});
  CHECK(none.code == 1);
  CHECK(json::parse(none.out)["result"]["exists"] == false);

  json b = run_json({"find", "0.6,0.2,0.2", "0.5,0.3,0.2", "--min-dim"});
  CHECK(b["result"]["dimension"] == 3);
  CHECK(rational_from_json(b["result"]["witness"]["p_with"]) > R("4/5"));

  json g = run_json({"find", "0.6,0.2,0.2", "0.5,0.4,0.1", "--grid", "20"});
  CHECK(g["result"]["catalysts"].size() == 4);

  CHECK(run({"find", "0.5,0.3,0.2", "0.5,0.3,0.2"}).code == 1);
}

TEST_CASE("set command") {
  Run eq = run({"set", "0.5,0.25,0.25", "--lambda", "0.5", "--op", "equals-s"});
  CHECK(eq.code == 0);
  CHECK(json::parse(eq.out)["result"]["equals"] == true);

  Run neq = run({"set", "0.5,0.4,0.1", "--lambda", "0.5", "--op", "equals-s"});
  CHECK(neq.code == 1);
  ProbVec sep = vector_from_json(json::parse(neq.out)["result"]["separating_witness"]);
  CHECK(max_prob(sep, V({"0.5", "0.4", "0.1"})) == R("1/2"));

  json ext = run_json({"set", "0.5,0.4,0.1", "--lambda", "0.5", "--op", "extremes"});
  CHECK(ext["result"]["count"] == 6);

  json bd = run_json({"set", "0.5,0.4,0.1", "--lambda", "0.5", "--op", "boundary", "--x", "0.75,0.2,0.05", "--c", "1"});
  CHECK(bd["result"]["classification"] == "boundary");

  CHECK(run({"set", "0.5,0.4,0.1", "--lambda", "0.5", "--op", "boundary", "--x", "0.75,0.2,0.05"}).code == 2);

  Run mem = run({"set", "0.5,0.4,0.1", "--lambda", "0.9", "--op", "membership", "--x", "0.6,0.2,0.2", "--grid", "20"});
  CHECK(mem.code == 0);
  json m = json::parse(mem.out);
  CHECK(m["result"]["status"] == "member_with_certificate");
  CHECK(m["result"]["s_member"] == false);
  CHECK(m["result"]["p_with"]["exact"] == "122/135");

  Run unk = run({"set", "0.5,0.4,0.1", "--lambda", "0.99", "--op", "membership", "--x", "0.6,0.2,0.2", "--grid", "20"});
  CHECK(unk.code == 1);
  CHECK(json::parse(unk.out)["result"]["status"] == "unknown_at_resolution");
}

TEST_CASE("usage and parse errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"prob", "0.6,0.2,0.2"}).code == 2);
  CHECK(run({"prob", "0.6,0.2", "0.5,0.5"}).code == 2);
  CHECK(run({"prob", "a,b", "0.5,0.5"}).code == 2);
  CHECK(run({"--digits", "-1", "prob", "1", "1"}).code == 2);
  CHECK(run({"set", "0.5,0.4,0.1", "--lambda", "0.5", "--op", "nope"}).code == 2);
  CHECK(run({"simplex", "0.5,0.5", "--lambda", "0.5"}).code == 2);
  CHECK(run({"simplex", "0.5,0.4,0.1", "--lambda", "0.5", "--resolution", "5"}).code == 2);
  CHECK(run({"--unnormalized", "prob", "6,2,2", "5,4,1"}).code == 0);
  CHECK(run({"--quiet", "check", "0.6,0.2,0.2", "0.5,0.4,0.1", "0.5,0.5"}).out.empty());
}

TEST_CASE("every exact field in a report re-parses") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"prob", "0.6,0.2,0.2", "0.5,0.4,0.1"},
           {"check", "0.6,0.2,0.2", "0.5,0.4,0.1", "0.65,0.35"},
           {"find", "0.6,0.2,0.2", "0.5,0.3,0.2", "--min-dim"},
           {"set", "0.5,0.4,0.1", "--lambda", "0.5", "--op", "extremes"}}) {
    json doc = run_json(args);
    std::vector<std::string> exact;
    collect_exact(doc, exact);
    CHECK_FALSE(exact.empty());
    for (const std::string& s : exact) {
      if (s == "inf") continue;
      Rat r = parse_rat(s);
      CHECK(to_fraction_string(r) == s);
    }
  }
}

TEST_CASE("simplex output") {
  ProbVec y = V({"0.5", "0.4", "0.1"});
  VectorInput yin{y, std::nullopt, "inline"};

  auto zero = csv_rows(cmd_simplex(yin, SimplexArgs{0, 10, "S", 2, 24}, kOpt).table);
  CHECK(zero.front() == std::vector<std::string>{"x1", "x2", "x3", "s_member"});
  CHECK(zero.size() == 1 + 66);
  for (std::size_t i = 1; i < zero.size(); ++i) CHECK(zero[i][3] == "1");

  auto s_rows = csv_rows(cmd_simplex(yin, SimplexArgs{R("4/5"), 50, "S", 2, 24}, kOpt).table);
  auto hull = s_extreme_points(y, R("4/5"));
  CHECK(hull.size() == 6);
  int members = 0;
  for (std::size_t i = 1; i < s_rows.size(); ++i) {
    ProbVec x{parse_rat(s_rows[i][0]), parse_rat(s_rows[i][1]), parse_rat(s_rows[i][2])};
    bool in_hull = convex_combination_weights(x, hull).has_value();
    CHECK((s_rows[i][3] == "1") == in_hull);
    members += s_rows[i][3] == "1";
  }
  CHECK(members > 0);

  auto t_rows = csv_rows(cmd_simplex(yin, SimplexArgs{R("9/10"), 20, "Tk", 2, 20}, kOpt).table);
  CHECK(t_rows.front().back() == "tk_member");
  int extra = 0;
  for (std::size_t i = 1; i < t_rows.size(); ++i) {
    if (t_rows[i][3] == "1") CHECK(t_rows[i][4] == "1");
    extra += t_rows[i][3] == "0" && t_rows[i][4] == "1";
  }
  CHECK(extra > 0);

  // rows come in lexicographic order of the coordinates
  std::vector<std::pair<Rat, Rat>> keys;
  for (std::size_t i = 1; i < s_rows.size(); ++i) keys.emplace_back(parse_rat(s_rows[i][0]), parse_rat(s_rows[i][1]));
  CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("props command is clean") {
  GlobalOptions opt;
  opt.seed = 7;
  auto out = cmd_props(300, opt);
  CHECK(out.exit_code == 0);
  CHECK(out.report["result"]["all_hold"] == true);
}
