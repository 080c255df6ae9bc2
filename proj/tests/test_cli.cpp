#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "henselab/expr_io.hpp"
#include "henselab/scenario.hpp"
#include "helpers.hpp"

using namespace henselab;
using henselab::testing::reset_lab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(HENSELAB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_SUITE("cli-runner") {

TEST_CASE("expression parsing round trips") {
  reset_lab(3);
  CHECK(parse_elem("t").str() == "t");
  CHECK(parse_elem("(1+t)/t^2").str() == "(t + 1)/(t^2)");
  CHECK(parse_elem("-3/2").str() == "-3/2");
  CHECK(parse_elem("e1*e2 - t^3/6").str() == parse_elem("(6*e1*e2 - t^3)/6").str());
  CHECK(parse_elem("2^3").str() == "8");
  CHECK_THROWS_AS(parse_elem("t +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_elem("e9"), std::invalid_argument);  // unregistered
  CHECK_THROWS_AS(parse_elem("(1+t"), std::invalid_argument);
  CHECK_THROWS_AS(parse_elem("1/0"), std::domain_error);
}

TEST_CASE("gt-verify scenario shape") {
  Report r = run_scenario_text(
      R"({"kind":"gt-verify","d_max":3,"derivations":[1],"samples":10,"seed":7})");
  CHECK(r.all_pass());
  CHECK(r.verdicts.size() == 4);  // one verdict per degree
  for (const auto& v : r.verdicts) CHECK(v.id.rfind("gt d=", 0) == 0);
  CHECK(exit_code_for(r) == 0);
}

TEST_CASE("axioms scenario") {
  Report r = run_scenario_text(R"({"kind":"axioms","basis":"t-adic-balls","samples":10})");
  CHECK(r.all_pass());
  CHECK(r.verdicts.size() == 5);

  Report broken = run_scenario_text(R"({"kind":"axioms","basis":"singleton-ball"})");
  CHECK_FALSE(broken.all_pass());
  CHECK(exit_code_for(broken) == 1);
}

TEST_CASE("witness scenarios") {
  Report cont = run_scenario_text(
      R"({"kind":"witness","witness":"continuity","derivations":[1,2],"N_max":4})");
  CHECK(cont.all_pass());
  CHECK(cont.verdicts.size() == 8);

  Report nd = run_scenario_text(
      R"({"kind":"witness","witness":"nondiscreteness","derivations":[1,2],"radius_max":5})");
  CHECK(nd.all_pass());
  CHECK(nd.verdicts.size() == 6);

  Report dt = run_scenario_text(
      R"({"kind":"witness","witness":"dense-tuple","derivations":[1],)"
      R"("targets":[{"center":"e1","radius":3},{"center":"1","radius":3}]})");
  CHECK(dt.all_pass());

  Report en = run_scenario_text(
      R"({"kind":"witness","witness":"enumerator","center":"e1","radius":2,"count":2})");
  CHECK(en.all_pass());

  Report dich = run_scenario_text(
      R"({"kind":"witness","witness":"loc-bounded-dichotomy","max_k":2})");
  CHECK(dich.all_pass());
}

TEST_CASE("boundedness scenario") {
  Report r = run_scenario_text(
      R"({"kind":"boundedness","pairs":[{"x_center":"0","x_radius":0,"u_radius":5},)"
      R"({"x_center":"1","x_radius":0,"u_radius":3}],"samples":10})");
  CHECK(r.all_pass());
  CHECK(r.verdicts.size() == 4);  // scaling witness + inverse-complement ball per pair
}

TEST_CASE("incomparable scenario, small") {
  Report r = run_scenario_text(
      R"({"kind":"incomparable","m":2,"samples":5,"seed":7,"query_radii":[1,2],)"
      R"("base_points":2,"d_max":1})");
  CHECK(r.all_pass());
}

TEST_CASE("malformed scenarios name the offending field") {
  CHECK_THROWS_WITH_AS(run_scenario_text("not json"),
                       doctest::Contains("not valid JSON"), ScenarioError);
  CHECK_THROWS_WITH_AS(run_scenario_text("{}"), doctest::Contains("'kind'"), ScenarioError);
  CHECK_THROWS_WITH_AS(run_scenario_text(R"({"kind":"nope"})"), doctest::Contains("'kind'"),
                       ScenarioError);
  CHECK_THROWS_WITH_AS(run_scenario_text(R"({"kind":"gt-verify","d_max":"three"})"),
                       doctest::Contains("'d_max'"), ScenarioError);
  CHECK_THROWS_WITH_AS(run_scenario_text(R"({"kind":"gt-verify","derivations":[0]})"),
                       doctest::Contains("'derivations'"), ScenarioError);
  CHECK_THROWS_WITH_AS(
      run_scenario_text(R"({"kind":"witness","witness":"dense-tuple","targets":[]})"),
      doctest::Contains("'targets'"), ScenarioError);
}

TEST_CASE("reports are byte-identical per seed") {
  std::string scenario =
      R"({"name":"det","kind":"gt-verify","d_max":1,"derivations":[1],"samples":5,"seed":3})";
  std::string first = report_to_json(run_scenario_text(scenario));
  std::string second = report_to_json(run_scenario_text(scenario));
  CHECK(first == second);

  // different seed changes the sampled witnesses but stays deterministic
  RunOverrides o;
  o.seed = 4;
  std::string third = report_to_json(run_scenario_text(scenario, o));
  CHECK(third == report_to_json(run_scenario_text(scenario, o)));
}

TEST_CASE("cli binary: exit codes and determinism") {
  std::string dir = "/tmp/henselab_cli_test";
  std::system(("mkdir -p " + dir).c_str());
  std::string scenario_path = dir + "/s.json";
  write_file(scenario_path,
             R"({"kind":"gt-verify","d_max":1,"derivations":[1],"samples":5,"seed":7})");

  CHECK(run_cli("verify --scenario " + scenario_path + " --out " + dir + "/a.json") == 0);
  CHECK(run_cli("verify --scenario " + scenario_path + " --out " + dir + "/b.json") == 0);
  CHECK(slurp(dir + "/a.json") == slurp(dir + "/b.json"));

  // subcommand / kind mismatch
  CHECK(run_cli("axioms --scenario " + scenario_path) == 2);
  // malformed input
  write_file(dir + "/bad.json", "{");
  CHECK(run_cli("verify --scenario " + dir + "/bad.json") == 2);
  CHECK(run_cli("verify --scenario " + dir + "/missing.json") == 2);

  // a failing family exits 1
  write_file(dir + "/broken.json", R"({"kind":"axioms","basis":"singleton-ball"})");
  CHECK(run_cli("axioms --scenario " + dir + "/broken.json --out " + dir + "/broken_report.json") == 1);

  // report-diff: identical then different
  CHECK(run_cli("report-diff " + dir + "/a.json " + dir + "/b.json") == 0);
  CHECK(run_cli("report-diff " + dir + "/a.json " + dir + "/broken_report.json") == 1);
}

TEST_CASE("bundled scenario files run clean") {
  std::string dir = HENSELAB_SCENARIO_DIR;
  for (const char* name : {"axioms_tadic.json", "witness_continuity.json",
                           "boundedness_pairs.json", "dense_tuple.json"}) {
    Report r = run_scenario_file(dir + "/" + name);
    CHECK(r.all_pass());
  }
  Report broken = run_scenario_file(dir + "/axioms_singleton.json");
  CHECK_FALSE(broken.all_pass());
}

}  // TEST_SUITE
