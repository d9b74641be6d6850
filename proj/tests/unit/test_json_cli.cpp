// Copyright 2026 The Authors.
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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "matroid/errors.hpp"
#include "matroid/family.hpp"
#include "matroid/json_io.hpp"

#include "test_support.hpp"

using matroid::Assignment;
using matroid::AssignmentMode;
using matroid::ElementSet;
using matroid::InputError;
using matroid::Json;
using matroid::MatroidFamily;
using matroid::ParsedInstance;
using matroid::ParseOptions;
using testutil::ground;
using testutil::pick;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(MATROIDKIT_BINARY_DIR) + "/matroidkit " +
                    args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string data_file(const std::string& name) {
  return std::string(MATROIDKIT_DATA_DIR) + "/" + name;
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream out(p);
  out << content;
  return p.string();
}

}  // namespace

TEST_CASE("instances parse for every matroid kind") {
  Json j = Json::parse(R"({
    "elements": ["a", "b", "c"],
    "matroids": [
      {"type": "uniform", "rank": 2},
      {"type": "free"},
      {"type": "zero", "role": "cofinitary"},
      {"type": "graphic", "vertices": ["u", "v"],
       "edges": {"a": ["u", "v"], "b": ["u", "v"], "c": ["v", "v"]}},
      {"type": "partition",
       "blocks": [{"elements": ["a", "b"], "capacity": 1}]},
      {"type": "linear_gf2", "columns": {"a": [1], "b": [1], "c": [0]}},
      {"type": "dual", "inner": {"type": "uniform", "rank": 1}},
      {"type": "looped", "inner": {"type": "free"}, "loops": ["c"]},
      {"type": "minor", "inner_elements": ["a", "b", "c", "x"],
       "inner": {"type": "uniform", "rank": 2},
       "contract": ["x"], "delete": []},
      {"type": "direct_sum", "parts": [
        {"elements": ["a", "b"], "matroid": {"type": "uniform", "rank": 1}},
        {"elements": ["c"], "matroid": {"type": "free"}}
      ]}
    ]
  })");
  ParsedInstance inst = matroid::parse_instance(j);
  CHECK(inst.ground->ids() == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(inst.members.size() == 10);
  CHECK(inst.roles[0] == matroid::MatroidRole::kFinitary);
  CHECK(inst.roles[2] == matroid::MatroidRole::kCofinitary);
  // Stored descriptions drop the role key.
  CHECK_FALSE(inst.matroid_jsons[2].contains("role"));

  CHECK(inst.members[0]->full_rank() == 2);
  CHECK(inst.members[1]->full_rank() == 3);
  CHECK(inst.members[2]->full_rank() == 0);
  CHECK(inst.members[3]->full_rank() == 1);  // parallel edges plus a loop
  CHECK(inst.members[4]->full_rank() == 2);
  CHECK(inst.members[5]->full_rank() == 1);
  CHECK(inst.members[6]->full_rank() == 2);  // dual of a rank-one uniform
  CHECK(inst.members[7]->is_loop(2));
  CHECK(inst.members[8]->full_rank() == 1);  // one of rank two used up
  CHECK(inst.members[9]->full_rank() == 2);

  for (const auto& m : inst.members) {
    CAPTURE(m->describe());
    CHECK(testutil::axiom_violation(*m) == "");
  }
}

TEST_CASE("parse errors carry their location") {
  auto bad = [](const char* text) {
    CHECK_THROWS_AS(matroid::parse_instance(Json::parse(text)), InputError);
  };
  bad(R"({"matroids": []})");                      // missing elements
  bad(R"({"elements": [], "matroids": [], "x": 1})");  // unknown key
  bad(R"({"elements": ["a", "a"], "matroids": []})");  // duplicate id
  bad(R"({"elements": ["a"], "matroids": [{"type": "nope"}]})");
  bad(R"({"elements": ["a"], "matroids": [{"type": "uniform"}]})");
  bad(R"({"elements": ["a"],
          "matroids": [{"type": "uniform", "rank": 9}]})");
  bad(R"({"elements": ["a"],
          "matroids": [{"type": "graphic", "vertices": ["u"],
                        "edges": {"a": ["u"]}}]})");
  bad(R"({"elements": ["a"],
          "matroids": [{"type": "partition",
                        "blocks": [{"elements": ["z"], "capacity": 1}]}]})");
  bad(R"({"elements": ["a"],
          "matroids": [{"type": "dual",
                        "inner": {"type": "free", "role": "finitary"}}]})");
  bad(R"({"elements": ["a"],
          "matroids": [{"type": "uniform", "rank": 1, "extra": true}]})");
}

TEST_CASE("large grounds need an explicit opt-in") {
  Json j;
  Json elements = Json::array();
  for (int i = 0; i < 65; ++i) elements.push_back("x" + std::to_string(i));
  j["elements"] = elements;
  j["matroids"] = Json::array({Json{{"type", "free"}}});
  CHECK_THROWS_AS(matroid::parse_instance(j), InputError);
  ParseOptions wide;
  wide.allow_large = true;
  ParsedInstance inst = matroid::parse_instance(j, wide);
  CHECK(inst.ground->size() == 65);
  CHECK(inst.members[0]->full_rank() == 65);
}

TEST_CASE("sets and assignments round-trip") {
  auto g = ground({"a", "b", "c"});
  ElementSet s = pick(g, {"c", "a"});
  Json sj = matroid::set_to_json(*g, s);
  CHECK(sj.dump() == R"(["a","c"])");  // canonical ground order
  CHECK(matroid::set_from_json(*g, sj) == s);
  CHECK_THROWS_AS(matroid::set_from_json(*g, Json::parse(R"(["z"])")),
                  InputError);

  Json aj = matroid::assignment_to_json(
      *g, AssignmentMode::kPartitioning, {pick(g, {"a", "b"}), pick(g, {"c"})});
  CHECK(aj["mode"] == "partitioning");
  Assignment a = matroid::assignment_from_json(*g, aj, 2);
  CHECK(a.mode == AssignmentMode::kPartitioning);
  CHECK(a.parts[1] == pick(g, {"c"}));
  CHECK_THROWS_AS(matroid::assignment_from_json(*g, aj, 3), InputError);

  CHECK(matroid::mode_from_name("covering") == AssignmentMode::kCovering);
  CHECK(matroid::mode_name(AssignmentMode::kPacking) == "packing");
  CHECK_THROWS_AS(matroid::mode_from_name("partition"), InputError);

  matroid::DualWitness w{pick(g, {"a", "b"}), g->index_of("c")};
  Json wj = matroid::witness_to_json("uncoverable", *g, w);
  CHECK(wj["kind"] == "uncoverable");
  CHECK(wj["X"].dump() == R"(["a","b"])");
  CHECK(wj["element"] == "c");
}

TEST_CASE("relabeling a stored matroid") {
  Json gj = Json::parse(R"({
    "type": "graphic", "vertices": ["u", "v"],
    "edges": {"x": ["u", "v"], "y": ["u", "v"]}
  })");
  Json renamed = matroid::relabel_matroid_json(
      gj, [](const std::string& id) { return id + "!"; });
  CHECK(renamed["edges"].contains("x!"));
  CHECK(renamed["edges"].contains("y!"));
  CHECK_FALSE(renamed["edges"].contains("x"));
  CHECK(renamed["vertices"] == gj["vertices"]);

  // Ids that the rename function leaves alone stay usable: a minor's
  // swallowed elements never appear in the enclosing ground.
  Json mj = Json::parse(R"({
    "type": "minor", "inner_elements": ["x", "y", "z"],
    "inner": {"type": "uniform", "rank": 2},
    "contract": ["z"], "delete": []
  })");
  Json mapped = matroid::relabel_matroid_json(
      mj, [](const std::string& id) {
        return (id == "x" || id == "y") ? id + "!" : id;
      });
  CHECK(mapped["inner_elements"].dump() == R"(["x!","y!","z"])");
  CHECK(mapped["contract"].dump() == R"(["z"])");
}

TEST_CASE("stable rendering") {
  Json j;
  j["b"] = 1;
  j["a"] = 2;
  std::string s = matroid::to_stable_string(j);
  // Insertion order survives and the text ends with a newline.
  CHECK(s == "{\n  \"b\": 1,\n  \"a\": 2\n}\n");
}

TEST_CASE("cli check reports both gates") {
  CliResult r = run_cli("check " + data_file("k4_double.json"));
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.out);
  CHECK(out["covering"] == true);
  CHECK(out["packing"] == true);

  ParsedInstance inst = matroid::load_instance(data_file("k4_double.json"));
  MatroidFamily f = inst.family();
  Assignment cov = matroid::assignment_from_json(
      *inst.ground, out["covering_assignment"], f.size());
  CHECK(matroid::assignment_violation(f, cov).empty());
  Assignment pack = matroid::assignment_from_json(
      *inst.ground, out["packing_assignment"], f.size());
  CHECK(matroid::assignment_violation(f, pack).empty());
}

TEST_CASE("cli check stays at exit zero on a negative answer") {
  CliResult r = run_cli("check " + data_file("u13_double.json"));
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.out);
  CHECK(out["covering"] == false);
  CHECK(out["covering_certificate"]["kind"] == "uncoverable");
  CHECK(out["covering_certificate"]["X"].dump() == R"(["a","b"])");
  CHECK(out["covering_certificate"]["element"] == "c");
  CHECK(out["packing"] == true);
}

TEST_CASE("cli check on the empty instance") {
  CliResult r = run_cli("check " + data_file("empty.json"));
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.out);
  CHECK(out["covering"] == true);
  CHECK(out["packing"] == true);
}

TEST_CASE("cli partition emits a verified partitioning") {
  CliResult r = run_cli("partition " + data_file("k4_double.json"));
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.out);
  CHECK(out["mode"] == "partitioning");

  ParsedInstance inst = matroid::load_instance(data_file("k4_double.json"));
  MatroidFamily f = inst.family();
  Assignment a = matroid::assignment_from_json(*inst.ground, out, f.size());
  CHECK(matroid::assignment_violation(f, a).empty());

  // Byte-identical on a second run.
  CliResult again = run_cli("partition " + data_file("k4_double.json"));
  CHECK(again.out == r.out);

  // The reduction route solves the same instance.
  CliResult routed =
      run_cli("partition --use-reduction " + data_file("k4_double.json"));
  REQUIRE(routed.exit_code == 0);
  Json routed_out = Json::parse(routed.out);
  Assignment b =
      matroid::assignment_from_json(*inst.ground, routed_out, f.size());
  CHECK(matroid::assignment_violation(f, b).empty());
}

TEST_CASE("cli partition certifies absence") {
  CliResult r = run_cli("partition " + data_file("u13_double.json"));
  REQUIRE(r.exit_code == 1);
  Json out = Json::parse(r.out);
  CHECK(out["kind"] == "uncoverable");
  CHECK(out["X"].dump() == R"(["a","b"])");
  CHECK(out["element"] == "c");
}

TEST_CASE("cli partition pairs matchings with co-matchings") {
  CliResult r = run_cli("partition " + data_file("k22_matching.json"));
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.out);
  std::string part0 = out["parts"][0].dump();
  bool matching =
      part0 == R"(["e1","e4"])" || part0 == R"(["e2","e3"])";
  CHECK(matching);
}

TEST_CASE("cli tight queries") {
  CliResult largest = run_cli("tight --largest " + data_file("u12_double.json"));
  REQUIRE(largest.exit_code == 0);
  CHECK(Json::parse(largest.out)["largest_tight"].dump() == R"(["a","b"])");

  CliResult loose = run_cli("tight --largest " + data_file("u12_free.json"));
  REQUIRE(loose.exit_code == 0);
  CHECK(Json::parse(loose.out)["largest_tight"].dump() == "[]");

  CliResult blocked =
      run_cli("tight --largest " + data_file("u13_double.json"));
  REQUIRE(blocked.exit_code == 1);
  CHECK(Json::parse(blocked.out)["kind"] == "uncoverable");

  CliResult single =
      run_cli("tight --subset a " + data_file("u12_double.json"));
  REQUIRE(single.exit_code == 0);
  CHECK(Json::parse(single.out)["tight"] == false);

  CliResult both =
      run_cli("tight --subset a,b " + data_file("u12_double.json"));
  REQUIRE(both.exit_code == 0);
  CHECK(Json::parse(both.out)["tight"] == true);
}

TEST_CASE("cli verify") {
  CliResult part = run_cli("partition " + data_file("u12_double.json"));
  REQUIRE(part.exit_code == 0);
  std::string assignment = temp_file("mk_assignment.json", part.out);

  CliResult ok = run_cli("verify " + data_file("u12_double.json") +
                         " --assignment " + assignment +
                         " --mode partitioning");
  CHECK(ok.exit_code == 0);
  CHECK(Json::parse(ok.out)["valid"] == true);

  // Mode mismatch is an input error, not a verdict.
  CliResult mismatch = run_cli("verify " + data_file("u12_double.json") +
                               " --assignment " + assignment +
                               " --mode covering");
  CHECK(mismatch.exit_code == 2);

  std::string broken = temp_file(
      "mk_assignment_bad.json",
      R"({"mode": "partitioning", "parts": [["a", "b"], []]})");
  CliResult bad = run_cli("verify " + data_file("u12_double.json") +
                          " --assignment " + broken +
                          " --mode partitioning");
  CHECK(bad.exit_code == 1);
  Json verdict = Json::parse(bad.out);
  CHECK(verdict["valid"] == false);
  CHECK_FALSE(verdict["reason"].get<std::string>().empty());
}

TEST_CASE("cli reduce3 emits a loadable equivalent instance") {
  CliResult r = run_cli("reduce3 " + data_file("u12_double.json"));
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.out);
  CHECK(out["elements"].dump() == R"(["a#0","b#0","a#1","b#1"])");
  REQUIRE(out["matroids"].size() == 3);
  CHECK(out["matroids"][0]["role"] == "finitary");
  CHECK(out["matroids"][2]["type"] == "partition");

  // The emitted instance is itself solvable by the tool.
  std::string reduced = temp_file("mk_reduced.json", r.out);
  CliResult solved = run_cli("partition " + reduced);
  CHECK(solved.exit_code == 0);
}

TEST_CASE("cli rejects malformed input") {
  std::string broken = temp_file("mk_broken.json", "{\"elements\": [");
  CHECK(run_cli("check " + broken).exit_code == 2);
  std::string unknown = temp_file(
      "mk_unknown.json",
      R"({"elements": ["a"], "matroids": [{"type": "wat"}]})");
  CHECK(run_cli("check " + unknown).exit_code == 2);
  CHECK(run_cli("check /nonexistent/path.json").exit_code == 2);
  CHECK(run_cli("tight " + data_file("u12_double.json")).exit_code == 2);
}

TEST_CASE("cli selftest") {
  CliResult r = run_cli(
      "selftest --trials 4 --max-elements 4 --seed 7");
  REQUIRE(r.exit_code == 0);
  Json out = Json::parse(r.out);
  CHECK(out["pass"] == true);
  CHECK(out["failures"] == 0);
  CHECK(out["seed"] == 7);
  CHECK(out["suites"].size() >= 4);

  CliResult again = run_cli(
      "selftest --trials 4 --max-elements 4 --seed 7");
  CHECK(again.out == r.out);  // byte-identical reruns

  CliResult faulty = run_cli(
      "selftest --trials 2 --max-elements 3 --seed 7 --inject-fault");
  CHECK(faulty.exit_code == 3);
  Json freport = Json::parse(faulty.out);
  CHECK(freport["pass"] == false);
  CHECK(freport.dump().find("hereditary") != std::string::npos);
}
