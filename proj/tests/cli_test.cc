// Copyright 2026 The Stripecover Authors
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
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;  // stdout + stderr, interleaved
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

// Runs the installed binary with the given arguments, captures combined
// output and decodes the exit status.
RunResult run(const std::string& args) {
  static int counter = 0;
  const std::string out_path = "/tmp/stripecover_cli_cap_" +
                               std::to_string(getpid()) + "_" +
                               std::to_string(++counter) + ".txt";
  const std::string cmd = std::string(STRIPECOVER_CLI_BIN) + " " + args +
                          " > " + out_path + " 2>&1";
  const int raw = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  std::remove(out_path.c_str());
  return r;
}

std::string example(const std::string& name) {
  return std::string(STRIPECOVER_EXAMPLES_DIR) + "/" + name;
}

std::string tmp_json(const std::string& tag) {
  return "/tmp/stripecover_cli_" + tag + ".json";
}

}  // namespace

TEST_CASE("no subcommand is a usage error") {
  CHECK(run("").exit_code != 0);
  CHECK(run("frobnicate").exit_code != 0);
}

TEST_CASE("uncross and disjointify round-trip the bundled example") {
  const std::string sorted = tmp_json("sorted");
  const RunResult u =
      run("uncross --in " + example("arrangement.json") + " --out " + sorted);
  CHECK(u.exit_code == 0);

  // Crossing curves without --uncross-first: precondition failure, exit 1.
  const RunResult d1 = run("disjointify --in " + example("arrangement.json") +
                           " --out " + tmp_json("d1"));
  CHECK(d1.exit_code == 1);
  CHECK(d1.out.find("uncross first") != std::string::npos);

  // Sorted input or --uncross-first both succeed.
  const RunResult d2 = run("disjointify --in " + sorted + " --out " +
                           tmp_json("d2"));
  CHECK(d2.exit_code == 0);
  const RunResult d3 = run("disjointify --in " + example("arrangement.json") +
                           " --uncross-first --out " + tmp_json("d3"));
  CHECK(d3.exit_code == 0);
  CHECK(slurp(tmp_json("d2")) == slurp(tmp_json("d3")));
}

TEST_CASE("identical inputs give byte-identical outputs") {
  const RunResult a = run("uncross --in " + example("arrangement.json") +
                          " --out " + tmp_json("rep1"));
  const RunResult b = run("uncross --in " + example("arrangement.json") +
                          " --out " + tmp_json("rep2"));
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(slurp(tmp_json("rep1")) == slurp(tmp_json("rep2")));

  const RunResult v1 = run("verify --criterion 3 --seed 11 --csv " +
                           tmp_json("v1"));
  const RunResult v2 = run("verify --criterion 3 --seed 11 --csv " +
                           tmp_json("v2"));
  REQUIRE(v1.exit_code == 0);
  CHECK(slurp(tmp_json("v1")) == slurp(tmp_json("v2")));
}

TEST_CASE("malformed json exits 1 and names the field") {
  const std::string bad = tmp_json("bad");
  spit(bad, "{\"axis\": 1, \"delta\": [\"1\", \"0\"], \"curves\": []}");
  const RunResult r = run("uncross --in " + bad + " --out " + tmp_json("x"));
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("delta") != std::string::npos);

  spit(bad, "{\"axis\": 1, \"delta\": [\"1\", \"2\"]}");
  const RunResult r2 = run("uncross --in " + bad + " --out " + tmp_json("x"));
  CHECK(r2.exit_code == 1);
  CHECK(r2.out.find("curves") != std::string::npos);

  spit(bad, "this is not json");
  const RunResult r3 = run("uncross --in " + bad + " --out " + tmp_json("x"));
  CHECK(r3.exit_code == 1);
}

TEST_CASE("covers separates success from witnessed failure") {
  const std::string arr = tmp_json("cov_arr");
  const RunResult mk = run("disjointify --in " + example("arrangement.json") +
                           " --uncross-first --out " + arr);
  REQUIRE(mk.exit_code == 0);

  // The bundled points file holds one covered and one uncovered point.
  const RunResult mixed =
      run("covers --arrangement " + arr + " --points " +
          example("points.json"));
  CHECK(mixed.exit_code == 2);
  CHECK(mixed.out.find("uncovered-points") != std::string::npos);
  CHECK(mixed.out.find("witness") != std::string::npos);

  const std::string good = tmp_json("cov_good");
  spit(good, "{\"points\": [[[\"0\", \"1\"], [\"1\", \"1\"]]]}");
  const RunResult pass =
      run("covers --arrangement " + arr + " --points " + good);
  CHECK(pass.exit_code == 0);
}

TEST_CASE("phi evaluates the flat worked example") {
  const std::string arr = tmp_json("flat");
  spit(arr,
       "{\"axis\": 1, \"delta\": [\"1\", \"2\"], \"curves\": ["
       "{\"breakpoints\": [[\"0\", \"1\"]], \"values\": [[\"0\", \"1\"]], "
       "\"left_slope\": [\"0\", \"1\"], \"right_slope\": [\"0\", \"1\"], "
       "\"domain\": null}]}");
  const RunResult r =
      run("phi --arrangement " + arr + " --baseline -1 --eval 0,1/2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");
  // phi is constant along the stripe: another abscissa, same value.
  const RunResult r2 =
      run("phi --arrangement " + arr + " --baseline -1 --eval 42,1/2");
  CHECK(r2.out == "1\n");

  // Baseline above the stripe: precondition, exit 1.
  const RunResult r3 =
      run("phi --arrangement " + arr + " --baseline 0 --eval 0,1/2");
  CHECK(r3.exit_code == 1);

  // Verification campaigns exit 0 and emit a seeded report.
  const RunResult v = run("phi --arrangement " + arr +
                          " --baseline -1 --verify lipschitz"
                          " --samples 200 --seed 5");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("# seed=5") == 0);
  CHECK(v.out.find("pass") != std::string::npos);
}

TEST_CASE("extend reproduces the frozen one-dimensional answers") {
  const RunResult r = run("extend --samples " + example("samples.json") +
                          " --query 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "2\n");
  const RunResult b = run("extend --samples " + example("samples.json") +
                          " --query 5 --bounded");
  CHECK(b.out == "1\n");
  // Wrong arity: usage error.
  const RunResult w = run("extend --samples " + example("samples.json") +
                          " --query 1,2");
  CHECK(w.exit_code == 1);
  // Extension constant below the sampled constant: usage error.
  const RunResult c = run("extend --samples " + example("samples.json") +
                          " --query 2 --lipschitz 1/2");
  CHECK(c.exit_code == 1);
}

TEST_CASE("null1d subcommands expose the worked example") {
  const RunResult d = run("null1d deficit --cover " + example("cover.json"));
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("max_deficit,1/5") != std::string::npos);
  CHECK(d.out.find("cover_length,1/5") != std::string::npos);

  const RunResult p = run("null1d phi --cover " + example("cover.json") +
                          " --out " + tmp_json("phi1d"));
  CHECK(p.exit_code == 0);
  CHECK(slurp(tmp_json("phi1d")).find("breakpoints") != std::string::npos);

  const RunResult dv = run("null1d derive --measure " +
                           example("measure.json") + " --weight " +
                           example("step.json") + " --f " +
                           example("plfunction.json"));
  CHECK(dv.exit_code == 0);
  CHECK(dv.out.find("atom_values") != std::string::npos);
}

TEST_CASE("project prints exact and normalized lengths") {
  const RunResult r = run("project --set four-corner --depth 1 --dir 1,0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("exact,1/2") != std::string::npos);

  const RunResult grid =
      run("project --report --depths 0,1 --dirs \"1,0;1,1\"");
  CHECK(grid.exit_code == 0);
  CHECK(grid.out.find("set,depth,direction,exact,normalized") == 0);
  CHECK(grid.out.find("segment,-1") != std::string::npos);

  const RunResult deep = run("project --set four-corner --depth 99 --dir 1,0");
  CHECK(deep.exit_code == 1);
  const RunResult badd = run("project --set four-corner --depth 1 --dir 2,4");
  CHECK(badd.exit_code == 1);
}

TEST_CASE("full verification campaign exits zero") {
  const RunResult r = run("verify --all --seed 7");
  CHECK(r.exit_code == 0);
  // One status line per criterion.
  size_t lines = 0;
  for (size_t pos = 0; (pos = r.out.find("pass", pos)) != std::string::npos;
       ++pos) {
    ++lines;
  }
  CHECK(lines == 12);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("single-criterion verify passes and writes its csv") {
  const RunResult r =
      run("verify --criterion 8 --seed 7 --csv " + tmp_json("c8"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("pass") != std::string::npos);
  const std::string csv = slurp(tmp_json("c8"));
  CHECK(csv.find("# seed=7") == 0);
  CHECK(csv.find("interval-inequality") != std::string::npos);

  const RunResult bad = run("verify --criterion 0 --seed 7");
  CHECK(bad.exit_code == 1);
}
