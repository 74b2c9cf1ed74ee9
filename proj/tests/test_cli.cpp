/**************************************************************************
 * Copyright 2026 The linset Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/


#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"
#include "linset/report.hpp"
#include "util.hpp"

#ifndef LINSET_CLI_PATH
#error "LINSET_CLI_PATH must name the linset executable"
#endif

using namespace linset;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(LINSET_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

Json run_json(const std::string& args) {
  auto r = run(args);
  INFO(args);
  REQUIRE(r.status == 0);
  return Json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("analyze reports") {
  auto tr = run_json("analyze --field 2^4 --poly 'x^q2 + x'");
  CHECK(tr["schema_version"] == kSchemaVersion);
  CHECK(tr["stabilizer"]["order"] == 256);
  CHECK(tr["stabilizer"]["is_field"] == false);
  CHECK(tr["code"]["d"] == 2);
  CHECK(tr["code"]["is_mrd"] == false);
  CHECK(tr["code"]["psi_ok"] == true);
  CHECK(tr["geometry"]["low_weight"] == false);
  CHECK(tr["timing"].is_null());

  auto sq = run_json("analyze --field 2^5 --poly x^q");
  CHECK(sq["geometry"]["scattered"] == true);
  CHECK(sq["code"]["is_mrd"] == true);
  CHECK(sq["stabilizer"]["order"] == 32);
  CHECK(sq["stabilizer"]["is_field"] == true);
  for (const auto& [k, v] : sq["consistency"].items()) CHECK_MESSAGE(v == true, k);

  auto deg = run_json("analyze --field 3^2 --poly x");
  CHECK(deg["code"]["degenerate"] == true);
  CHECK(deg["code"]["psi_ok"].is_null());

  auto timed = run_json("analyze --field 2^4 --poly x^q --timing");
  CHECK(timed["timing"].is_object());
}

TEST_CASE("reports are byte-identical across runs") {
  for (std::string args : {"analyze --field 3^4 --poly '2*x^q + x^q3' --seed 5",
                           "family --field 3^4 --family comp_subspace",
                           "search --field 2^4 --max-qdeg 2 --predicate R_pt --t 2",
                           "code --field 2^6 --poly x^q --t 2,3",
                           "stabilizer --field 2^4 --poly x^q2 --brute"}) {
    auto a = run(args), b = run(args);
    INFO(args);
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  auto w1 = run("search --field 3^4 --max-qdeg 2 --predicate scattered --budget 500 --seed 3 --workers 1");
  auto w4 = run("search --field 3^4 --max-qdeg 2 --predicate scattered --budget 500 --seed 3 --workers 4");
  CHECK(w1.out == w4.out);
  auto s1 = run("stabilizer --field 2^4 --poly 'x^q + x^q2' --brute --workers 1");
  auto s3 = run("stabilizer --field 2^4 --poly 'x^q + x^q2' --brute --workers 3");
  CHECK(s1.out == s3.out);
}

TEST_CASE("subcommands") {
  auto fam = run_json("family --field 2^4 --family trace --param t=2");
  CHECK(fam["polynomial"]["coeffs"] == Json::array({1, 0, 1, 0}));
  auto st = run_json("stabilizer --field 2^4 --poly 'x^q2 + x' --brute");
  CHECK(st["order"] == 256);
  CHECK(st["brute_force"].is_object());
  auto code = run_json("code --field 2^4 --poly x^q");
  CHECK(code["d"] == 3);
  CHECK(code["is_mrd"] == true);
  auto srch = run_json("search --field 2^4 --max-qdeg 1");
  CHECK(srch["hits"].size() >= 1);
  auto orc = run_json("oracle --field 2^4 --poly 'x^q + x^q2' --kind all");
  CHECK(orc["agree"] == true);
  CHECK(orc["stabilizer"]["agree"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run("analyze --field 2^4 --poly 'y^2'").status == 2);
  CHECK(run("analyze --field 4^2 --poly x").status == 2);
  CHECK(run("analyze --poly x").status == 2);
  CHECK(run("verify-paper --tier ''").status == 2);
  CHECK(run("verify-paper --tier medium").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("analyze --field 2^4 --poly x --t 3").status == 2);
  CHECK(run("family --field 2^4 --family nope").status == 2);
  CHECK(run("verify-paper --tier fast --only 4").status == 0);
}

}  // TEST_SUITE
