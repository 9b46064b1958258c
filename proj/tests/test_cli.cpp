/*
   Copyright 2026 The cleanring authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// End-to-end tests that drive the installed binary exactly the way a user
// would: through a shell, checking stdout/stderr text and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "cleanring/parse.hpp"
#include "cleanring/rational.hpp"

using namespace cleanring;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string output;  // stdout and stderr combined
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CLEANRING_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify main passes over Q and GF(5), rejects GF(4)") {
    RunResult q = run("verify main");
    CHECK(q.code == 0);
    CHECK(contains(q.output, "xy_eq_id"));
    CHECK(contains(q.output, "yx_on_1_is_0_not_1"));
    CHECK(contains(q.output, "result: PASS (12 checks, 0 failed, 0 skipped)"));

    CHECK(run("verify main --field gf5 --seed 7").code == 0);
    CHECK(run("verify main --field gf2").code == 0);

    RunResult bad = run("verify main --field gf4");
    CHECK(bad.code == 2);
    CHECK(contains(bad.output, "prime"));
    CHECK(run("verify main --field nonsense").code == 2);
    CHECK(run("verify main --probes 0").code == 2);
}

TEST_CASE("verify main is deterministic for a fixed seed") {
    RunResult a = run("verify main --seed 41");
    RunResult b = run("verify main --seed 41");
    CHECK(a.code == 0);
    CHECK(a.output == b.output);
}

TEST_CASE("verify main --json") {
    RunResult r = run("verify main --json --seed 11");
    REQUIRE(r.code == 0);
    json j = json::parse(r.output);
    CHECK(j["field"] == "Q");
    CHECK(j["all_pass"] == true);
    CHECK(j["any_skipped"] == false);
    CHECK(j["ok"] == true);
    REQUIRE(j["checks"].size() == 12);
    for (const auto& c : j["checks"]) CHECK(c["status"] == "PASS");
}

TEST_CASE("split prints both components and enforces locality") {
    RunResult r = run("split \"t/(1-t)\"");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "v0 = -1"));
    CHECK(contains(r.output, "v1 = -1/(t - 1)"));

    RunResult poly = run("split \"t^2\"");
    CHECK(poly.code == 0);
    CHECK(contains(poly.output, "v0 = t^2"));
    CHECK(contains(poly.output, "v1 = 0"));

    CHECK(run("split \"1/t\"").code == 1);       // not in the local ring
    CHECK(run("split \"1/(\"").code == 2);       // syntax error
    CHECK(run("split").code == 2);               // missing argument
}

TEST_CASE("split --json output re-parses to equal values") {
    RunResult r = run("split \"t/(1-t)\" --json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.output);
    Rational like;
    auto input = parse_ratfunc(j["input"].get<std::string>(), like);
    auto v0 = parse_ratfunc(j["v0"].get<std::string>(), like);
    auto v1 = parse_ratfunc(j["v1"].get<std::string>(), like);
    CHECK(input == parse_ratfunc("t/(1-t)", like));
    CHECK(v0 == parse_ratfunc("-1", like));
    CHECK(v1 == parse_ratfunc("1/(1-t)", like));
    CHECK(v0 + v1 == input);
}

TEST_CASE("apply evaluates generator words") {
    RunResult xy = run("apply \"x y\" \"t\"");
    CHECK(xy.code == 0);
    CHECK(xy.output == "t\n");

    RunResult yx = run("apply \"y x\" \"1\"");
    CHECK(yx.code == 0);
    CHECK(yx.output == "0\n");

    RunResult ixe = run("apply \"ixe\" \"t\"");
    CHECK(ixe.code == 0);
    CHECK(ixe.output == "-t - 1\n");

    RunResult gf = run("apply \"y\" \"1\" --field gf5");
    CHECK(gf.code == 0);
    CHECK(gf.output == "t\n");

    CHECK(run("apply \"z\" \"t\"").code == 2);   // unknown generator
    CHECK(run("apply \"y\"").code == 2);         // missing expression
}

TEST_CASE("finite classifies rings and honors the budget") {
    RunResult r = run("finite --n 2 --p 2");
    CHECK(r.code == 0);
    CHECK(contains(r.output, "all_clean: true"));
    CHECK(contains(r.output, "all_strongly_clean: true"));
    CHECK(contains(r.output, "dedekind_finite: true"));
    CHECK(contains(r.output, "uniquely_strongly_clean: 14/16"));

    RunResult budget = run("finite --n 4 --p 3");
    CHECK(budget.code == 1);
    CHECK(contains(budget.output, "budget"));

    CHECK(run("finite --n 3 --p 2 --budget 100").code == 1);
    CHECK(run("finite --n 2 --p 2 --budget 0").code == 2);
    CHECK(run("finite --n 2 --p 4").code == 2);  // modulus must be prime
    CHECK(run("finite --n 2").code == 2);        // --p is required
}

TEST_CASE("finite --json exposes per-element records") {
    RunResult r = run("finite --n 1 --p 3 --json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.output);
    CHECK(j["ring_size"] == 3);
    CHECK(j["all_strongly_clean"] == true);
    CHECK(j["dedekind_finite"] == true);
    REQUIRE(j["elements"].size() == 3);
    CHECK(j["elements"][2]["element"] == "[[2]]");
    CHECK(j["elements"][2]["strong_count"] == 2);
    CHECK(j["elements"][2]["is_uniquely_strongly_clean"] == false);
}

TEST_CASE("finite --csv writes the element table") {
    const auto path =
        (std::filesystem::temp_directory_path() / "cleanring_test_table.csv").string();
    RunResult r = run("finite --n 1 --p 2 --csv " + path);
    CHECK(r.code == 0);
    std::ifstream file(path);
    REQUIRE(file.good());
    std::stringstream contents;
    contents << file.rdbuf();
    CHECK(contains(contents.str(),
                   "element,clean_count,strong_count,is_clean,is_strongly_clean,"
                   "is_uniquely_strongly_clean"));
    CHECK(contains(contents.str(), "\"[[0]]\""));
    std::filesystem::remove(path);
}

TEST_CASE("laurent decomposes named series") {
    RunResult one = run("laurent --series \"1\"");
    CHECK(one.code == 0);
    CHECK(contains(one.output, "N  = -1"));
    CHECK(contains(one.output, "u  = 1*t^-1 + 1*t^0 + O(t^16)"));
    CHECK(contains(one.output, "u2 = -1*t^-1 + O(t^16)"));
    CHECK(contains(one.output, "result: PASS"));

    RunResult zero = run("laurent --series \"0\"");
    CHECK(zero.code == 0);
    CHECK(contains(zero.output, "N  = 0"));
    CHECK(contains(zero.output, "u  = 1*t^0 + O(t^16)"));
    CHECK(contains(zero.output, "u2 = -1*t^0 + O(t^16)"));

    CHECK(run("laurent --series \"1/t\" --precision 1").code == 0);
    CHECK(run("laurent --field gf5 --series \"1/(1-t)\"").code == 0);
    CHECK(run("laurent --series \"1/(\"").code == 2);
    CHECK(run("laurent --series \"1/0\"").code == 1);
    CHECK(run("laurent --series \"1\" --precision 0").code == 2);
}

TEST_CASE("laurent random runs are seeded and verified") {
    RunResult m = run("laurent --random --base m2gf2 --seed 3");
    CHECK(m.code == 0);
    CHECK(contains(m.output, "result: PASS"));

    CHECK(run("laurent --random --base q --seed 9").code == 0);
    CHECK(run("laurent --random --base gf7 --seed 2").code == 0);

    RunResult a = run("laurent --random --base m2gf2 --seed 3");
    CHECK(a.output == m.output);  // deterministic

    CHECK(run("laurent --random --base bogus").code == 2);
    CHECK(run("laurent --random --series \"1\"").code == 2);  // mutually exclusive
    CHECK(run("laurent").code == 2);                          // one of them is required
}

TEST_CASE("laurent --json carries the full decomposition") {
    RunResult r = run("laurent --series \"1\" --json");
    REQUIRE(r.code == 0);
    json j = json::parse(r.output);
    CHECK(j["shift"] == -1);
    CHECK(j["ok"] == true);
    CHECK(j["sum_matches"] == true);
    CHECK(j["units_commute"] == true);
    CHECK(j["u_is_unit"] == true);
    CHECK(j["u2_is_unit"] == true);
    CHECK(j["u"]["first"] == -1);
    CHECK(j["u"]["tail"] == 16);
    CHECK(j["u"]["coefficients"][0] == "1");
    CHECK(j["u"]["coefficients"][1] == "1");
    CHECK(j["u2"]["coefficients"][0] == "-1");

    RunResult rm = run("laurent --random --base m2gf2 --seed 3 --json");
    REQUIRE(rm.code == 0);
    json jm = json::parse(rm.output);
    CHECK(jm["ok"] == true);
    // matrix coefficients serialize as row arrays
    CHECK(jm["u"]["coefficients"][0].is_array());
}

TEST_CASE("top-level usage") {
    CHECK(run("").code == 2);          // a subcommand is required
    CHECK(run("verify").code == 2);    // verify needs its nested subcommand
    CHECK(run("--help").code == 0);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("verify main --no-such-flag").code == 2);
}
