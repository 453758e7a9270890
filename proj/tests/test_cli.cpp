#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int code = -1;
    std::string out;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const char* exe = std::getenv("SUBDIVBOX_CLI");
    REQUIRE_MESSAGE(exe != nullptr, "SUBDIVBOX_CLI must point at the subdivbox binary");
    std::string cmd = std::string("\"") + exe + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, n);
    int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

void write_file(const char* path, const std::string& text) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << text;
}

}  // namespace

TEST_CASE("analyze: text and json") {
    auto r = run_cli("analyze butterfly");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "mask: butterfly (catalog)"));
    CHECK(contains(r.out, "support box: (0,0) .. (6,6)"));
    CHECK(contains(r.out, "a(1): 4 = 4.000000000000"));
    CHECK(contains(r.out, "interpolatory: yes, submask at e = (1,1) is z^(1,1)"));
    CHECK(contains(r.out, "sum-rule order: 4"));
    CHECK(contains(r.out, "bounding witness: (D^(1,3) a)(-1,-1) = 3"));

    auto j = run_cli("analyze gp-combination --json");
    CHECK(j.code == 0);
    CHECK(contains(j.out, "\"command\": \"analyze\""));
    CHECK(contains(j.out, "\"order\": 1"));
    CHECK(contains(j.out, "\"interpolatory\": true"));
    CHECK(contains(j.out, "\"coset\": [1, 1]"));
    CHECK(contains(j.out, "\"eps\": [\"-1\", \"-1\"]"));
    CHECK(contains(j.out, "\"value\": {\"fraction\": \"1\", \"decimal\": \"1.000000000000\"}"));
}

TEST_CASE("output is deterministic run to run") {
    auto a1 = run_cli("analyze butterfly");
    auto a2 = run_cli("analyze butterfly");
    CHECK(a1.out == a2.out);
    auto s1 = run_cli("catalog show butterfly");
    auto s2 = run_cli("catalog show butterfly");
    CHECK(s1.out == s2.out);
}

TEST_CASE("catalog list and show") {
    auto l = run_cli("catalog list");
    CHECK(l.code == 0);
    CHECK(contains(l.out, "box3-A-B-G"));
    CHECK(contains(l.out, "butterfly"));
    CHECK(contains(l.out, "zwart-powell"));

    auto s = run_cli("catalog show interp4pt2d");
    CHECK(s.code == 0);
    CHECK(contains(s.out, "known order: 4"));
    CHECK(contains(s.out, "known interpolatory: yes"));
    CHECK(contains(s.out, "mask table, denominator 32, rows z2 = 6 down to 0, columns z1 = 0 .. 6"));
    CHECK(contains(s.out, "  [ 0  0 -1 -2 -1  0  0]"));
    CHECK(contains(s.out, "interchange: {\"dim\": 2, \"denominator\": 32"));

    CHECK(run_cli("catalog show nosuch").code == 2);
    CHECK(run_cli("catalog").code == 2);  // subcommand required
}

TEST_CASE("certify") {
    auto r = run_cli("certify gp-combination");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "norm r=1: 3/2 = 1.500000000000"));
    CHECK(contains(r.out, "norm r=5: 219/256 = 0.855468750000"));
    CHECK(contains(r.out, "certified: yes at r = 5, norm 219/256 = 0.855468750000 < 1"));

    auto s = run_cli("certify box3-1-1-0 --max-iter 3");
    CHECK(s.code == 0);  // inconclusive is a successful run
    CHECK(contains(s.out, "certified: no within r <= 3"));
    CHECK(contains(s.out, "not a proof of divergence"));

    // Z_1 failure means no difference scheme exists.
    auto f = run_cli("certify box3-1-0-0");
    CHECK(f.code == 2);
    CHECK(contains(f.out, "error: no difference scheme:"));
}

TEST_CASE("decompose") {
    auto r = run_cli("decompose gp-combination --order 1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "path: bivariate list I_1, standard"));
    CHECK(contains(r.out, "lambda sum: 1 = 1.000000000000"));
    CHECK(contains(r.out, "verified: residual is zero"));

    auto j = run_cli("decompose zwart-powell --order 2 --json");
    CHECK(j.code == 0);
    CHECK(contains(j.out, "\"verified\": true"));
    CHECK(contains(j.out, "\"lambda_sum\": {\"fraction\": \"1\""));

    auto bad = run_cli("decompose gp-combination --order 2");
    CHECK(bad.code == 2);
    CHECK(contains(bad.out, "error: Z_2 fails:"));

    CHECK(run_cli("decompose butterfly --order 0").code == 2);  // validator rejects 0
    CHECK(run_cli("decompose butterfly").code == 2);            // --order is required
}

TEST_CASE("refine") {
    auto r = run_cli("refine bspline-2 --steps 3");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "level: 3"));
    CHECK(contains(r.out, "values: 15 nonzero"));
    CHECK(contains(r.out, "(7): 1 = 1.000000000000"));

    write_file("cli_tmp_delta.json",
               "{\"dim\": 1, \"denominator\": 1, \"coeffs\": [{\"idx\": [0], \"num\": 1}]}");
    auto d = run_cli("refine bspline-2 --steps 2 --data cli_tmp_delta.json");
    CHECK(d.code == 0);
    CHECK(contains(d.out, "(3): 1 = 1.000000000000"));
    auto plain = run_cli("refine bspline-2 --steps 2");
    CHECK(contains(plain.out, "(3): 1 = 1.000000000000"));

    write_file("cli_tmp_2d.json",
               "{\"dim\": 2, \"denominator\": 1, \"coeffs\": [{\"idx\": [0, 0], \"num\": 1}]}");
    auto mism = run_cli("refine bspline-2 --data cli_tmp_2d.json");
    CHECK(mism.code == 2);
    CHECK(contains(mism.out, "does not match mask dimension"));
    std::remove("cli_tmp_delta.json");
    std::remove("cli_tmp_2d.json");
}

TEST_CASE("generators") {
    auto r = run_cli("generators --order 2");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "members: 4"));
    CHECK(contains(r.out, "B#(2,2,0)"));
    CHECK(contains(r.out, "B#(1,1,1)"));

    auto m = run_cli("generators --order 1 --modified");
    CHECK(m.code == 0);
    CHECK(contains(m.out, "variant: modified"));
    CHECK(contains(m.out, "B~#(1,1,0)"));

    auto d3 = run_cli("generators --dim 3 --order 1");
    CHECK(d3.code == 0);
    CHECK(contains(d3.out, "members: 16"));
    CHECK(contains(d3.out, "q(e1,e2,e3)"));
    CHECK(contains(d3.out, "first two sections (d = 3)"));

    CHECK(run_cli("generators").code == 2);  // --order is required
}

TEST_CASE("mask files and bad input") {
    write_file("cli_tmp_mask.json",
               "{\"dim\": 1, \"denominator\": 2, \"coeffs\": "
               "[{\"idx\": [0], \"num\": 1}, {\"idx\": [1], \"num\": 2}, {\"idx\": [2], \"num\": 1}]}");
    auto r = run_cli("analyze cli_tmp_mask.json");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "mask: cli_tmp_mask.json (file)"));
    CHECK(contains(r.out, "sum-rule order: 2"));
    std::remove("cli_tmp_mask.json");

    auto missing = run_cli("analyze no_such_scheme_or_file");
    CHECK(missing.code == 2);
    CHECK(contains(missing.out, "cannot open mask file"));

    write_file("cli_tmp_bad.json", "this is not the interchange format");
    auto bad = run_cli("analyze cli_tmp_bad.json");
    CHECK(bad.code == 2);
    CHECK(contains(bad.out, "mask JSON"));
    std::remove("cli_tmp_bad.json");
}

TEST_CASE("top-level usage") {
    CHECK(run_cli("").code == 2);
    auto h = run_cli("--help");
    CHECK(h.code == 0);
    CHECK(contains(h.out, "analyze"));
    CHECK(contains(h.out, "verify-paper"));
    CHECK(run_cli("verify-paper --help").code == 0);
    CHECK(run_cli("frobnicate").code == 2);
}
