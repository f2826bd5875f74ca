#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace {

std::string run_cli(const std::string& args, int* exit_code = nullptr) {
    std::string cmd = std::string(FINITARY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, got);
    int rc = pclose(f);
    if (exit_code) *exit_code = WEXITSTATUS(rc);
    return out;
}

} // namespace

TEST_CASE("solve on the figure arena: exit code and region line") {
    run_cli("examples dump fig3 > /tmp/cli_fig3.arena");
    int rc = 0;
    std::string out =
        run_cli("solve --input /tmp/cli_fig3.arena --condition bnd-uniform-buchi --N 0 --start 0",
                &rc);
    CHECK(rc == 1);  // the start vertex is not Eve's
    CHECK(out.find("region E: 2\n") != std::string::npos);

    out = run_cli("solve --input /tmp/cli_fig3.arena --condition uniform-buchi --N 0 --start 0",
                  &rc);
    CHECK(rc == 0);
    CHECK(out.find("region E: 0 1 2\n") != std::string::npos);
}

TEST_CASE("dump round-trips byte-identically through solve input") {
    std::string dumped = run_cli("examples dump fig3");
    std::ofstream("/tmp/cli_rt.arena") << dumped;
    // reparse and reprint through the unfolder's output path: identical text
    std::string again = run_cli("examples dump fig3");
    CHECK(dumped == again);
}

TEST_CASE("json output is schema-stable") {
    run_cli("examples dump fig3 > /tmp/cli_fig3.arena");
    std::string out = run_cli(
        "solve --input /tmp/cli_fig3.arena --condition uniform-buchi --N 0 --start 0 --json");
    const std::string golden = R"({
  "condition": "uniform-buchi",
  "N": 0,
  "arena": "fig3",
  "eve_region": [
    0,
    1,
    2
  ],
  "adam_region": [],
  "start": 0,
  "start_winner": "E"
}
)";
    CHECK(out == golden);
}

TEST_CASE("verify round-trip: emitted strategy passes through files") {
    run_cli("examples dump fig3 > /tmp/cli_fig3.arena");
    std::string solve_out =
        run_cli("solve --input /tmp/cli_fig3.arena --condition buchi --emit-strategy A");
    // the strategy block starts at the first 'strategy' line
    auto pos = solve_out.find("strategy");
    REQUIRE(pos != std::string::npos);
    std::ofstream("/tmp/cli_fig3.strat") << solve_out.substr(pos);
    int rc = 0;
    std::string v = run_cli(
        "verify --input /tmp/cli_fig3.arena --strategy /tmp/cli_fig3.strat --condition buchi "
        "--from 0,1,2",
        &rc);
    // Adam wins Büchi nowhere on this arena: his strategy cannot spoil it
    CHECK(rc == 1);
    CHECK(v.rfind("FAILS", 0) == 0);
}

TEST_CASE("unfold writes a loadable arena with config comments") {
    run_cli("examples dump round-robin --format pushdown > /tmp/cli_rr.pd");
    int rc = 0;
    std::string out = run_cli(
        "unfold --pushdown /tmp/cli_rr.pd --height 2 --start p:\u22a5 --policy drop --out "
        "/tmp/cli_rr.arena",
        &rc);
    CHECK(rc == 0);
    CHECK(out.find("vertices") != std::string::npos);
    std::ifstream in("/tmp/cli_rr.arena");
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str().find("# config 0 p:\u22a5") != std::string::npos);
    int rc2 = 0;
    run_cli("solve --input /tmp/cli_rr.arena --condition buchi --start 0", &rc2);
    CHECK(rc2 == 0);
}

TEST_CASE("min-bound experiment stabilizes on the switch game") {
    run_cli("examples dump switch --format pushdown > /tmp/cli_sw.pd");
    int rc = 0;
    std::string out = run_cli(
        "experiment min-bound --pushdown /tmp/cli_sw.pd --start q:\u22a5 --height-range 1..8 "
        "--csv /tmp/cli_sw.csv",
        &rc);
    CHECK(rc == 0);
    CHECK(out.find("stabilized 2 at height") != std::string::npos);
    std::ifstream csv("/tmp/cli_sw.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "height,vertices,min_bound");
}

TEST_CASE("memory-bound experiment finds the two-state strategy") {
    int rc = 0;
    std::string out = run_cli("experiment memory-bound --example uniparity --player E --cap 3",
                              &rc);
    CHECK(rc == 0);
    CHECK(out.find("min-memory 2") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    int rc = 0;
    run_cli("solve --condition buchi", &rc);
    CHECK(rc == 2);
    run_cli("examples dump nonesuch", &rc);
    CHECK(rc == 2);
    run_cli("solve --input /tmp/cli_fig3.arena --condition uniform-buchi", &rc);  // missing --N
    CHECK(rc == 2);
}

#include "finitary/fixtures.hpp"
#include "finitary/io.hpp"

TEST_CASE("dump matches the in-process build byte for byte") {
    std::string dumped = run_cli("examples dump fig3");
    finitary::Fixture f = finitary::build_example("fig3");
    CHECK(dumped == finitary::arena_to_string(f.arena()));
    std::string pd = run_cli("examples dump switch --format pushdown");
    finitary::Fixture sw = finitary::build_example("switch");
    CHECK(pd == finitary::pushdown_to_string(sw.process()));
}

TEST_CASE("simulate subcommand replays a strategy pair") {
    run_cli("examples dump fig3 > /tmp/cli_fig3.arena");
    std::ofstream("/tmp/cli_eve.strat") << "strategy E positional:\n";
    std::ofstream("/tmp/cli_adam.strat") << "strategy A positional: 0->1 1->2 2->2\n";
    int rc = 0;
    std::string out = run_cli(
        "simulate --input /tmp/cli_fig3.arena --eve /tmp/cli_eve.strat --adam "
        "/tmp/cli_adam.strat --start 0 --horizon 5",
        &rc);
    CHECK(rc == 0);
    CHECK(out.find("0 0 color=0 dist=0") != std::string::npos);
    CHECK(out.find("1 1 color=1 dist=1") != std::string::npos);
    CHECK(out.find("counter 1:") != std::string::npos);
}
