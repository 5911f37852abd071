#include "doctest.h"
#include "koszul/cli.hpp"

using namespace koszul;

namespace {

RunConfig config(const std::string& algebra) {
    RunConfig c;
    c.algebra = algebra;
    return c;
}

}  // namespace

TEST_CASE("dims report for the truncated cubic") {
    RunConfig c = config("truncated:4");
    c.p_max = 5;
    CommandResult r = run_command("dims", "", c);
    CHECK(r.exit_code == kExitOk);
    const auto& totals = r.report["payload"]["totals"];
    REQUIRE(totals.size() == 6);
    CHECK(totals[0] == 4);
    for (std::size_t p = 1; p <= 5; ++p) CHECK(totals[p] == 3);
    CHECK(r.report["payload"]["complete"] == true);
    CHECK(r.report["version"] == kVersion);
}

TEST_CASE("k coefficients give one class per degree") {
    RunConfig c = config("truncated:3");
    c.coeff = "k";
    c.p_max = 4;
    CommandResult r = run_command("dims", "", c);
    REQUIRE(r.exit_code == kExitOk);
    for (const auto& t : r.report["payload"]["totals"]) CHECK(t == 1);
}

TEST_CASE("error exit codes") {
    CHECK(run_command("dims", "", config("truncated:1")).exit_code == kExitConfig);
    CHECK(run_command("dims", "", config("nonsense")).exit_code == kExitConfig);
    RunConfig f = config("truncated:4");
    f.field = "F_2";
    CHECK(run_command("dims", "", f).exit_code == kExitConfig);
    RunConfig bad = config("truncated:3");
    bad.field = "F_9";
    CHECK(run_command("dims", "", bad).exit_code == kExitConfig);
    RunConfig big = config("tensor:3,2");
    big.w_max = 40;
    CHECK(run_command("dims", "", big).exit_code == kExitResource);
    CHECK(run_command("verify", "bogus", config("truncated:3")).exit_code == kExitConfig);
}

TEST_CASE("reports are deterministic") {
    RunConfig c = config("as_cubic:1,2,5");
    c.trials = 20;
    for (const std::string cmd : {"dims", "higher", "koszulity"}) {
        CommandResult a = run_command(cmd, "", c), b = run_command(cmd, "", c);
        CHECK(a.report.dump() == b.report.dump());
    }
    CommandResult a = run_command("verify", "fundamental", c), b = run_command("verify", "fundamental", c);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.exit_code == kExitOk);
}
