#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "operon/cli/app.hpp"
#include "support.hpp"

using operon::test::model_path;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = operon::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("version and usage") {
    CHECK(run({"--version"}).out.find("0.1.0") != std::string::npos);
    CHECK(run({}).status == 2);
    CHECK(run({"bogus"}).status == 2);
    const Outcome help = run({"--help"});
    CHECK(help.status == 0);
    CHECK(help.out.find("fixed-points") != std::string::npos);

    const Outcome unknown_flag = run({"solve", model_path("lac_fixed_point.gf2"), "--frobnicate"});
    CHECK(unknown_flag.status == 2);
    CHECK_FALSE(unknown_flag.err.empty());
}

TEST_CASE("groebner and solve") {
    const std::string sys = model_path("lac_fixed_point.gf2");
    const std::string basis = "x1 + 1\nx2 + 1\nx3 + 1\nx4 + 1\nx5\nx6 + 1\nx7 + 1\nx8 + 1\nx9 + 1\n";
    CHECK(run({"groebner", sys}).out == basis);
    const Outcome lex = run({"groebner", sys, "--order", "lex"});
    CHECK(lex.status == 0);
    CHECK(lex.out == basis);
    CHECK(run({"groebner", sys, "--order", "plex"}).status == 2);

    CHECK(run({"solve", sys}).out == "111101111\n");
    CHECK(run({"solve", sys, "--method", "enumerate", "--json"}).out == "[\"111101111\"]\n");
    CHECK(run({"solve", sys, "--method", "magic"}).status == 2);
    CHECK(run({"solve", "/nonexistent.gf2"}).status == 1);
}

TEST_CASE("fixed-points") {
    const std::string bn = model_path("lac.bn");
    CHECK(run({"fixed-points", bn, "--set", "a=1,g=0", "--json"}).out == "[\"111101111\"]\n");

    const Outcome all = run({"fixed-points", bn, "--all-params"});
    CHECK(all.status == 0);
    CHECK(all.out == "a=0,g=0: 000110000\na=0,g=1: 000010000\na=1,g=0: 111101111\na=1,g=1: 000010000\n");

    const Outcome bad = run({"fixed-points", bn, "--set", "a=2,g=0"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("parameter values must be 0 or 1") != std::string::npos);

    CHECK(run({"fixed-points", bn}).status == 2);
    CHECK(run({"fixed-points", bn, "--set", "a=1,g=0", "--all-params"}).status == 2);
}

TEST_CASE("simulate") {
    const std::string bn = model_path("lac.bn");
    const Outcome sim = run({"simulate", bn, "--set", "a=1,g=0", "--init", "111010011"});
    CHECK(sim.status == 0);
    CHECK(sim.out.find("1 011111111\n") != std::string::npos);
    CHECK(sim.out.find("fixed point reached at step 6") != std::string::npos);

    const Outcome cut = run({"simulate", bn, "--set", "a=1,g=0", "--init", "111010011", "--steps", "2"});
    CHECK(cut.out.find("truncated") != std::string::npos);
    CHECK(run({"simulate", bn, "--set", "a=1,g=0", "--init", "1110"}).status != 0);
}

TEST_CASE("state-graph") {
    const std::string bn = model_path("lac.bn");
    const Outcome attractors = run({"state-graph", bn, "--set", "a=0,g=0", "--attractors"});
    CHECK(attractors.out == "[{\"basin_size\":512,\"cycle\":[\"000110000\"]}]\n");

    const auto dot = std::filesystem::temp_directory_path() / "operon_test_graph.dot";
    CHECK(run({"state-graph", bn, "--set", "a=1,g=0", "--dot", dot.string()}).status == 0);
    std::ifstream in(dot);
    std::stringstream text;
    text << in.rdbuf();
    CHECK(text.str().find("digraph") != std::string::npos);
    std::filesystem::remove(dot);
}

TEST_CASE("ode subcommands") {
    const std::string ode = model_path("lac.ode");
    CHECK(run({"ode", "eliminate", ode}).out ==
          "4*A^7 + (29 - 21*L)*A^6 - 42*L*A^5 + 4*A^2 + (9 - L)*A - 2*L\n");

    const Outcome report = run({"ode", "bifurcation", ode, "--precision", "1e-6"});
    CHECK(report.status == 0);
    CHECK(report.out.find("L1 = 0.68454") != std::string::npos);
    CHECK(report.out.find("L2 = 1.51054") != std::string::npos);

    const Outcome csv = run({"ode", "bifurcation", ode, "--samples", "5", "--csv", "-"});
    CHECK(csv.out.find("L,A,branch,region_count\n") != std::string::npos);

    const Outcome states = run({"ode", "steady-states", ode, "--L", "1", "--digits", "4"});
    CHECK(states.status == 0);
    CHECK(states.out.find("\"A\": \"0.2272\"") != std::string::npos);
    CHECK(states.out.find("\"R\": \"0.0132\"") != std::string::npos);

    CHECK(run({"ode", "steady-states", ode, "--L", "-1"}).status == 2);
    CHECK(run({"ode", "bifurcation", ode, "--range", "2:1"}).status == 2);
    CHECK(run({"ode", "bifurcation", ode, "--samples", "1"}).status == 2);
}

TEST_CASE("determinism") {
    const std::vector<std::vector<std::string>> invocations = {
        {"fixed-points", model_path("lac.bn"), "--all-params", "--json"},
        {"state-graph", model_path("lac.bn"), "--set", "a=1,g=0", "--json", "-"},
        {"ode", "bifurcation", model_path("lac.ode"), "--samples", "20", "--csv", "-"},
        {"ode", "steady-states", model_path("lac.ode"), "--L", "3/2"},
    };
    for (const auto& args : invocations) {
        const Outcome a = run(args);
        const Outcome b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
}
