#include <doctest.h>

#include <numeric>

#include "operon/boolnet/dynamics.hpp"
#include "operon/boolnet/network.hpp"
#include "operon/boolnet/state_graph.hpp"
#include "operon/error.hpp"
#include "operon/gf2/poly_text.hpp"
#include "support.hpp"

using namespace operon;
using namespace operon::boolnet;

namespace {

const BooleanNetwork& lac() {
    static const BooleanNetwork net = parse_network(test::read_model("lac.bn"));
    return net;
}

ParamSetting setting(const char* text) { return parse_param_setting(text, lac()); }

State bits(const char* text) { return State::parse(text); }

BooleanNetwork random_network(test::Rng& rng, std::size_t n) {
    const auto names = test::var_names(n);
    std::vector<std::string> with_param = names;
    with_param.push_back("k");
    std::vector<Expr> rules;
    for (std::size_t i = 0; i < n; ++i) rules.push_back(test::random_expr(rng, with_param, 3));
    return BooleanNetwork("random", names, {"k"}, std::move(rules));
}

} // namespace

TEST_CASE("parse_network") {
    const BooleanNetwork& net = lac();
    CHECK(net.name() == "lac");
    CHECK(net.size() == 9);
    CHECK(net.params() == std::vector<std::string>{"a", "g"});
    CHECK(net.vars()->name(8) == "Ll");

    CHECK_THROWS_WITH_AS(parse_network("vars: x\nparams: a\nx' = x & Q\n"), doctest::Contains("Q"), ParseError);
    CHECK_THROWS_WITH_AS(parse_network("vars: x, y\nx' = y\n"), doctest::Contains("'y' has no update rule"),
                         ParseError);
    CHECK_THROWS_AS(parse_network("vars: x\nx' = x\nx' = !x\n"), ParseError);
    CHECK_THROWS_AS(parse_network("vars: x\nz' = x\nx' = x\n"), ParseError);
    CHECK_THROWS_AS(parse_network("vars: x\nparams: x\nx' = x\n"), Error);
    try {
        (void)parse_network("vars: x\n\nx' = x &\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("parameter settings") {
    CHECK(setting("a=1,g=0").values == std::map<std::string, bool>{{"a", true}, {"g", false}});
    CHECK_THROWS_WITH_AS(setting("a=2,g=0"), doctest::Contains("parameter values must be 0 or 1"), Error);
    CHECK_THROWS_AS(setting("a=1"), Error);
    CHECK_THROWS_AS(setting("a=1,g=0,z=1"), Error);

    const auto all = all_param_settings(lac());
    REQUIRE(all.size() == 4);
    CHECK(to_string(all[0]) == "a=0,g=0");
    CHECK(to_string(all[1]) == "a=0,g=1");
    CHECK(to_string(all[2]) == "a=1,g=0");
    CHECK(to_string(all[3]) == "a=1,g=1");
}

TEST_CASE("to_polynomial_system") {
    const auto induced = to_polynomial_system(lac(), setting("a=1,g=0"));
    const auto& vars = induced.vars();
    CHECK(induced.generators().front() == gf2::parse_poly("M + R*C + C", vars));

    const auto glucose = to_polynomial_system(lac(), setting("a=0,g=1"));
    const auto& gens = glucose.generators();
    CHECK(std::find(gens.begin(), gens.end(), gf2::parse_poly("C", vars)) != gens.end());

    const BooleanNetwork identity("id", {"x"}, {}, {gf2::parse_expr("x")});
    CHECK(to_polynomial_system(identity, {}).empty());
}

TEST_CASE("step") {
    CHECK(step(lac(), bits("111010011"), setting("a=1,g=0")) == bits("011111111"));
    CHECK(step(lac(), bits("111101111"), setting("a=1,g=0")) == bits("111101111"));
    CHECK(step(lac(), bits("000000000"), setting("a=0,g=1")) == bits("000010000"));
    CHECK_THROWS_AS(step(lac(), bits("0101"), setting("a=1,g=0")), Error);
}

TEST_CASE("trajectory") {
    const Trajectory t = trajectory(lac(), bits("111010011"), setting("a=1,g=0"), 100);
    REQUIRE(t.cycle_start.has_value());
    CHECK(t.cycle_length == 1);
    CHECK(t.transient() == 6);
    CHECK(t.states[6] == bits("111101111"));
    CHECK_FALSE(t.truncated);

    const Trajectory cut = trajectory(lac(), bits("111010011"), setting("a=1,g=0"), 2);
    CHECK(cut.truncated);
    CHECK(cut.states.size() == 3);
    CHECK_THROWS_AS(trajectory(lac(), bits("111010011"), setting("a=1,g=0"), 0), Error);

    const BooleanNetwork flip("flip", {"x"}, {}, {gf2::parse_expr("!x")});
    const Trajectory osc = trajectory(flip, bits("0"), {}, 10);
    CHECK(osc.cycle_start == std::optional<std::size_t>{0});
    CHECK(osc.cycle_length == 2);
}

TEST_CASE("fixed_points") {
    const std::pair<const char*, const char*> table[] = {
        {"a=0,g=0", "000110000"}, {"a=0,g=1", "000010000"}, {"a=1,g=0", "111101111"}, {"a=1,g=1", "000010000"}};
    for (const auto& [params, expected] : table) {
        for (FixedPointMethod method : {FixedPointMethod::groebner, FixedPointMethod::enumerate}) {
            const auto fps = fixed_points(lac(), setting(params), method);
            REQUIRE(fps.size() == 1);
            CHECK(fps.front() == bits(expected));
        }
    }
}

TEST_CASE("state_graph") {
    for (const ParamSetting& params : all_param_settings(lac())) {
        const StateGraph graph = state_graph(lac(), params);
        CHECK(graph.node_count() == 512);
        REQUIRE(graph.attractors().size() == 1);
        const Attractor& only = graph.attractors().front();
        CHECK(only.basin_size == 512);
        REQUIRE(only.cycle.size() == 1);
        CHECK(fixed_points(lac(), params) == only.cycle);
    }

    const BooleanNetwork flip("flip", {"x"}, {}, {gf2::parse_expr("!x")});
    const StateGraph osc = state_graph(flip, {});
    REQUIRE(osc.attractors().size() == 1);
    CHECK(osc.attractors().front().cycle == std::vector<State>{bits("0"), bits("1")});
    CHECK(attractor_json(osc).dump() == R"([{"basin_size":2,"cycle":["0","1"]}])");
    CHECK(adjacency_json(osc).dump() == R"({"0":"1","1":"0"})");
    CHECK(to_dot(osc).find("\"0\" -> \"1\"") != std::string::npos);

    auto wide = test::var_names(kMaxGraphVars + 1);
    std::vector<Expr> rules;
    for (const auto& name : wide) rules.push_back(gf2::parse_expr(name));
    CHECK_THROWS_AS(state_graph(BooleanNetwork("wide", wide, {}, rules), {}), LimitError);
}

TEST_CASE("property: step agrees with the polynomial translation on lac") {
    std::size_t evaluations = 0;
    for (const ParamSetting& params : all_param_settings(lac())) {
        const auto update = update_polynomials(lac(), params);
        for (std::uint64_t s = 0; s < 512; ++s) {
            const State state(9, s);
            REQUIRE(step(lac(), state, params) == step_polynomial(update, state));
            ++evaluations;
        }
    }
    CHECK(evaluations == 2048);
}

TEST_CASE("property: random networks") {
    test::Rng rng(8675309);
    for (std::size_t n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            const BooleanNetwork net = random_network(rng, n);
            for (const ParamSetting& params : all_param_settings(net)) {
                const auto by_groebner = fixed_points(net, params, FixedPointMethod::groebner);
                const auto by_enumeration = fixed_points(net, params, FixedPointMethod::enumerate);
                CHECK(by_groebner == by_enumeration);

                std::vector<State> oracle;
                const auto update = update_polynomials(net, params);
                for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                    const State state(n, s);
                    REQUIRE(step(net, state, params) == step_polynomial(update, state));
                    if (step(net, state, params) == state) oracle.push_back(state);
                }
                std::sort(oracle.begin(), oracle.end());
                CHECK(by_enumeration == oracle);

                const StateGraph graph = state_graph(net, params);
                std::uint64_t total = 0;
                for (const Attractor& a : graph.attractors()) total += a.basin_size;
                CHECK(total == (std::uint64_t{1} << n));
                std::size_t fixed = 0;
                for (const Attractor& a : graph.attractors()) fixed += a.cycle.size() == 1 ? 1 : 0;
                CHECK(fixed == oracle.size());

                for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
                    const State start(n, s);
                    const Trajectory t = trajectory(net, start, params, std::size_t{1} << n);
                    REQUIRE(t.cycle_start.has_value());
                    const auto& cycle = graph.attractors()[graph.attractor_of(start)].cycle;
                    CHECK(std::find(cycle.begin(), cycle.end(), t.states.back()) != cycle.end());
                    CHECK(t.cycle_length == cycle.size());
                }
            }
        }
    }
}
