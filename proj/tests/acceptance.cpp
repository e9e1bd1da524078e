// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "operon/boolnet/dynamics.hpp"
#include "operon/boolnet/network.hpp"
#include "operon/boolnet/state_graph.hpp"
#include "operon/cli/app.hpp"
#include "operon/exact/rat.hpp"
#include "operon/exact/rat_poly.hpp"
#include "operon/exact/resultant.hpp"
#include "operon/exact/roots.hpp"
#include "operon/gf2/expr.hpp"
#include "operon/groebner/groebner.hpp"
#include "operon/lac/model.hpp"
#include "support.hpp"

using namespace operon;
using exact::Rat;
using exact::RatPoly;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds; // 0: no runtime bound
    std::function<Verdict()> check;
};

std::string cli(const std::vector<std::string>& args, int* status = nullptr) {
    std::ostringstream out, err;
    const int rc = cli::run(args, out, err);
    if (status) *status = rc;
    return out.str();
}

const boolnet::BooleanNetwork& lac_network() {
    static const boolnet::BooleanNetwork net = boolnet::parse_network(test::read_model("lac.bn"));
    return net;
}

Verdict boolean_fixed_points() {
    Verdict v;
    int status = -1;
    const std::string out = cli({"fixed-points", test::model_path("lac.bn"), "--all-params"}, &status);
    v.require(status == 0, "exit status " + std::to_string(status));
    v.require(out == "a=0,g=0: 000110000\na=0,g=1: 000010000\na=1,g=0: 111101111\na=1,g=1: 000010000\n",
              "unexpected table:\n" + out);
    const std::pair<const char*, const char*> table[] = {
        {"a=0,g=0", "000110000"}, {"a=0,g=1", "000010000"}, {"a=1,g=0", "111101111"}, {"a=1,g=1", "000010000"}};
    for (const auto& [params, expected] : table) {
        const auto fps = boolnet::fixed_points(lac_network(), boolnet::parse_param_setting(params, lac_network()));
        v.require(fps.size() == 1 && fps.front().to_string() == expected, std::string("library mismatch at ") + params);
    }
    return v;
}

Verdict global_attractor() {
    Verdict v;
    for (const auto& params : boolnet::all_param_settings(lac_network())) {
        const auto graph = boolnet::state_graph(lac_network(), params);
        const auto fps = boolnet::fixed_points(lac_network(), params);
        const std::string label = boolnet::to_string(params);
        v.require(graph.node_count() == 512, label + ": node count");
        v.require(graph.attractors().size() == 1, label + ": attractor count");
        if (graph.attractors().size() != 1) continue;
        const auto& only = graph.attractors().front();
        v.require(only.cycle == fps, label + ": attractor differs from the fixed point");
        v.require(only.basin_size == 512, label + ": basin size " + std::to_string(only.basin_size));
    }
    return v;
}

Verdict groebner_golden() {
    Verdict v;
    const auto system = groebner::parse_system(test::read_model("lac_fixed_point.gf2"));
    const std::set<std::string> expected{"x5",     "x1 + 1", "x2 + 1", "x3 + 1", "x4 + 1",
                                         "x6 + 1", "x7 + 1", "x8 + 1", "x9 + 1"};
    for (const gf2::MonomialOrder& order : {gf2::MonomialOrder::lex(), gf2::MonomialOrder::degrevlex()}) {
        const auto gb = groebner::buchberger_reduced(system, order);
        std::set<std::string> got;
        for (const auto& p : gb.polys()) got.insert(gf2::to_string(p, order));
        v.require(got == expected && gb.size() == 9,
                  std::string("basis mismatch under ") + (order.kind() == gf2::OrderKind::lex ? "lex" : "degrevlex"));
    }
    const auto sols = groebner::solve_boolean_system(system, groebner::SolveMethod::groebner);
    v.require(sols.size() == 1 && sols.front().to_string() == "111101111", "solution mismatch");
    return v;
}

Verdict oracle_equivalence() {
    Verdict v;
    test::Rng rng(0xACCE97);
    int cases = 0, mismatches = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 12; ++trial, ++cases) {
            const auto system = test::random_system(rng, n, trial % 2 == 0);
            if (groebner::solve_boolean_system(system, groebner::SolveMethod::groebner) !=
                groebner::solve_boolean_system(system, groebner::SolveMethod::enumerate)) {
                ++mismatches;
            }
        }
    }
    v.require(cases >= 100, "too few cases");
    v.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    v.detail = v.pass ? std::to_string(cases) + " systems" : v.detail;
    return v;
}

Verdict eliminant_golden() {
    Verdict v;
    const exact::BiPoly e = lac::eliminate_M(lac::LacParams{});
    const std::string printed = exact::to_string(e);
    const std::string negated = exact::to_string(exact::BiPoly(-e));
    const std::string golden = "4*A^7 + (29 - 21*L)*A^6 - 42*L*A^5 + 4*A^2 + (9 - L)*A - 2*L";
    v.require(printed == golden || negated == golden, "got " + printed);
    return v;
}

Verdict discriminant_roots() {
    Verdict v;
    const lac::LacParams p;
    const RatPoly disc = lac::lactose_discriminant(p);
    v.require(disc.degree() == 12, "degree " + std::to_string(disc.degree()));
    const auto boxes = exact::isolate_real_roots(disc, exact::Region::positive, lac::default_precision());
    v.require(boxes.size() == 2, std::to_string(boxes.size()) + " positive roots");
    const double golden[] = {0.68454, 1.51054};
    for (std::size_t i = 0; i < boxes.size() && i < 2; ++i) {
        const bool ok = std::abs(boxes[i].lo.get_d() - golden[i]) < 1e-4 && std::abs(boxes[i].hi.get_d() - golden[i]) < 1e-4;
        v.require(ok, "root " + std::to_string(i + 1) + " at " + exact::to_decimal(boxes[i].midpoint(), 6));
    }
    if (v.pass) {
        v.detail = "L1 = " + exact::to_decimal(boxes[0].midpoint(), 5) + ", L2 = " + exact::to_decimal(boxes[1].midpoint(), 5);
    }
    return v;
}

Verdict steady_states_at_one() {
    Verdict v;
    const lac::LacParams p;
    const auto states = lac::steady_states_at(p, Rat(1), exact::pow10_neg(12));
    v.require(states.size() == 3, std::to_string(states.size()) + " states");
    const double golden[3][3] = {{0.2272, 0.0506, 0.9994}, {0.6907, 0.1859, 0.8642}, {2.3717, 1.0368, 0.0132}};
    long double worst = 0;
    for (std::size_t i = 0; i < states.size() && i < 3; ++i) {
        const auto& s = states[i];
        const double got[3] = {s.A.midpoint().get_d(), s.M.midpoint().get_d(), s.R.midpoint().get_d()};
        for (int k = 0; k < 3; ++k) {
            v.require(std::abs(got[k] - golden[i][k]) < 1e-3, "state " + std::to_string(i + 1) + " coordinate " +
                                                                  std::to_string(k) + " = " + std::to_string(got[k]));
        }
        v.require(s.A.hi - s.A.lo <= exact::pow10_neg(12), "interval wider than 1e-12");
        // Original equations, denominators intact.
        const long double A = s.A.midpoint().get_d(), M = s.M.midpoint().get_d(), L = 1;
        const long double R = 1.0L / (1.0L + std::pow(A, 5.0L));
        const long double eq1 = 0.05L + (1 - R) - M;
        const long double eq2 = M * L - 0.2L * A - M * A / (2 + A);
        worst = std::max({worst, std::abs(eq1), std::abs(eq2)});
    }
    v.require(worst < 1e-9L, "residual " + std::to_string(static_cast<double>(worst)));
    if (v.pass) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "max residual %.2Le", worst);
        v.detail = buf;
    }
    return v;
}

Verdict region_counts() {
    Verdict v;
    const lac::LacParams p;
    const std::pair<const char*, std::size_t> table[] = {{"1/2", 1}, {"2", 1}, {"0.7", 3}, {"1", 3}, {"1.5", 3}};
    for (const auto& [L, expected] : table) {
        const auto c = lac::steady_state_count(p, exact::parse_rat(L));
        v.require(c.count == expected && !c.boundary,
                  std::string("L = ") + L + " gave " + std::to_string(c.count));
    }
    return v;
}

Verdict quartic_claim() {
    Verdict v;
    const auto check = [&](const Rat& k1, const Rat& k2, std::size_t expected) {
        const RatPoly one = RatPoly::constant(Rat(1), "y");
        const exact::BiPoly f({RatPoly::constant(Rat(-1), "y"), RatPoly({Rat(0), k1}, "y"), one}, "x");
        const exact::BiPoly g({RatPoly({Rat(-1), Rat(0), Rat(1)}, "y"), RatPoly({Rat(0), k2}, "y")}, "x");
        const RatPoly res = exact::resultant(f, g, "x");
        const std::string label = "k1 = k2 = " + exact::to_string(k1);
        v.require(exact::count_real_roots(res) == expected, label + ": root count");
        for (const auto& box : exact::isolate_real_roots(res, exact::Region::all, exact::pow10_neg(12))) {
            const Rat y = box.midpoint();
            // k2 x + (1 - k1 k2) y^3 + (k1 k2 - k2^2 - 1) y = 0
            const Rat x = -((1 - k1 * k2) * y * y * y + (k1 * k2 - k2 * k2 - 1) * y) / k2;
            const Rat r1 = x * x + k1 * x * y - 1;
            const Rat r2 = k2 * x * y + y * y - 1;
            v.require(std::abs(r1.get_d()) < 1e-9 && std::abs(r2.get_d()) < 1e-9,
                      label + ": residual at y = " + exact::to_decimal(y, 6));
        }
    };
    check(exact::ratio(1, 2), exact::ratio(1, 2), 4);
    check(Rat(2), Rat(2), 2);
    return v;
}

Verdict property_suites() {
    Verdict v;
    test::Rng rng(0x5EED);

    int sturm_cases = 0;
    for (; sturm_cases < 200; ++sturm_cases) {
        const RatPoly p = test::random_rat_poly(rng, 1 + sturm_cases % 8);
        const auto boxes = exact::isolate_real_roots(p, exact::Region::all, exact::pow10_neg(4));
        const exact::SturmSequence sturm(p);
        bool ok = boxes.size() == exact::count_real_roots(p);
        for (const auto& b : boxes) {
            const int lo = sgn(exact::evaluate(sturm.squarefree(), b.lo));
            const int hi = sgn(exact::evaluate(sturm.squarefree(), b.hi));
            ok = ok && (b.exact ? lo == 0 : lo * hi < 0);
        }
        v.require(ok, "sturm/isolation disagreement on " + exact::to_string(p));
    }

    int expr_cases = 0;
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto names = test::var_names(n);
        auto vars = gf2::make_vars(names);
        for (int trial = 0; trial < 10; ++trial, ++expr_cases) {
            const gf2::Expr e = test::random_expr(rng, names, 5);
            const gf2::BoolPoly poly = gf2::translate_expr(e, vars);
            for (std::uint64_t point = 0; point < (std::uint64_t{1} << n); ++point) {
                const bool direct = e.evaluate([&](const std::string& name) {
                    return ((point >> vars->index(name)) & 1U) != 0;
                });
                if (direct != poly.eval(point)) {
                    v.require(false, "truth table mismatch on " + gf2::to_string(e));
                    break;
                }
            }
        }
    }

    int evaluations = 0;
    for (const auto& params : boolnet::all_param_settings(lac_network())) {
        const auto update = boolnet::update_polynomials(lac_network(), params);
        for (std::uint64_t s = 0; s < 512; ++s, ++evaluations) {
            const boolnet::State state(9, s);
            v.require(boolnet::step(lac_network(), state, params) == boolnet::step_polynomial(update, state),
                      "two-path mismatch at " + state.to_string());
        }
    }

    v.require(sturm_cases >= 200 && expr_cases >= 100 && evaluations == 2048, "case counts");
    if (v.pass) {
        v.detail = std::to_string(sturm_cases) + " sturm, " + std::to_string(expr_cases) + " expressions, " +
                   std::to_string(evaluations) + " steps";
    }
    return v;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Boolean fixed points for all parameter settings", 1.0, boolean_fixed_points},
        {2, "single global attractor with basin 512", 1.0, global_attractor},
        {3, "reduced Groebner basis and unique solution", 1.0, groebner_golden},
        {4, "groebner solving equals enumeration", 30.0, oracle_equivalence},
        {5, "eliminant in A and L", 1.0, eliminant_golden},
        {6, "lactose discriminant and critical values", 10.0, discriminant_roots},
        {7, "steady states at L = 1", 5.0, steady_states_at_one},
        {8, "steady-state counts per region", 0.0, region_counts},
        {9, "two-parameter quartic root counts", 0.0, quartic_claim},
        {10, "property suites", 0.0, property_suites},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        Verdict verdict;
        const auto start = std::chrono::steady_clock::now();
        try {
            verdict = c.check();
        } catch (const std::exception& e) {
            verdict.pass = false;
            verdict.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds >= c.budget_seconds) {
            verdict.pass = false;
            verdict.detail = "over the " + std::to_string(c.budget_seconds) + " s budget";
        }
        failures += verdict.pass ? 0 : 1;
        std::printf("%s  %2d  %-50s %8.3f s  %s\n", verdict.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                    verdict.detail.c_str());
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
