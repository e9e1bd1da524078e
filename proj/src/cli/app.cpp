#include "operon/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "operon/boolnet/state_graph.hpp"
#include "operon/error.hpp"
#include "operon/exact/rat_poly.hpp"
#include "operon/groebner/groebner.hpp"
#include "operon/lac/model.hpp"

namespace operon::cli {
namespace {

/// Bad flag value; maps to exit status 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write '" + path + "'");
    file << text;
}

template <class F>
auto as_usage(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

exact::Rat parse_positive_rat(const std::string& text, const std::string& flag) {
    const exact::Rat r = as_usage([&] { return exact::parse_rat(text); });
    if (sgn(r) <= 0) throw UsageError(flag + " must be positive");
    return r;
}

std::string setting_label(const boolnet::BooleanNetwork& net, const boolnet::ParamSetting& s) {
    std::string out;
    for (const std::string& p : net.params()) {
        if (!out.empty()) out += ',';
        out += p + '=' + (s.values.at(p) ? '1' : '0');
    }
    return out.empty() ? "-" : out;
}

nlohmann::json setting_json(const boolnet::BooleanNetwork& net, const boolnet::ParamSetting& s) {
    nlohmann::json out = nlohmann::json::object();
    for (const std::string& p : net.params()) out[p] = s.values.at(p) ? 1 : 0;
    return out;
}

nlohmann::json states_json(const std::vector<boolnet::State>& states) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : states) out.push_back(s.to_string());
    return out;
}

std::string join_states(const std::vector<boolnet::State>& states) {
    std::string out;
    for (const auto& s : states) {
        if (!out.empty()) out += ' ';
        out += s.to_string();
    }
    return out.empty() ? "(none)" : out;
}

boolnet::ParamSetting resolve_setting(const boolnet::BooleanNetwork& net, const std::string& text, bool given) {
    if (!given && !net.params().empty()) throw UsageError("--set is required for networks with parameters");
    return as_usage([&] { return boolnet::parse_param_setting(text, net); });
}

struct Options {
    std::string input;
    std::string order = "degrevlex";
    std::string method = "groebner";
    std::string set;
    bool all_params = false;
    bool json = false;
    std::string init;
    std::size_t steps = 0;
    std::string dot;
    std::string json_file;
    bool attractors = false;
    std::string range = "0.1:2.5";
    std::size_t samples = 100;
    std::string precision = "1e-6";
    std::string csv;
    std::string lactose;
    int digits = 5;
};

int cmd_groebner(const Options& o, std::ostream& out) {
    const auto system = groebner::parse_system(read_file(o.input));
    const gf2::MonomialOrder order = o.order == "lex" ? gf2::MonomialOrder::lex() : gf2::MonomialOrder::degrevlex();
    const auto basis = groebner::buchberger_reduced(system, order);
    for (const auto& g : basis.polys()) out << gf2::to_string(g, order) << '\n';
    return kSuccess;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const auto system = groebner::parse_system(read_file(o.input));
    const auto method = o.method == "enumerate" ? groebner::SolveMethod::enumerate : groebner::SolveMethod::groebner;
    const auto solutions = groebner::solve_boolean_system(system, method);
    if (o.json) {
        out << states_json(solutions).dump() << '\n';
    } else {
        for (const auto& s : solutions) out << s.to_string() << '\n';
        if (solutions.empty()) out << "no solutions\n";
    }
    return kSuccess;
}

int cmd_fixed_points(const Options& o, bool set_given, std::ostream& out) {
    const auto net = boolnet::parse_network(read_file(o.input));
    if (set_given == o.all_params) throw UsageError("exactly one of --set or --all-params is required");
    const auto method =
        o.method == "enumerate" ? boolnet::FixedPointMethod::enumerate : boolnet::FixedPointMethod::groebner;
    const auto settings = o.all_params ? boolnet::all_param_settings(net)
                                       : std::vector{resolve_setting(net, o.set, set_given)};
    if (!o.all_params) {
        const auto fps = boolnet::fixed_points(net, settings.front(), method);
        if (o.json) {
            out << states_json(fps).dump() << '\n';
        } else {
            for (const auto& s : fps) out << s.to_string() << '\n';
        }
        return kSuccess;
    }
    nlohmann::json report = nlohmann::json::array();
    for (const auto& setting : settings) {
        const auto fps = boolnet::fixed_points(net, setting, method);
        if (o.json) {
            report.push_back({{"params", setting_json(net, setting)}, {"fixed_points", states_json(fps)}});
        } else {
            out << setting_label(net, setting) << ": " << join_states(fps) << '\n';
        }
    }
    if (o.json) out << report.dump() << '\n';
    return kSuccess;
}

int cmd_simulate(const Options& o, bool set_given, bool steps_given, std::ostream& out) {
    const auto net = boolnet::parse_network(read_file(o.input));
    const auto setting = resolve_setting(net, o.set, set_given);
    const auto start = as_usage([&] { return gf2::BitVector::parse(o.init); });
    if (start.size() != net.size()) {
        throw UsageError("--init needs " + std::to_string(net.size()) + " bits in declaration order");
    }
    if (steps_given && o.steps == 0) throw UsageError("--steps must be at least 1");
    std::size_t steps = o.steps;
    if (!steps_given) steps = net.size() >= 24 ? (std::size_t{1} << 24) : (std::size_t{1} << net.size()) + 1;

    const auto traj = boolnet::trajectory(net, start, setting, steps);
    for (std::size_t k = 0; k < traj.states.size(); ++k) out << k << ' ' << traj.states[k].to_string() << '\n';
    if (traj.truncated) {
        out << "truncated after " << steps << " steps without a repeated state\n";
    } else if (traj.cycle_length == 1) {
        out << "fixed point reached at step " << *traj.cycle_start << '\n';
    } else {
        out << "cycle of length " << traj.cycle_length << " entered at step " << *traj.cycle_start << '\n';
    }
    return kSuccess;
}

int cmd_state_graph(const Options& o, bool set_given, std::ostream& out) {
    const auto net = boolnet::parse_network(read_file(o.input));
    const auto setting = resolve_setting(net, o.set, set_given);
    const auto graph = boolnet::state_graph(net, setting);
    if (!o.dot.empty()) write_output(o.dot, boolnet::to_dot(graph, net.name()), out);
    if (!o.json_file.empty()) write_output(o.json_file, boolnet::adjacency_json(graph).dump(2) + "\n", out);
    if (o.attractors) {
        out << boolnet::attractor_json(graph).dump() << '\n';
    } else if (o.dot != "-" && o.json_file != "-") {
        out << "states: " << graph.node_count() << '\n';
        out << "attractors: " << graph.attractors().size() << '\n';
        for (const auto& a : graph.attractors()) {
            out << "cycle " << join_states(a.cycle) << " basin " << a.basin_size << '\n';
        }
    }
    return kSuccess;
}

int cmd_ode_eliminate(const Options& o, std::ostream& out) {
    const auto params = lac::parse_params(read_file(o.input));
    if (params.L) {
        out << exact::to_string(lac::eliminant_at(params, *params.L).with_var("A")) << '\n';
    } else {
        out << exact::to_string(lac::eliminate_M(params)) << '\n';
    }
    return kSuccess;
}

int cmd_ode_bifurcation(const Options& o, std::ostream& out) {
    const auto params = lac::parse_params(read_file(o.input));
    const exact::Rat precision = parse_positive_rat(o.precision, "--precision");
    const auto colon = o.range.find(':');
    if (colon == std::string::npos) throw UsageError("--range must look like lo:hi");
    const exact::Rat lo = parse_positive_rat(o.range.substr(0, colon), "--range lower bound");
    const exact::Rat hi = parse_positive_rat(o.range.substr(colon + 1), "--range upper bound");
    if (lo >= hi) throw UsageError("--range needs lo < hi");
    if (o.samples < 2) throw UsageError("--samples must be at least 2");

    const lac::SteadyStateAnalysis analysis(params, precision);
    const auto report = analysis.bifurcation(lo, hi, o.samples, precision);
    const int d = o.digits;
    out << "eliminant: " << exact::to_string(analysis.eliminant()) << '\n';
    out << "discriminant degree: " << analysis.discriminant().degree() << '\n';
    out << "critical values: " << report.critical.size() << '\n';
    for (std::size_t i = 0; i < report.critical.size(); ++i) {
        const auto& b = report.critical[i];
        out << "  L" << i + 1 << " = " << exact::to_decimal(b.midpoint(), d) << "  in ["
            << exact::to_string(b.lo) << ", " << exact::to_string(b.hi) << "]\n";
    }
    out << "regions:\n";
    for (const auto& r : report.regions) {
        out << "  (" << exact::to_decimal(r.lo, d) << ", " << (r.hi ? exact::to_decimal(*r.hi, d) : "inf")
            << "): " << r.count << " positive steady state" << (r.count == 1 ? "" : "s") << '\n';
    }
    if (!o.csv.empty()) write_output(o.csv, lac::to_csv(report, d), out);
    return kSuccess;
}

int cmd_ode_steady_states(const Options& o, std::ostream& out, std::ostream& err) {
    auto params = lac::parse_params(read_file(o.input));
    const exact::Rat L = parse_positive_rat(o.lactose, "--L");
    const exact::Rat precision = parse_positive_rat(o.precision, "--precision");
    const lac::SteadyStateAnalysis analysis(params, precision);
    if (analysis.count(L).boundary) {
        err << "warning: L lies on a critical value at this precision; the count may be ill-posed\n";
    }
    out << lac::to_json(analysis.steady_states(L, precision), o.digits).dump(2) << '\n';
    return kSuccess;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Steady states of Boolean and continuous lac operon models", "operon"};
    app.set_version_flag("--version", std::string("operon ") + kVersion);
    app.require_subcommand(1);
    Options o;

    auto* groebner_cmd = app.add_subcommand("groebner", "Reduced Groebner basis of a GF(2) system file");
    groebner_cmd->add_option("system", o.input, "System file (.gf2)")->required();
    groebner_cmd->add_option("--order", o.order, "Monomial order")->check(CLI::IsMember({"lex", "degrevlex"}));

    auto* solve_cmd = app.add_subcommand("solve", "All 0/1 solutions of a GF(2) system file");
    solve_cmd->add_option("system", o.input, "System file (.gf2)")->required();
    solve_cmd->add_option("--method", o.method, "Solver")->check(CLI::IsMember({"groebner", "enumerate"}));
    solve_cmd->add_flag("--json", o.json, "JSON array of bit strings");

    auto* fp_cmd = app.add_subcommand("fixed-points", "Fixed points of a Boolean network");
    fp_cmd->add_option("model", o.input, "Network file (.bn)")->required();
    auto* fp_set = fp_cmd->add_option("--set", o.set, "Parameter values, e.g. a=1,g=0");
    fp_cmd->add_flag("--all-params", o.all_params, "Iterate every parameter setting in binary order");
    fp_cmd->add_option("--method", o.method, "Solver")->check(CLI::IsMember({"groebner", "enumerate"}));
    fp_cmd->add_flag("--json", o.json, "JSON output");

    auto* sim_cmd = app.add_subcommand("simulate", "Synchronous trajectory from an initial state");
    sim_cmd->add_option("model", o.input, "Network file (.bn)")->required();
    auto* sim_set = sim_cmd->add_option("--set", o.set, "Parameter values, e.g. a=1,g=0");
    sim_cmd->add_option("--init", o.init, "Initial state as bits in declaration order")->required();
    auto* sim_steps = sim_cmd->add_option("--steps", o.steps, "Maximum number of updates");

    auto* sg_cmd = app.add_subcommand("state-graph", "Full state transition graph and attractors");
    sg_cmd->add_option("model", o.input, "Network file (.bn)")->required();
    auto* sg_set = sg_cmd->add_option("--set", o.set, "Parameter values, e.g. a=1,g=0");
    sg_cmd->add_option("--dot", o.dot, "Write the graph as DOT ('-' for stdout)");
    sg_cmd->add_option("--json", o.json_file, "Write the successor map as JSON ('-' for stdout)");
    sg_cmd->add_flag("--attractors", o.attractors, "Print the attractor report as JSON");

    auto* ode_cmd = app.add_subcommand("ode", "Continuous model analysis");
    ode_cmd->require_subcommand(1);
    auto* elim_cmd = ode_cmd->add_subcommand("eliminate", "Eliminate M from the steady-state equations");
    elim_cmd->add_option("model", o.input, "Model file (.ode)")->required();
    auto* bif_cmd = ode_cmd->add_subcommand("bifurcation", "Critical lactose values and steady-state branches");
    bif_cmd->add_option("model", o.input, "Model file (.ode)")->required();
    bif_cmd->add_option("--range", o.range, "Lactose sample range lo:hi");
    bif_cmd->add_option("--samples", o.samples, "Number of lactose samples");
    bif_cmd->add_option("--precision", o.precision, "Root interval width");
    bif_cmd->add_option("--csv", o.csv, "Write L,A,branch,region_count rows ('-' for stdout)");
    bif_cmd->add_option("--digits", o.digits, "Decimal digits")->check(CLI::Range(0, 40));
    auto* ss_cmd = ode_cmd->add_subcommand("steady-states", "Positive steady states at one lactose value");
    ss_cmd->add_option("model", o.input, "Model file (.ode)")->required();
    ss_cmd->add_option("--L", o.lactose, "Lactose value (exact rational)")->required();
    ss_cmd->add_option("--precision", o.precision, "Root interval width");
    ss_cmd->add_option("--digits", o.digits, "Decimal digits")->check(CLI::Range(0, 40));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        const CLI::App* active = &app;
        for (CLI::App* sub : app.get_subcommands()) {
            active = sub;
            for (CLI::App* inner : sub->get_subcommands()) active = inner;
        }
        err << active->help();
        return kUsageError;
    }

    try {
        if (groebner_cmd->parsed()) return cmd_groebner(o, out);
        if (solve_cmd->parsed()) return cmd_solve(o, out);
        if (fp_cmd->parsed()) return cmd_fixed_points(o, fp_set->count() > 0, out);
        if (sim_cmd->parsed()) return cmd_simulate(o, sim_set->count() > 0, sim_steps->count() > 0, out);
        if (sg_cmd->parsed()) return cmd_state_graph(o, sg_set->count() > 0, out);
        if (elim_cmd->parsed()) return cmd_ode_eliminate(o, out);
        if (bif_cmd->parsed()) return cmd_ode_bifurcation(o, out);
        if (ss_cmd->parsed()) return cmd_ode_steady_states(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
    err << app.help();
    return kUsageError;
}

} // namespace operon::cli
