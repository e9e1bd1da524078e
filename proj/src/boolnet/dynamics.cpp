#include "operon/boolnet/dynamics.hpp"

#include <unordered_map>

#include "operon/error.hpp"

namespace operon::boolnet {

CompiledNetwork::CompiledNetwork(const BooleanNetwork& net, const ParamSetting& params) {
    net.check(params);
    programs_.reserve(net.size());
    for (const Expr& rule : net.rules()) {
        std::vector<Instr> program;
        // Post-order emission; the evaluation stack mirrors the tree depth.
        auto emit = [&](auto&& self, const Expr& e) -> void {
            switch (e.op()) {
            case gf2::ExprOp::constant: program.push_back({e.value() ? Code::push_true : Code::push_false, 0}); break;
            case gf2::ExprOp::variable:
                if (auto p = params.values.find(e.name()); p != params.values.end()) {
                    program.push_back({p->second ? Code::push_true : Code::push_false, 0});
                } else {
                    program.push_back({Code::push_var, static_cast<std::uint8_t>(net.vars()->index(e.name()))});
                }
                break;
            case gf2::ExprOp::negation:
                self(self, e.operand());
                program.push_back({Code::negate, 0});
                break;
            case gf2::ExprOp::conjunction:
            case gf2::ExprOp::exclusive:
            case gf2::ExprOp::disjunction:
                self(self, e.lhs());
                self(self, e.rhs());
                program.push_back({e.op() == gf2::ExprOp::conjunction ? Code::conj
                                   : e.op() == gf2::ExprOp::exclusive ? Code::excl
                                                                       : Code::disj,
                                   0});
                break;
            }
        };
        emit(emit, rule);
        programs_.push_back(std::move(program));
    }
}

std::uint64_t CompiledNetwork::successor(std::uint64_t state) const {
    std::uint64_t next = 0;
    std::vector<bool> stack;
    for (std::size_t i = 0; i < programs_.size(); ++i) {
        stack.clear();
        for (const Instr& in : programs_[i]) {
            switch (in.code) {
            case Code::push_false: stack.push_back(false); break;
            case Code::push_true: stack.push_back(true); break;
            case Code::push_var: stack.push_back((state >> in.var) & 1U); break;
            case Code::negate: stack.back() = !stack.back(); break;
            default: {
                const bool rhs = stack.back();
                stack.pop_back();
                const bool lhs = stack.back();
                stack.back() = in.code == Code::conj ? (lhs && rhs) : in.code == Code::excl ? (lhs != rhs) : (lhs || rhs);
            }
            }
        }
        if (stack.back()) next |= std::uint64_t{1} << i;
    }
    return next;
}

State step(const BooleanNetwork& net, const State& s, const ParamSetting& params) {
    net.check(s);
    return State(net.size(), CompiledNetwork(net, params).successor(s.bits()));
}

State step_polynomial(std::span<const BoolPoly> update, const State& s) {
    if (s.size() != update.size()) throw Error("state dimension does not match the update functions");
    std::uint64_t next = 0;
    for (std::size_t i = 0; i < update.size(); ++i) {
        if (update[i].eval(s)) next |= std::uint64_t{1} << i;
    }
    return State(s.size(), next);
}

Trajectory trajectory(const BooleanNetwork& net, const State& start, const ParamSetting& params,
                      std::size_t max_steps) {
    net.check(start);
    if (max_steps == 0) throw Error("max_steps must be at least 1");
    const CompiledNetwork compiled(net, params);
    Trajectory out;
    std::unordered_map<std::uint64_t, std::size_t> seen;
    out.states.push_back(start);
    seen.emplace(start.bits(), 0);
    std::uint64_t current = start.bits();
    for (std::size_t k = 0; k < max_steps; ++k) {
        current = compiled.successor(current);
        if (auto it = seen.find(current); it != seen.end()) {
            out.cycle_start = it->second;
            out.cycle_length = out.states.size() - it->second;
            return out;
        }
        seen.emplace(current, out.states.size());
        out.states.emplace_back(net.size(), current);
    }
    out.truncated = true;
    return out;
}

std::vector<State> fixed_points(const BooleanNetwork& net, const ParamSetting& params, FixedPointMethod method) {
    if (method == FixedPointMethod::groebner) {
        return groebner::solve_boolean_system(to_polynomial_system(net, params), groebner::SolveMethod::groebner);
    }
    if (net.size() > groebner::kMaxEnumerateVars) {
        throw LimitError("enumeration supports at most " + std::to_string(groebner::kMaxEnumerateVars) +
                         " variables; use the groebner method");
    }
    const CompiledNetwork compiled(net, params);
    std::vector<State> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << net.size()); ++s) {
        if (compiled.successor(s) == s) out.emplace_back(net.size(), s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace operon::boolnet
