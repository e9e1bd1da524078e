#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "operon/boolnet/network.hpp"

namespace operon::boolnet {

/// Rules compiled against one parameter setting for repeated evaluation.
class CompiledNetwork {
public:
    CompiledNetwork(const BooleanNetwork& net, const ParamSetting& params);

    std::size_t size() const noexcept { return programs_.size(); }
    /// Packed successor of a packed state (bit i = variable i).
    std::uint64_t successor(std::uint64_t state) const;

private:
    enum class Code : std::uint8_t { push_false, push_true, push_var, negate, conj, excl, disj };
    struct Instr {
        Code code;
        std::uint8_t var;
    };
    std::vector<std::vector<Instr>> programs_;
};

/// Synchronous update by direct logic evaluation.
State step(const BooleanNetwork& net, const State& s, const ParamSetting& params);

/// Synchronous update through the translated polynomials.
State step_polynomial(std::span<const BoolPoly> update, const State& s);

struct Trajectory {
    std::vector<State> states;            // states[0] is the start state
    std::optional<std::size_t> cycle_start; // index where the cycle is entered
    std::size_t cycle_length = 0;
    bool truncated = false;                 // max_steps hit before any repeat

    std::size_t transient() const { return cycle_start.value_or(states.size()); }
};

/// Iterates until a state recurs or `max_steps` updates have been applied.
Trajectory trajectory(const BooleanNetwork& net, const State& start, const ParamSetting& params,
                      std::size_t max_steps);

enum class FixedPointMethod { enumerate, groebner };

/// States with step(s) == s, sorted lexicographically.
std::vector<State> fixed_points(const BooleanNetwork& net, const ParamSetting& params,
                                FixedPointMethod method = FixedPointMethod::groebner);

} // namespace operon::boolnet
