#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "operon/boolnet/dynamics.hpp"

namespace operon::boolnet {

/// Largest variable count for a full state-space expansion.
inline constexpr std::size_t kMaxGraphVars = 24;

struct Attractor {
    std::vector<State> cycle; // starts at the lexicographically smallest member
    std::uint64_t basin_size = 0;
};

/// Functional graph of the synchronous update over all 2^n states.
class StateGraph {
public:
    StateGraph(std::size_t variables, std::vector<std::uint64_t> successors);

    std::size_t variables() const noexcept { return variables_; }
    std::size_t node_count() const noexcept { return successors_.size(); }
    State successor(const State& s) const;
    const std::vector<std::uint64_t>& successors() const noexcept { return successors_; }

    /// Sorted by (cycle length, smallest member).
    const std::vector<Attractor>& attractors() const noexcept { return attractors_; }
    /// Index into attractors() reached from `s`.
    std::size_t attractor_of(const State& s) const;

private:
    std::size_t variables_;
    std::vector<std::uint64_t> successors_;
    std::vector<std::uint32_t> basin_;
    std::vector<Attractor> attractors_;
};

/// Throws operon::LimitError beyond kMaxGraphVars variables.
StateGraph state_graph(const BooleanNetwork& net, const ParamSetting& params);

std::string to_dot(const StateGraph& graph, const std::string& name = "states");
nlohmann::json adjacency_json(const StateGraph& graph);
nlohmann::json attractor_json(const StateGraph& graph);

} // namespace operon::boolnet
