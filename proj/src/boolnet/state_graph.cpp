#include "operon/boolnet/state_graph.hpp"

#include <algorithm>
#include <limits>

#include "operon/error.hpp"
#include "operon/parallel.hpp"

namespace operon::boolnet {

StateGraph::StateGraph(std::size_t variables, std::vector<std::uint64_t> successors)
    : variables_(variables), successors_(std::move(successors)) {
    if (variables_ > kMaxGraphVars) throw LimitError("state graph supports at most 24 variables");
    if (successors_.size() != (std::size_t{1} << variables_)) throw Error("successor map must cover all states");

    constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
    constexpr std::uint32_t on_path = unvisited - 1;
    basin_.assign(successors_.size(), unvisited);

    std::vector<Attractor> found;
    std::vector<std::uint64_t> path;
    for (std::uint64_t s = 0; s < successors_.size(); ++s) {
        if (basin_[s] != unvisited) continue;
        path.clear();
        std::uint64_t cur = s;
        while (basin_[cur] == unvisited) {
            basin_[cur] = on_path;
            path.push_back(cur);
            cur = successors_[cur];
        }
        std::uint32_t id = basin_[cur];
        if (id == on_path) {
            // New cycle: members are the path suffix starting at `cur`.
            id = static_cast<std::uint32_t>(found.size());
            Attractor a;
            auto first = std::find(path.begin(), path.end(), cur);
            std::vector<State> members;
            for (auto it = first; it != path.end(); ++it) members.emplace_back(variables_, *it);
            const auto smallest = std::min_element(members.begin(), members.end());
            std::uint64_t m = smallest->bits();
            for (std::size_t k = 0; k < members.size(); ++k) {
                a.cycle.emplace_back(variables_, m);
                m = successors_[m];
            }
            found.push_back(std::move(a));
        }
        for (std::uint64_t p : path) basin_[p] = id;
    }
    for (std::uint32_t id : basin_) ++found[id].basin_size;

    std::vector<std::uint32_t> order(found.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (found[a].cycle.size() != found[b].cycle.size()) return found[a].cycle.size() < found[b].cycle.size();
        return found[a].cycle.front() < found[b].cycle.front();
    });
    std::vector<std::uint32_t> rank(found.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) {
        rank[order[i]] = i;
        attractors_.push_back(std::move(found[order[i]]));
    }
    for (std::uint32_t& id : basin_) id = rank[id];
}

State StateGraph::successor(const State& s) const {
    if (s.size() != variables_) throw Error("state dimension mismatch");
    return State(variables_, successors_[s.bits()]);
}

std::size_t StateGraph::attractor_of(const State& s) const {
    if (s.size() != variables_) throw Error("state dimension mismatch");
    return basin_[s.bits()];
}

StateGraph state_graph(const BooleanNetwork& net, const ParamSetting& params) {
    if (net.size() > kMaxGraphVars) {
        throw LimitError("state graph supports at most " + std::to_string(kMaxGraphVars) + " variables");
    }
    const CompiledNetwork compiled(net, params);
    std::vector<std::uint64_t> successors(std::size_t{1} << net.size());
    parallel_for(successors.size(), [&](std::size_t s) { successors[s] = compiled.successor(s); });
    return StateGraph(net.size(), std::move(successors));
}

std::string to_dot(const StateGraph& graph, const std::string& name) {
    std::string out = "digraph \"" + name + "\" {\n";
    for (std::uint64_t s = 0; s < graph.node_count(); ++s) {
        out += "  \"" + State(graph.variables(), s).to_string() + "\" -> \"" +
               State(graph.variables(), graph.successors()[s]).to_string() + "\";\n";
    }
    out += "}\n";
    return out;
}

nlohmann::json adjacency_json(const StateGraph& graph) {
    nlohmann::json edges = nlohmann::json::object();
    for (std::uint64_t s = 0; s < graph.node_count(); ++s) {
        edges[State(graph.variables(), s).to_string()] = State(graph.variables(), graph.successors()[s]).to_string();
    }
    return edges;
}

nlohmann::json attractor_json(const StateGraph& graph) {
    nlohmann::json out = nlohmann::json::array();
    for (const Attractor& a : graph.attractors()) {
        nlohmann::json cycle = nlohmann::json::array();
        for (const State& s : a.cycle) cycle.push_back(s.to_string());
        out.push_back({{"cycle", cycle}, {"basin_size", a.basin_size}});
    }
    return out;
}

} // namespace operon::boolnet
