#include "operon/gf2/var_set.hpp"

#include "operon/error.hpp"

namespace operon::gf2 {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxVars) {
        throw LimitError("at most " + std::to_string(kMaxVars) + " variables are supported, got " +
                         std::to_string(names_.size()));
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw Error("empty variable name");
        if (!index_.emplace(names_[i], i).second) {
            throw Error("duplicate variable '" + names_[i] + "'");
        }
    }
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t VarSet::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw Error("unknown variable '" + std::string(name) + "'");
}

} // namespace operon::gf2
