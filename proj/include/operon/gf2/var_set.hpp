#pragma once

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace operon::gf2 {

/// Maximum number of variables: one machine word per monomial.
inline constexpr std::size_t kMaxVars = 64;

/// Ordered, immutable list of variable names with an index <-> name bijection.
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::vector<std::string> names);
    VarSet(std::initializer_list<std::string> names)
        : VarSet(std::vector<std::string>(names)) {}

    std::size_t size() const noexcept { return names_.size(); }
    bool empty() const noexcept { return names_.empty(); }
    const std::string& name(std::size_t index) const { return names_.at(index); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    std::optional<std::size_t> find(std::string_view name) const;
    /// Throws operon::Error naming the identifier when absent.
    std::size_t index(std::string_view name) const;

    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarSet>(std::move(names));
}

/// Same pointer or structurally equal name lists.
inline bool same_vars(const VarSetPtr& a, const VarSetPtr& b) {
    return a == b || (a && b && *a == *b);
}

} // namespace operon::gf2
