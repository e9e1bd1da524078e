#include "operon/gf2/monomial.hpp"

#include <algorithm>

#include "operon/error.hpp"
#include "operon/gf2/var_set.hpp"

namespace operon::gf2 {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
    if (priority_.size() > kMaxVars) throw LimitError("monomial order over more than 64 variables");
    std::vector<std::size_t> sorted = priority_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] != i) throw Error("variable priority must be a permutation of 0..n-1");
    }
    rank_.assign(kMaxVars, 0);
    // Variables not covered by the priority list keep index order below it.
    std::vector<bool> seen(kMaxVars, false);
    int bit = 63;
    for (std::size_t v : priority_) {
        rank_[v] = bit--;
        seen[v] = true;
    }
    for (std::size_t v = 0; v < kMaxVars; ++v) {
        if (!seen[v]) rank_[v] = bit--;
    }
}

std::uint64_t MonomialOrder::key(BoolMonomial m) const {
    std::uint64_t bits = m.bits();
    std::uint64_t out = 0;
    while (bits != 0) {
        const int v = std::countr_zero(bits);
        bits &= bits - 1;
        out |= std::uint64_t{1} << rank_[static_cast<std::size_t>(v)];
    }
    return out;
}

BoolMonomial MonomialOrder::from_key(std::uint64_t key) const {
    std::uint64_t out = 0;
    for (std::size_t v = 0; v < kMaxVars && key != 0; ++v) {
        const std::uint64_t bit = std::uint64_t{1} << rank_[v];
        if (key & bit) {
            out |= std::uint64_t{1} << v;
            key &= ~bit;
        }
    }
    return BoolMonomial{out};
}

} // namespace operon::gf2
