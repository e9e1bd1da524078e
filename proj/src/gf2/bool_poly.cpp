#include "operon/gf2/bool_poly.hpp"

#include <algorithm>
#include <bit>

#include "operon/error.hpp"

namespace operon::gf2 {
namespace {

/// Sorts and drops pairs of equal monomials (coefficients live in GF(2)).
void canonicalize(std::vector<BoolMonomial>& ms) {
    std::sort(ms.begin(), ms.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < ms.size();) {
        std::size_t j = i;
        while (j < ms.size() && ms[j] == ms[i]) ++j;
        if ((j - i) % 2 == 1) ms[out++] = ms[i];
        i = j;
    }
    ms.resize(out);
}

void require_same(const BoolPoly& p, const BoolPoly& q) {
    if (!same_vars(p.vars(), q.vars())) throw Error("polynomials are over different variable sets");
}

} // namespace

BoolPoly::BoolPoly(VarSetPtr vars) : vars_(std::move(vars)) {
    if (!vars_) throw Error("null variable set");
}

BoolPoly::BoolPoly(VarSetPtr vars, std::vector<BoolMonomial> monomials)
    : vars_(std::move(vars)), monomials_(std::move(monomials)) {
    if (!vars_) throw Error("null variable set");
    const std::uint64_t allowed =
        vars_->size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vars_->size()) - 1;
    for (BoolMonomial m : monomials_) {
        if (m.bits() & ~allowed) throw Error("monomial uses a variable outside its variable set");
    }
    canonicalize(monomials_);
}

BoolPoly BoolPoly::one(VarSetPtr vars) {
    return BoolPoly(std::move(vars), {BoolMonomial::one()});
}

BoolPoly BoolPoly::variable(VarSetPtr vars, std::size_t index) {
    if (index >= vars->size()) throw Error("variable index out of range");
    return BoolPoly(std::move(vars), {BoolMonomial::var(index)});
}

BoolPoly BoolPoly::variable(VarSetPtr vars, std::string_view name) {
    const std::size_t index = vars->index(name);
    return variable(std::move(vars), index);
}

bool BoolPoly::contains(BoolMonomial m) const {
    return std::binary_search(monomials_.begin(), monomials_.end(), m);
}

int BoolPoly::degree() const {
    int d = -1;
    for (BoolMonomial m : monomials_) d = std::max(d, m.degree());
    return d;
}

std::uint64_t BoolPoly::support() const {
    std::uint64_t s = 0;
    for (BoolMonomial m : monomials_) s |= m.bits();
    return s;
}

BoolMonomial BoolPoly::leading_monomial(const MonomialOrder& order) const {
    if (is_zero()) throw Error("leading monomial of the zero polynomial");
    BoolMonomial best = monomials_.front();
    for (BoolMonomial m : monomials_) {
        if (order.less(best, m)) best = m;
    }
    return best;
}

bool BoolPoly::eval(std::uint64_t point) const {
    bool value = false;
    for (BoolMonomial m : monomials_) {
        if ((m.bits() & ~point) == 0) value = !value;
    }
    return value;
}

bool BoolPoly::eval(const BitVector& point) const {
    if (point.size() < vars_->size()) {
        throw Error("assignment covers " + std::to_string(point.size()) + " of " +
                    std::to_string(vars_->size()) + " variables");
    }
    return eval(point.bits());
}

bool BoolPoly::eval(const std::map<std::string, bool>& point) const {
    std::uint64_t packed = 0;
    std::uint64_t used = support();
    while (used != 0) {
        const auto v = static_cast<std::size_t>(std::countr_zero(used));
        used &= used - 1;
        auto it = point.find(vars_->name(v));
        if (it == point.end()) throw Error("no value assigned to variable '" + vars_->name(v) + "'");
        if (it->second) packed |= std::uint64_t{1} << v;
    }
    return eval(packed);
}

BoolPoly BoolPoly::substitute(std::size_t index, bool value) const {
    const std::uint64_t bit = std::uint64_t{1} << index;
    std::vector<BoolMonomial> out;
    out.reserve(monomials_.size());
    for (BoolMonomial m : monomials_) {
        if (!(m.bits() & bit)) {
            out.push_back(m);
        } else if (value) {
            out.emplace_back(m.bits() & ~bit);
        }
    }
    return BoolPoly(vars_, std::move(out));
}

BoolPoly BoolPoly::multiply(BoolMonomial m) const {
    std::vector<BoolMonomial> out;
    out.reserve(monomials_.size());
    for (BoolMonomial t : monomials_) out.push_back(t * m);
    return BoolPoly(vars_, std::move(out));
}

BoolPoly operator+(const BoolPoly& p, const BoolPoly& q) {
    require_same(p, q);
    std::vector<BoolMonomial> out;
    out.reserve(p.monomials_.size() + q.monomials_.size());
    std::set_symmetric_difference(p.monomials_.begin(), p.monomials_.end(), q.monomials_.begin(),
                                  q.monomials_.end(), std::back_inserter(out));
    BoolPoly r(p.vars_);
    r.monomials_ = std::move(out);
    return r;
}

BoolPoly operator*(const BoolPoly& p, const BoolPoly& q) {
    require_same(p, q);
    std::vector<BoolMonomial> out;
    out.reserve(p.monomials_.size() * q.monomials_.size());
    for (BoolMonomial a : p.monomials_) {
        for (BoolMonomial b : q.monomials_) out.push_back(a * b);
    }
    return BoolPoly(p.vars_, std::move(out));
}

std::string to_string(BoolMonomial m, const VarSet& vars) {
    if (m.is_one()) return "1";
    std::string out;
    std::uint64_t bits = m.bits();
    while (bits != 0) {
        const auto v = static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (!out.empty()) out += '*';
        out += vars.name(v);
    }
    return out;
}

std::vector<BoolMonomial> sorted_terms(const BoolPoly& p, const MonomialOrder& order) {
    std::vector<BoolMonomial> terms(p.monomials().begin(), p.monomials().end());
    std::sort(terms.begin(), terms.end(), [&](BoolMonomial a, BoolMonomial b) { return order.less(b, a); });
    return terms;
}

std::string to_string(const BoolPoly& p, const MonomialOrder& order) {
    if (p.is_zero()) return "0";
    std::string out;
    for (BoolMonomial m : sorted_terms(p, order)) {
        if (!out.empty()) out += " + ";
        out += to_string(m, *p.vars());
    }
    return out;
}

} // namespace operon::gf2
