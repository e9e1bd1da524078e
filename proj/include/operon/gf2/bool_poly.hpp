#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "operon/gf2/bit_vector.hpp"
#include "operon/gf2/monomial.hpp"
#include "operon/gf2/var_set.hpp"

namespace operon::gf2 {

/// Element of GF(2)[x1..xn]/(xi^2 + xi): a finite set of squarefree monomials.
///
/// The monomial set is kept sorted by raw bitset, so equality is structural.
/// Arithmetic requires both operands to share a VarSet; mismatches throw.
class BoolPoly {
public:
    explicit BoolPoly(VarSetPtr vars);
    /// Monomials occurring an even number of times cancel.
    BoolPoly(VarSetPtr vars, std::vector<BoolMonomial> monomials);

    static BoolPoly zero(VarSetPtr vars) { return BoolPoly(std::move(vars)); }
    static BoolPoly one(VarSetPtr vars);
    static BoolPoly variable(VarSetPtr vars, std::size_t index);
    static BoolPoly variable(VarSetPtr vars, std::string_view name);
    static BoolPoly constant(VarSetPtr vars, bool value) { return value ? one(std::move(vars)) : zero(std::move(vars)); }

    const VarSetPtr& vars() const noexcept { return vars_; }
    std::span<const BoolMonomial> monomials() const noexcept { return monomials_; }
    std::size_t term_count() const noexcept { return monomials_.size(); }
    bool is_zero() const noexcept { return monomials_.empty(); }
    bool is_one() const noexcept { return monomials_.size() == 1 && monomials_.front().is_one(); }
    bool contains(BoolMonomial m) const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// Bitset of variables that occur in some monomial.
    std::uint64_t support() const;

    /// The order-maximal monomial. Throws operon::Error on the zero polynomial.
    BoolMonomial leading_monomial(const MonomialOrder& order) const;

    /// Value at a packed 0/1 point (bit i = value of variable i).
    bool eval(std::uint64_t point) const;
    /// Throws when the point has fewer coordinates than the VarSet.
    bool eval(const BitVector& point) const;
    /// Throws naming the first occurring variable that has no value.
    bool eval(const std::map<std::string, bool>& point) const;

    /// Specializes one variable to a constant.
    BoolPoly substitute(std::size_t index, bool value) const;
    BoolPoly multiply(BoolMonomial m) const;

    friend BoolPoly operator+(const BoolPoly& p, const BoolPoly& q);
    friend BoolPoly operator*(const BoolPoly& p, const BoolPoly& q);
    BoolPoly& operator+=(const BoolPoly& q) { return *this = *this + q; }
    BoolPoly& operator*=(const BoolPoly& q) { return *this = *this * q; }

    friend bool operator==(const BoolPoly& p, const BoolPoly& q) {
        return same_vars(p.vars_, q.vars_) && p.monomials_ == q.monomials_;
    }

private:
    VarSetPtr vars_;
    std::vector<BoolMonomial> monomials_;
};

/// Order-independent operation names.
inline BoolPoly poly_add(const BoolPoly& p, const BoolPoly& q) { return p + q; }
inline BoolPoly poly_mul(const BoolPoly& p, const BoolPoly& q) { return p * q; }
inline bool poly_eval(const BoolPoly& p, const BitVector& point) { return p.eval(point); }
inline BoolMonomial leading_monomial(const BoolPoly& p, const MonomialOrder& order) {
    return p.leading_monomial(order);
}

/// Renders a monomial as `x1*x5`, or `1`.
std::string to_string(BoolMonomial m, const VarSet& vars);
/// Renders terms in descending order, e.g. `x1*x5 + x4 + 1`; zero is `0`.
std::string to_string(const BoolPoly& p, const MonomialOrder& order = MonomialOrder::degrevlex());

/// Sorts the monomials of `p` from largest to smallest under `order`.
std::vector<BoolMonomial> sorted_terms(const BoolPoly& p, const MonomialOrder& order);

} // namespace operon::gf2
