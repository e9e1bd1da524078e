#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "operon/gf2/bit_vector.hpp"
#include "operon/gf2/bool_poly.hpp"

namespace operon::groebner {

using gf2::BitVector;
using gf2::BoolMonomial;
using gf2::BoolPoly;
using gf2::MonomialOrder;
using gf2::VarSetPtr;

/// Generators over one VarSet; zero generators are dropped on construction.
class PolySystem {
public:
    PolySystem(VarSetPtr vars, std::vector<BoolPoly> generators);

    const VarSetPtr& vars() const noexcept { return vars_; }
    const std::vector<BoolPoly>& generators() const noexcept { return generators_; }
    bool empty() const noexcept { return generators_.empty(); }

private:
    VarSetPtr vars_;
    std::vector<BoolPoly> generators_;
};

/// Reduced Gröbner basis of an ideal plus the field relations x^2 + x.
/// Sorted by leading monomial, largest first. The unit ideal is exactly {1}.
class GroebnerBasis {
public:
    GroebnerBasis(VarSetPtr vars, MonomialOrder order, std::vector<BoolPoly> polys)
        : vars_(std::move(vars)), order_(std::move(order)), polys_(std::move(polys)) {}

    const VarSetPtr& vars() const noexcept { return vars_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<BoolPoly>& polys() const noexcept { return polys_; }
    std::size_t size() const noexcept { return polys_.size(); }
    bool is_unit() const { return polys_.size() == 1 && polys_.front().is_one(); }

private:
    VarSetPtr vars_;
    MonomialOrder order_;
    std::vector<BoolPoly> polys_;
};

/// Full normal form of `p` modulo `basis` in the Boolean quotient ring.
BoolPoly reduce(const BoolPoly& p, std::span<const BoolPoly> basis, const MonomialOrder& order);

/// lcm/lm(f) * f + lcm/lm(g) * g. Throws operon::Error on a zero input.
BoolPoly s_polynomial(const BoolPoly& f, const BoolPoly& g, const MonomialOrder& order);

/// Buchberger completion in the quotient ring followed by inter-reduction.
GroebnerBasis buchberger_reduced(const PolySystem& system,
                                 const MonomialOrder& order = MonomialOrder::degrevlex());

enum class SolveMethod { enumerate, groebner };

/// Largest variable count accepted by exhaustive enumeration.
inline constexpr std::size_t kMaxEnumerateVars = 24;

/// All common zeros over GF(2), sorted lexicographically.
std::vector<BitVector> solve_boolean_system(const PolySystem& system, SolveMethod method);

/// Parses the system file format: a `vars:` header, then one polynomial per
/// line (`lhs = rhs` is accepted and read as lhs + rhs); `#` starts a comment.
PolySystem parse_system(std::string_view text);

} // namespace operon::groebner
