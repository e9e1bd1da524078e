#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "operon/exact/rat_poly.hpp"

namespace operon::exact {

/// Signed remainder sequence of the squarefree part of a polynomial.
class SturmSequence {
public:
    /// Throws operon::Error on the zero polynomial.
    explicit SturmSequence(const RatPoly& p);

    const RatPoly& squarefree() const { return chain_.front(); }
    const std::vector<RatPoly>& chain() const noexcept { return chain_; }

    std::size_t variations(const Rat& x) const;
    /// Variations at +infinity (`positive`) or -infinity.
    std::size_t variations_at_infinity(bool positive) const;

    /// Distinct real roots in (lo, hi]; nullopt bounds mean -inf / +inf.
    std::size_t count(const std::optional<Rat>& lo, const std::optional<Rat>& hi) const;

private:
    std::vector<RatPoly> chain_;
};

/// 1 + max |a_i / a_d|: every real root lies strictly inside (-B, B).
Rat cauchy_bound(const RatPoly& p);

/// Number of distinct real roots in (lo, hi]; infinite bounds are replaced by
/// the Cauchy bound.
std::size_t count_real_roots(const RatPoly& p, const std::optional<Rat>& lo = std::nullopt,
                             const std::optional<Rat>& hi = std::nullopt);

/// Isolating interval for one real root.
struct RootBox {
    Rat lo;
    Rat hi;
    bool exact = false;   // lo == hi is a rational root
    int multiplicity = 1; // multiplicity in the queried polynomial

    Rat width() const { return Rat(hi - lo); }
    Rat midpoint() const { return Rat((lo + hi) / 2); }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

enum class Region { all, positive };

/// One box per distinct real root in the region, ascending and pairwise
/// disjoint, each of width <= precision. Works on the squarefree part, so
/// repeated roots are isolated once and their multiplicity is reported.
std::vector<RootBox> isolate_real_roots(const RatPoly& p, Region region, const Rat& precision);

/// Narrows an isolating box of `p` to width <= precision.
RootBox refine(const RatPoly& p, const RootBox& box, const Rat& precision);

} // namespace operon::exact
