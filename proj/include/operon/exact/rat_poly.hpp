#pragma once

#include <string>
#include <utility>
#include <vector>

#include "operon/exact/poly.hpp"

namespace operon::exact {

/// Quotient and remainder over Q. Throws operon::Error when q = 0.
std::pair<RatPoly, RatPoly> divrem(const RatPoly& p, const RatPoly& q);

/// Monic greatest common divisor; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& p, const RatPoly& q);

/// p / gcd(p, p'), primitive. Same distinct roots as p, all simple.
RatPoly squarefree_part(const RatPoly& p);

RatPoly monic(const RatPoly& p);

double evaluate(const RatPoly& p, double x);
long double evaluate(const RatPoly& p, long double x);
double evaluate(const BiPoly& p, double main, double inner);

/// Descending powers with `^` exponents and `*` products, e.g.
/// `4*A^7 + (29 - 21*L)*A^6 - 42*L*A^5`. Zero prints as `0`.
std::string to_string(const RatPoly& p);
std::string to_string(const BiPoly& p);
std::string to_string(const TriPoly& p);

} // namespace operon::exact
