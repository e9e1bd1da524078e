#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace operon::exact {

/// Exact rational, always canonical (gcd(num, den) = 1, den > 0).
using Rat = mpq_class;
using Int = mpz_class;

/// Accepts `-3`, `1/20`, `0.7`, `1e-6`, `2.5E3`. Throws operon::ParseError.
Rat parse_rat(std::string_view text);

/// `num/den`, or just `num` for integers.
std::string to_string(const Rat& r);

/// Fixed-point rendering with `digits` fractional digits, rounding half to even.
std::string to_decimal(const Rat& r, int digits = 5);

/// Round to nearest with ties to even.
Int round_half_even(const Rat& r);

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline Rat exact_div(const Rat& a, const Rat& b) { return Rat(a / b); }
inline double to_double(const Rat& r) { return r.get_d(); }

/// num/den in canonical form.
inline Rat ratio(long num, long den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// 10^-k as an exact rational.
Rat pow10_neg(unsigned k);

} // namespace operon::exact
