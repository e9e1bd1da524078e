#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "operon/exact/poly.hpp"

namespace operon::exact {

template <class R>
using Matrix = std::vector<std::vector<R>>;

/// Fraction-free (Bareiss) determinant over an integral domain with exact
/// division. Every intermediate division is exact, so no fractions appear
/// in the coefficient ring.
template <class R>
R determinant(Matrix<R> m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    for (const auto& row : m) {
        if (row.size() != n) throw Error("determinant of a non-square matrix");
    }
    bool negate = false;
    R previous(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (vanishes(m[k][k])) {
            std::size_t pivot = k + 1;
            while (pivot < n && vanishes(m[pivot][k])) ++pivot;
            if (pivot == n) return R{};
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R t = m[i][j] * m[k][k];
                t -= m[i][k] * m[k][j];
                m[i][j] = exact_div(t, previous);
            }
            m[i][k] = R{};
        }
        previous = m[k][k];
    }
    R det = std::move(m[n - 1][n - 1]);
    return negate ? R(-det) : det;
}

/// Sylvester matrix of f (degree m) and g (degree n): n shifted rows of f's
/// coefficients followed by m shifted rows of g's, highest degree first.
template <class R>
Matrix<R> sylvester_matrix(const Poly<R>& f, const Poly<R>& g) {
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    const std::size_t size = m + n;
    Matrix<R> s(size, std::vector<R>(size));
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t k = 0; k <= m; ++k) s[row][row + k] = f.coeffs()[m - k];
    }
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t k = 0; k <= n; ++k) s[n + row][row + k] = g.coeffs()[n - k];
    }
    return s;
}

/// Res(f, g) with respect to the main variable, as the Sylvester determinant.
/// Throws when both inputs are constant in the main variable.
template <class R>
R resultant(const Poly<R>& f, const Poly<R>& g) {
    if (f.degree() < 1 && g.degree() < 1) throw Error("resultant needs a positive degree in the eliminated variable");
    if (f.is_zero() || g.is_zero()) return R{};
    return determinant(sylvester_matrix(f, g));
}

/// Res(f, g) eliminating `wrt`, which may be either variable of a bivariate
/// polynomial. The result is a polynomial in the remaining variable.
inline RatPoly resultant(const BiPoly& f, const BiPoly& g, std::string_view wrt) {
    auto inner = [](const BiPoly& p) -> std::string_view {
        for (const RatPoly& c : p.coeffs()) {
            if (!c.var().empty()) return c.var();
        }
        return {};
    };
    if (wrt == f.var() || wrt == g.var()) return resultant(f, g);
    if (wrt == inner(f) || wrt == inner(g)) return resultant(swap_variables(f), swap_variables(g));
    throw Error("unknown elimination variable '" + std::string(wrt) + "'");
}

/// (-1)^(d(d-1)/2) Res(f, f') / lc(f), d = deg f. Throws when d < 2.
template <class R>
R discriminant(const Poly<R>& f) {
    const int d = f.degree();
    if (d < 2) throw Error("discriminant needs degree at least 2");
    R res = exact_div(resultant(f, derivative(f)), f.leading());
    if ((d * (d - 1) / 2) % 2 == 1) res = -res;
    return res;
}

} // namespace operon::exact
