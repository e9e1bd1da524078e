#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "operon/error.hpp"
#include "operon/exact/rat.hpp"

namespace operon::exact {

template <class R>
class Poly;

inline bool vanishes(const Rat& r) { return sgn(r) == 0; }
template <class R>
bool vanishes(const Poly<R>& p) {
    return p.is_zero();
}

/// Dense univariate polynomial over a commutative ring R, lowest degree first,
/// in a named indeterminate. Nesting gives multivariate polynomials:
/// Poly<Poly<Rat>> is a polynomial in a main variable with coefficients that
/// are polynomials in a second variable.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients and degree -1.
template <class R>
class Poly {
public:
    using coeff_type = R;

    Poly() = default;
    explicit Poly(std::string var) : var_(std::move(var)) {}
    Poly(std::vector<R> coeffs, std::string var) : coeffs_(std::move(coeffs)), var_(std::move(var)) { trim(); }
    explicit Poly(int c) : coeffs_{R(c)} { trim(); }

    static Poly constant(R c, std::string var = {}) { return Poly(std::vector<R>{std::move(c)}, std::move(var)); }
    static Poly monomial(R c, std::size_t degree, std::string var) {
        std::vector<R> cs(degree + 1);
        cs[degree] = std::move(c);
        return Poly(std::move(cs), std::move(var));
    }
    /// The indeterminate itself.
    static Poly x(std::string var) { return monomial(R(1), 1, std::move(var)); }

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    const std::vector<R>& coeffs() const noexcept { return coeffs_; }
    const std::string& var() const noexcept { return var_; }

    const R& operator[](std::size_t k) const {
        static const R zero{};
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    const R& leading() const {
        if (coeffs_.empty()) throw Error("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    Poly with_var(std::string var) const { return Poly(coeffs_, std::move(var)); }

    Poly& operator+=(const Poly& q) {
        var_ = merge_var(*this, q);
        if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
        for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] += q.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& q) {
        var_ = merge_var(*this, q);
        if (coeffs_.size() < q.coeffs_.size()) coeffs_.resize(q.coeffs_.size());
        for (std::size_t k = 0; k < q.coeffs_.size(); ++k) coeffs_[k] -= q.coeffs_[k];
        trim();
        return *this;
    }
    Poly& operator*=(const Poly& q) { return *this = *this * q; }

    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator-(Poly p) {
        for (R& c : p.coeffs_) c = -c;
        return p;
    }
    friend Poly operator*(const Poly& p, const Poly& q) {
        std::string var = merge_var(p, q);
        if (p.is_zero() || q.is_zero()) return Poly(std::move(var));
        std::vector<R> out(p.coeffs_.size() + q.coeffs_.size() - 1);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (vanishes(p.coeffs_[i])) continue;
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[i + j] += p.coeffs_[i] * q.coeffs_[j];
        }
        return Poly(std::move(out), std::move(var));
    }
    /// Coefficient-wise scaling.
    friend Poly operator*(Poly p, const R& c) {
        for (R& x : p.coeffs_) x *= c;
        p.trim();
        return p;
    }
    friend Poly operator*(const R& c, Poly p) { return std::move(p) * c; }

    /// Structural equality of coefficients; the name only matters for
    /// non-constant polynomials.
    friend bool operator==(const Poly& p, const Poly& q) {
        if (p.coeffs_ != q.coeffs_) return false;
        return p.is_constant() || p.var_.empty() || q.var_.empty() || p.var_ == q.var_;
    }

private:
    static std::string merge_var(const Poly& a, const Poly& b) {
        if (a.var_.empty() || a.var_ == b.var_) return b.var_.empty() ? a.var_ : b.var_;
        if (b.var_.empty()) return a.var_;
        if (b.is_constant()) return a.var_;
        if (a.is_constant()) return b.var_;
        throw Error("polynomials in different indeterminates: " + a.var_ + " and " + b.var_);
    }

    void trim() {
        while (!coeffs_.empty() && vanishes(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<R> coeffs_;
    std::string var_;
};

using RatPoly = Poly<Rat>;
/// Polynomial in a main variable with RatPoly coefficients in a second one.
using BiPoly = Poly<RatPoly>;
/// Three nested variables; used when eliminating one unknown from a system
/// that still carries a symbolic parameter.
using TriPoly = Poly<BiPoly>;

/// Exact quotient a / b; throws operon::Error when b does not divide a.
template <class R>
Poly<R> exact_div(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw Error("division by the zero polynomial");
    if (a.is_zero()) return Poly<R>(a.var().empty() ? b.var() : a.var());
    if (a.degree() < b.degree()) throw Error("inexact polynomial division");
    std::vector<R> quotient(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    Poly<R> rest = a;
    while (!rest.is_zero() && rest.degree() >= b.degree()) {
        const auto k = static_cast<std::size_t>(rest.degree() - b.degree());
        R c = exact_div(rest.leading(), b.leading());
        rest -= Poly<R>::monomial(c, k, b.var()) * b;
        quotient[k] = std::move(c);
    }
    if (!rest.is_zero()) throw Error("inexact polynomial division");
    return Poly<R>(std::move(quotient), a.var().empty() ? b.var() : a.var());
}

/// Formal derivative in the main variable.
template <class R>
Poly<R> derivative(const Poly<R>& p) {
    std::vector<R> out;
    for (std::size_t k = 1; k < p.coeffs().size(); ++k) out.push_back(p.coeffs()[k] * R(static_cast<int>(k)));
    return Poly<R>(std::move(out), p.var());
}

/// Horner evaluation of the main variable at `x`.
template <class R>
R evaluate(const Poly<R>& p, const R& x) {
    R acc{};
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        acc *= x;
        acc += p.coeffs()[k];
    }
    return acc;
}

/// Applies `f` to every coefficient.
template <class R, class F>
auto map_coeffs(const Poly<R>& p, F&& f) -> Poly<decltype(f(std::declval<const R&>()))> {
    using S = decltype(f(std::declval<const R&>()));
    std::vector<S> out;
    out.reserve(p.coeffs().size());
    for (const R& c : p.coeffs()) out.push_back(f(c));
    return Poly<S>(std::move(out), p.var());
}

/// Substitutes a value for the innermost variable of a bivariate polynomial.
inline RatPoly substitute_inner(const BiPoly& p, const Rat& value) {
    return map_coeffs(p, [&](const RatPoly& c) { return evaluate(c, value); });
}

/// Substitutes a value for the innermost variable of a trivariate polynomial.
inline BiPoly substitute_inner(const TriPoly& p, const Rat& value) {
    return map_coeffs(p, [&](const BiPoly& c) { return substitute_inner(c, value); });
}

/// Exchanges the two variables of a bivariate polynomial.
inline BiPoly swap_variables(const BiPoly& p) {
    std::string inner_var;
    std::size_t inner_degree = 0;
    for (const RatPoly& c : p.coeffs()) {
        if (!c.is_zero()) inner_degree = std::max(inner_degree, static_cast<std::size_t>(c.degree()));
        if (inner_var.empty()) inner_var = c.var();
    }
    std::vector<std::vector<Rat>> grid(inner_degree + 1, std::vector<Rat>(p.coeffs().size()));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        for (std::size_t j = 0; j < p.coeffs()[i].coeffs().size(); ++j) grid[j][i] = p.coeffs()[i].coeffs()[j];
    }
    std::vector<RatPoly> out;
    for (auto& row : grid) out.emplace_back(std::move(row), p.var());
    return BiPoly(std::move(out), inner_var);
}

/// Leading rational coefficient of a (possibly nested) polynomial.
inline const Rat& leading_rational(const Rat& r) { return r; }
template <class R>
const Rat& leading_rational(const Poly<R>& p) {
    return leading_rational(p.leading());
}

namespace detail {

inline void collect_content(const Rat& r, Int& num_gcd, Int& den_lcm) {
    if (sgn(r) == 0) return;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den_mpz_t());
}

template <class R>
void collect_content(const Poly<R>& p, Int& num_gcd, Int& den_lcm) {
    for (const R& c : p.coeffs()) collect_content(c, num_gcd, den_lcm);
}

inline Rat scale(const Rat& r, const Rat& by) { return Rat(r * by); }

template <class R>
Poly<R> scale(const Poly<R>& p, const Rat& by) {
    return map_coeffs(p, [&](const R& c) { return scale(c, by); });
}

} // namespace detail

/// Rational content c with p = c * primitive, where the primitive part has
/// coprime integer coefficients and a positive leading rational coefficient.
/// The content of the zero polynomial is 0.
template <class R>
Rat rational_content(const Poly<R>& p) {
    if (p.is_zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    detail::collect_content(p, num_gcd, den_lcm);
    Rat c(num_gcd, den_lcm);
    c.canonicalize();
    if (sgn(leading_rational(p)) < 0) c = -c;
    return c;
}

template <class R>
Poly<R> primitive_part(const Poly<R>& p) {
    if (p.is_zero()) return p;
    return detail::scale(p, Rat(1 / rational_content(p)));
}

template <class R>
std::pair<Rat, Poly<R>> content_primitive(const Poly<R>& p) {
    return {rational_content(p), primitive_part(p)};
}

/// Multiplies by a positive rational so every coefficient is an integer with
/// no common factor; the sign is kept.
template <class R>
Poly<R> clear_denominators(const Poly<R>& p) {
    if (p.is_zero()) return p;
    Rat c = rational_content(p);
    if (sgn(c) < 0) c = -c;
    return detail::scale(p, Rat(1 / c));
}

} // namespace operon::exact
