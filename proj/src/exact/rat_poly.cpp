#include "operon/exact/rat_poly.hpp"

namespace operon::exact {

std::pair<RatPoly, RatPoly> divrem(const RatPoly& p, const RatPoly& q) {
    if (q.is_zero()) throw Error("division by the zero polynomial");
    const std::string var = p.var().empty() ? q.var() : p.var();
    if (p.degree() < q.degree()) return {RatPoly(var), p};
    std::vector<Rat> quotient(static_cast<std::size_t>(p.degree() - q.degree() + 1));
    std::vector<Rat> rest = p.coeffs();
    const Rat& lead = q.leading();
    for (int k = p.degree() - q.degree(); k >= 0; --k) {
        const auto top = static_cast<std::size_t>(k + q.degree());
        if (sgn(rest[top]) == 0) continue;
        const Rat c = rest[top] / lead;
        for (std::size_t j = 0; j < q.coeffs().size(); ++j) rest[static_cast<std::size_t>(k) + j] -= c * q.coeffs()[j];
        quotient[static_cast<std::size_t>(k)] = c;
    }
    return {RatPoly(std::move(quotient), var), RatPoly(std::move(rest), var)};
}

RatPoly monic(const RatPoly& p) {
    if (p.is_zero()) return p;
    return p * Rat(1 / p.leading());
}

RatPoly gcd(const RatPoly& p, const RatPoly& q) {
    RatPoly a = primitive_part(p);
    RatPoly b = primitive_part(q);
    while (!b.is_zero()) {
        RatPoly r = primitive_part(divrem(a, b).second);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

RatPoly squarefree_part(const RatPoly& p) {
    if (p.degree() <= 0) return primitive_part(p);
    return primitive_part(divrem(p, gcd(p, derivative(p))).first);
}

double evaluate(const RatPoly& p, double x) {
    double acc = 0.0;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + p.coeffs()[k].get_d();
    return acc;
}

long double evaluate(const RatPoly& p, long double x) {
    long double acc = 0.0L;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * x + static_cast<long double>(p.coeffs()[k].get_d());
    return acc;
}

double evaluate(const BiPoly& p, double main, double inner) {
    double acc = 0.0;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = acc * main + evaluate(p.coeffs()[k], inner);
    return acc;
}

namespace {

struct Term {
    bool negative;
    std::string magnitude; // "1" for a bare unit
};

std::string power(const std::string& var, std::size_t k) {
    if (k == 1) return var;
    return var + "^" + std::to_string(k);
}

std::vector<Term> terms(const Rat& r, bool = false) {
    if (sgn(r) == 0) return {};
    return {{sgn(r) < 0, to_string(Rat(abs(r)))}};
}

std::string join(const std::vector<Term>& ts) {
    if (ts.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i == 0) {
            out += ts[i].negative ? "-" : "";
        } else {
            out += ts[i].negative ? " - " : " + ";
        }
        out += ts[i].magnitude;
    }
    return out;
}

// Outer powers print in descending order; a multi-term coefficient prints
// in parentheses with ascending powers, e.g. `(29 - 21*L)*A^6`.
template <class R>
std::vector<Term> terms(const Poly<R>& p, bool ascending = false) {
    std::vector<Term> out;
    auto emit = [&](std::size_t k) {
        const std::vector<Term> inner = terms(p.coeffs()[k], true);
        if (inner.empty()) return;
        if (inner.size() == 1) {
            const Term& t = inner.front();
            if (k == 0) {
                out.push_back(t);
            } else {
                out.push_back({t.negative, t.magnitude == "1" ? power(p.var(), k) : t.magnitude + "*" + power(p.var(), k)});
            }
        } else {
            out.push_back({false, "(" + join(inner) + ")" + (k == 0 ? "" : "*" + power(p.var(), k))});
        }
    };
    if (ascending) {
        for (std::size_t k = 0; k < p.coeffs().size(); ++k) emit(k);
    } else {
        for (std::size_t k = p.coeffs().size(); k-- > 0;) emit(k);
    }
    return out;
}

} // namespace

std::string to_string(const RatPoly& p) { return join(terms(p)); }
std::string to_string(const BiPoly& p) { return join(terms(p)); }
std::string to_string(const TriPoly& p) { return join(terms(p)); }

} // namespace operon::exact
