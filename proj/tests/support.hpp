#pragma once

// Shared generators and independent oracles for the test suites. Nothing in
// here calls into the code paths it is used to check.

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "operon/exact/poly.hpp"
#include "operon/gf2/bool_poly.hpp"
#include "operon/gf2/expr.hpp"
#include "operon/groebner/groebner.hpp"

namespace operon::test {

using Rng = std::mt19937_64;

inline std::string model_path(const std::string& file) { return std::string(OPERON_MODELS_DIR) + "/" + file; }

inline std::string read_model(const std::string& file) {
    std::ifstream in(model_path(file));
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

inline std::vector<std::string> var_names(std::size_t n, const std::string& prefix = "x") {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

inline gf2::Expr random_expr(Rng& rng, const std::vector<std::string>& names, int depth) {
    std::uniform_int_distribution<int> pick(0, 9);
    const int choice = depth <= 0 ? pick(rng) % 3 : pick(rng);
    if (choice == 0) return gf2::Expr::constant(rng() & 1U);
    if (choice <= 2) {
        std::uniform_int_distribution<std::size_t> var(0, names.size() - 1);
        return gf2::Expr::variable(names[var(rng)]);
    }
    if (choice == 3) return gf2::Expr::negation(random_expr(rng, names, depth - 1));
    const gf2::ExprOp ops[] = {gf2::ExprOp::conjunction, gf2::ExprOp::exclusive, gf2::ExprOp::disjunction};
    return gf2::Expr::binary(ops[choice % 3], random_expr(rng, names, depth - 1), random_expr(rng, names, depth - 1));
}

/// Sparse random Boolean polynomial with up to `max_terms` monomials of
/// degree at most `max_degree`.
inline gf2::BoolPoly random_bool_poly(Rng& rng, const gf2::VarSetPtr& vars, int max_terms, int max_degree) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<int> degree(0, max_degree);
    std::uniform_int_distribution<std::size_t> var(0, vars->size() - 1);
    std::vector<gf2::BoolMonomial> ms;
    const int count = terms(rng);
    for (int t = 0; t < count; ++t) {
        std::uint64_t bits = 0;
        const int d = degree(rng);
        for (int k = 0; k < d; ++k) bits |= std::uint64_t{1} << var(rng);
        ms.emplace_back(bits);
    }
    return gf2::BoolPoly(vars, std::move(ms));
}

/// Random system over n variables; when `plant` is set a random point is
/// forced to be a common zero.
inline groebner::PolySystem random_system(Rng& rng, std::size_t n, bool plant) {
    auto vars = gf2::make_vars(var_names(n));
    const std::uint64_t point = rng() & ((std::uint64_t{1} << n) - 1);
    std::uniform_int_distribution<std::size_t> count(1, n);
    std::vector<gf2::BoolPoly> gens;
    const std::size_t m = count(rng);
    for (std::size_t i = 0; i < m; ++i) {
        gf2::BoolPoly p = random_bool_poly(rng, vars, 4, 3);
        if (plant && p.eval(point)) p += gf2::BoolPoly::one(vars);
        gens.push_back(std::move(p));
    }
    return groebner::PolySystem(vars, std::move(gens));
}

inline exact::Rat random_rat(Rng& rng, int span = 9, int max_den = 4) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, max_den);
    return exact::ratio(num(rng), den(rng));
}

inline exact::RatPoly random_rat_poly(Rng& rng, int degree, const std::string& var = "x") {
    std::vector<exact::Rat> cs;
    for (int k = 0; k <= degree; ++k) cs.push_back(random_rat(rng));
    if (sgn(cs.back()) == 0) cs.back() = 1;
    return exact::RatPoly(std::move(cs), var);
}

/// prod (x - r_i) with the given rational roots.
inline exact::RatPoly from_roots(const std::vector<exact::Rat>& roots, const std::string& var = "x") {
    exact::RatPoly p = exact::RatPoly::constant(exact::Rat(1), var);
    for (const exact::Rat& r : roots) p *= exact::RatPoly({exact::Rat(-r), exact::Rat(1)}, var);
    return p;
}

/// Cofactor expansion along the first row. Exponential; small matrices only.
template <class R>
R laplace_determinant(const std::vector<std::vector<R>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    if (n == 1) return m[0][0];
    R total{};
    for (std::size_t col = 0; col < n; ++col) {
        if (exact::vanishes(m[0][col])) continue;
        std::vector<std::vector<R>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<R> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        R term = m[0][col] * laplace_determinant(minor);
        if (col % 2 == 1) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

/// Real eigenvalues of the companion matrix, i.e. numeric real roots.
inline std::vector<double> numeric_real_roots(const exact::RatPoly& p, double imag_tol = 1e-7) {
    const int d = p.degree();
    std::vector<double> out;
    if (d < 1) return out;
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    const double lead = p.leading().get_d();
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -p.coeffs()[static_cast<std::size_t>(i)].get_d() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    for (int i = 0; i < d; ++i) {
        const std::complex<double> z = solver.eigenvalues()[i];
        if (std::abs(z.imag()) <= imag_tol * std::max(1.0, std::abs(z))) out.push_back(z.real());
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace operon::test
