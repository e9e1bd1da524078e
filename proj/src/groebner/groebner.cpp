#include "operon/groebner/groebner.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>

#include "operon/error.hpp"
#include "operon/gf2/poly_text.hpp"

namespace operon::groebner {
namespace {

// Polynomials in key space (see MonomialOrder::key), terms sorted ascending
// under the order so the leading term is back().
using Terms = std::vector<std::uint64_t>;

class Ring {
public:
    explicit Ring(const MonomialOrder& order) : order_(order) {}

    bool less(std::uint64_t a, std::uint64_t b) const { return order_.compare_keys(a, b) < 0; }

    Terms encode(const BoolPoly& p) const {
        Terms out;
        out.reserve(p.term_count());
        for (BoolMonomial m : p.monomials()) out.push_back(order_.key(m));
        sort(out);
        return out;
    }

    BoolPoly decode(const Terms& t, const VarSetPtr& vars) const {
        std::vector<BoolMonomial> ms;
        ms.reserve(t.size());
        for (std::uint64_t k : t) ms.push_back(order_.from_key(k));
        return BoolPoly(vars, std::move(ms));
    }

    void sort(Terms& t) const {
        std::sort(t.begin(), t.end(), [this](std::uint64_t a, std::uint64_t b) { return less(a, b); });
    }

    Terms add(const Terms& a, const Terms& b) const {
        Terms out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                ++i;
                ++j;
            } else if (less(a[i], b[j])) {
                out.push_back(a[i++]);
            } else {
                out.push_back(b[j++]);
            }
        }
        out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
        out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
        return out;
    }

    /// Quotient-ring product with a monomial; equal products cancel in pairs.
    Terms mul(const Terms& p, std::uint64_t m) const {
        Terms out;
        out.reserve(p.size());
        for (std::uint64_t t : p) out.push_back(t | m);
        sort(out);
        std::size_t w = 0;
        for (std::size_t i = 0; i < out.size();) {
            std::size_t j = i;
            while (j < out.size() && out[j] == out[i]) ++j;
            if ((j - i) % 2 == 1) out[w++] = out[i];
            i = j;
        }
        out.resize(w);
        return out;
    }

    Terms normal_form(Terms p, const std::vector<const Terms*>& basis) const {
        Terms done; // irreducible terms, collected in descending order
        while (!p.empty()) {
            const std::uint64_t lead = p.back();
            const Terms* divisor = nullptr;
            for (const Terms* g : basis) {
                if ((g->back() & ~lead) == 0) {
                    divisor = g;
                    break;
                }
            }
            if (divisor == nullptr) {
                done.push_back(lead);
                p.pop_back();
            } else {
                p = add(p, mul(*divisor, lead & ~divisor->back()));
            }
        }
        std::reverse(done.begin(), done.end());
        return done;
    }

    Terms s_poly(const Terms& f, const Terms& g) const {
        const std::uint64_t l = f.back() | g.back();
        return add(mul(f, l & ~f.back()), mul(g, l & ~g.back()));
    }

private:
    const MonomialOrder& order_;
};

std::vector<const Terms*> pointers(const std::vector<Terms>& polys) {
    std::vector<const Terms*> out;
    out.reserve(polys.size());
    for (const Terms& t : polys) out.push_back(&t);
    return out;
}

bool is_one(const Terms& t) { return t.size() == 1 && t.front() == 0; }

struct CriticalPair {
    std::size_t first;
    std::size_t second;  // basis index, or variable key bit when `field`
    bool field;
    std::uint64_t lcm;
};

/// Unreduced completion; returns nullopt when 1 lies in the ideal.
std::optional<std::vector<Terms>> complete(const Ring& ring, const std::vector<Terms>& input) {
    std::vector<Terms> basis;
    std::vector<CriticalPair> pairs;

    auto insert = [&](Terms h) {
        const std::size_t idx = basis.size();
        const std::uint64_t lead = h.back();
        for (std::size_t k = 0; k < idx; ++k) {
            const std::uint64_t other = basis[k].back();
            // Coprime leading monomials: the S-polynomial reduces to zero.
            if ((other & lead) == 0) continue;
            pairs.push_back({k, idx, false, other | lead});
        }
        std::uint64_t bits = lead;
        while (bits != 0) {
            const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            pairs.push_back({idx, bit, true, lead});
        }
        basis.push_back(std::move(h));
    };

    for (const Terms& g : input) {
        Terms h = ring.normal_form(g, pointers(basis));
        if (h.empty()) continue;
        if (is_one(h)) return std::nullopt;
        insert(std::move(h));
    }

    while (!pairs.empty()) {
        // Normal strategy: smallest lcm first; ties resolved by creation order.
        auto best = pairs.begin();
        for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
            if (ring.less(it->lcm, best->lcm)) best = it;
        }
        const CriticalPair pair = *best;
        pairs.erase(best);

        Terms s;
        if (pair.field) {
            const Terms& g = basis[pair.first];
            s = ring.add(ring.mul(g, std::uint64_t{1} << pair.second), g);
        } else {
            s = ring.s_poly(basis[pair.first], basis[pair.second]);
        }
        Terms h = ring.normal_form(std::move(s), pointers(basis));
        if (h.empty()) continue;
        if (is_one(h)) return std::nullopt;
        insert(std::move(h));
    }
    return basis;
}

std::vector<Terms> inter_reduce(const Ring& ring, std::vector<Terms> basis) {
    std::vector<bool> redundant(basis.size(), false);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const std::uint64_t lead = basis[i].back();
        for (std::size_t j = 0; j < basis.size() && !redundant[i]; ++j) {
            if (i == j) continue;
            const std::uint64_t other = basis[j].back();
            if ((other & ~lead) == 0 && (other != lead || j < i)) redundant[i] = true;
        }
    }
    std::vector<Terms> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!redundant[i]) minimal.push_back(std::move(basis[i]));
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<const Terms*> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(&minimal[j]);
        }
        minimal[i] = ring.normal_form(std::move(minimal[i]), others);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Terms& a, const Terms& b) { return ring.less(b.back(), a.back()); });
    return minimal;
}

void require_same(const VarSetPtr& vars, const BoolPoly& p) {
    if (!gf2::same_vars(vars, p.vars())) throw Error("polynomials are over different variable sets");
}

} // namespace

PolySystem::PolySystem(VarSetPtr vars, std::vector<BoolPoly> generators) : vars_(std::move(vars)) {
    if (!vars_) throw Error("null variable set");
    for (BoolPoly& g : generators) {
        require_same(vars_, g);
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

BoolPoly reduce(const BoolPoly& p, std::span<const BoolPoly> basis, const MonomialOrder& order) {
    const Ring ring(order);
    std::vector<Terms> encoded;
    for (const BoolPoly& g : basis) {
        require_same(p.vars(), g);
        if (!g.is_zero()) encoded.push_back(ring.encode(g));
    }
    return ring.decode(ring.normal_form(ring.encode(p), pointers(encoded)), p.vars());
}

BoolPoly s_polynomial(const BoolPoly& f, const BoolPoly& g, const MonomialOrder& order) {
    require_same(f.vars(), g);
    if (f.is_zero() || g.is_zero()) throw Error("S-polynomial of a zero polynomial");
    const Ring ring(order);
    return ring.decode(ring.s_poly(ring.encode(f), ring.encode(g)), f.vars());
}

GroebnerBasis buchberger_reduced(const PolySystem& system, const MonomialOrder& order) {
    const Ring ring(order);
    std::vector<Terms> input;
    input.reserve(system.generators().size());
    for (const BoolPoly& g : system.generators()) input.push_back(ring.encode(g));

    auto completed = complete(ring, input);
    if (!completed) return GroebnerBasis(system.vars(), order, {BoolPoly::one(system.vars())});

    std::vector<BoolPoly> polys;
    for (const Terms& t : inter_reduce(ring, std::move(*completed))) polys.push_back(ring.decode(t, system.vars()));
    return GroebnerBasis(system.vars(), order, std::move(polys));
}

namespace {

void split(const VarSetPtr& vars, std::vector<BoolPoly> generators, std::uint64_t assigned, std::uint64_t values,
           const MonomialOrder& order, std::vector<BitVector>& out) {
    const GroebnerBasis basis = buchberger_reduced(PolySystem(vars, std::move(generators)), order);
    if (basis.is_unit()) return;
    const std::size_t n = vars->size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if ((assigned & all) == all) {
        out.emplace_back(n, values);
        return;
    }
    const auto var = static_cast<std::size_t>(std::countr_one(assigned));
    for (bool value : {false, true}) {
        std::vector<BoolPoly> specialized;
        specialized.reserve(basis.size());
        for (const BoolPoly& g : basis.polys()) specialized.push_back(g.substitute(var, value));
        split(vars, std::move(specialized), assigned | (std::uint64_t{1} << var),
              values | (std::uint64_t{value} << var), order, out);
    }
}

} // namespace

std::vector<BitVector> solve_boolean_system(const PolySystem& system, SolveMethod method) {
    const std::size_t n = system.vars()->size();
    std::vector<BitVector> out;
    if (method == SolveMethod::enumerate) {
        if (n > kMaxEnumerateVars) {
            throw LimitError("enumeration supports at most " + std::to_string(kMaxEnumerateVars) +
                             " variables; use the groebner method");
        }
        const std::uint64_t count = std::uint64_t{1} << n;
        for (std::uint64_t point = 0; point < count; ++point) {
            const bool zero = std::all_of(system.generators().begin(), system.generators().end(),
                                          [&](const BoolPoly& g) { return !g.eval(point); });
            if (zero) out.emplace_back(n, point);
        }
    } else {
        split(system.vars(), system.generators(), 0, 0, MonomialOrder::degrevlex(), out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolySystem parse_system(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    VarSetPtr vars;
    std::vector<BoolPoly> generators;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            if (!vars) {
                const auto start = line.find_first_not_of(" \t");
                if (line.compare(start, 5, "vars:") != 0) throw ParseError("expected 'vars:' header");
                std::string rest = line.substr(start + 5);
                std::replace(rest.begin(), rest.end(), ',', ' ');
                std::istringstream names_in(rest);
                std::vector<std::string> names;
                for (std::string name; names_in >> name;) names.push_back(name);
                vars = gf2::make_vars(std::move(names));
                continue;
            }
            if (auto eq = line.find('='); eq != std::string::npos) {
                generators.push_back(gf2::parse_poly(std::string_view(line).substr(0, eq), vars) +
                                     gf2::parse_poly(std::string_view(line).substr(eq + 1), vars));
            } else {
                generators.push_back(gf2::parse_poly(line, vars));
            }
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    if (!vars) throw ParseError("missing 'vars:' header");
    return PolySystem(vars, std::move(generators));
}

} // namespace operon::groebner
