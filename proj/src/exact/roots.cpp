#include "operon/exact/roots.hpp"

#include "operon/error.hpp"

namespace operon::exact {
namespace {

int sign_at(const RatPoly& p, const Rat& x) { return sgn(evaluate(p, x)); }

std::size_t count_changes(const std::vector<int>& signs) {
    std::size_t changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

} // namespace

SturmSequence::SturmSequence(const RatPoly& p) {
    if (p.is_zero()) throw Error("Sturm sequence of the zero polynomial");
    chain_.push_back(squarefree_part(p));
    if (chain_.front().degree() < 1) return;
    chain_.push_back(clear_denominators(derivative(chain_.front())));
    while (true) {
        const RatPoly& a = chain_[chain_.size() - 2];
        const RatPoly& b = chain_.back();
        RatPoly r = -divrem(a, b).second;
        if (r.is_zero()) break;
        chain_.push_back(clear_denominators(r));
    }
}

std::size_t SturmSequence::variations(const Rat& x) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const RatPoly& q : chain_) signs.push_back(sign_at(q, x));
    return count_changes(signs);
}

std::size_t SturmSequence::variations_at_infinity(bool positive) const {
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const RatPoly& q : chain_) {
        int s = sgn(q.leading());
        if (!positive && q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_changes(signs);
}

std::size_t SturmSequence::count(const std::optional<Rat>& lo, const std::optional<Rat>& hi) const {
    const Rat bound = cauchy_bound(squarefree());
    const Rat a = lo ? *lo : Rat(-bound);
    const Rat b = hi ? *hi : bound;
    if (a >= b) return 0;
    const std::size_t va = variations(a);
    const std::size_t vb = variations(b);
    return va >= vb ? va - vb : 0;
}

Rat cauchy_bound(const RatPoly& p) {
    if (p.is_zero()) throw Error("root bound of the zero polynomial");
    Rat largest(0);
    const Rat& lead = p.leading();
    for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k) {
        const Rat ratio = abs(p.coeffs()[k] / lead);
        if (ratio > largest) largest = ratio;
    }
    return Rat(1 + largest);
}

std::size_t count_real_roots(const RatPoly& p, const std::optional<Rat>& lo, const std::optional<Rat>& hi) {
    if (p.is_zero()) throw Error("root count of the zero polynomial");
    return SturmSequence(p).count(lo, hi);
}

namespace {

/// Shrinks (lo, hi], known to hold exactly one root, until its width is at
/// most `precision` and lo itself is not a root.
RootBox refine_single(const SturmSequence& seq, Rat lo, Rat hi, const Rat& precision) {
    const RatPoly& p = seq.squarefree();
    if (sign_at(p, hi) == 0) return {hi, hi, true, 1};
    while (Rat(hi - lo) > precision || sign_at(p, lo) == 0) {
        const Rat mid = (lo + hi) / 2;
        if (sign_at(p, mid) == 0) return {mid, mid, true, 1};
        if (seq.count(lo, mid) == 1) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {lo, hi, false, 1};
}

void bisect(const SturmSequence& seq, const Rat& lo, const Rat& hi, std::size_t roots, const Rat& precision,
            std::vector<RootBox>& out) {
    if (roots == 0) return;
    if (roots == 1) {
        out.push_back(refine_single(seq, lo, hi, precision));
        return;
    }
    const Rat mid = (lo + hi) / 2;
    const std::size_t left = seq.count(lo, mid);
    bisect(seq, lo, mid, left, precision, out);
    bisect(seq, mid, hi, roots - left, precision, out);
}

} // namespace

std::vector<RootBox> isolate_real_roots(const RatPoly& p, Region region, const Rat& precision) {
    if (p.is_zero()) throw Error("root isolation of the zero polynomial");
    if (sgn(precision) <= 0) throw Error("precision must be positive");
    const SturmSequence seq(p);
    std::vector<RootBox> out;
    if (seq.squarefree().degree() < 1) return out;

    const Rat bound = cauchy_bound(seq.squarefree());
    const Rat lo = region == Region::positive ? Rat(0) : Rat(-bound);
    bisect(seq, lo, bound, seq.count(lo, bound), precision, out);

    // Multiplicity: the root survives in gcd(g, g') for each extra repetition.
    RatPoly g = p;
    std::vector<SturmSequence> levels;
    while (true) {
        g = gcd(g, derivative(g));
        if (g.degree() < 1) break;
        levels.emplace_back(g);
    }
    for (RootBox& box : out) {
        for (const SturmSequence& level : levels) {
            const bool present = box.exact ? sign_at(level.squarefree(), box.lo) == 0
                                           : level.count(box.lo, box.hi) == 1;
            if (!present) break;
            ++box.multiplicity;
        }
    }
    return out;
}

RootBox refine(const RatPoly& p, const RootBox& box, const Rat& precision) {
    if (sgn(precision) <= 0) throw Error("precision must be positive");
    if (box.exact || box.width() <= precision) return box;
    const SturmSequence seq(p);
    if (seq.count(box.lo, box.hi) != 1) throw Error("box does not isolate a single root");
    RootBox out = refine_single(seq, box.lo, box.hi, precision);
    out.multiplicity = box.multiplicity;
    return out;
}

} // namespace operon::exact
