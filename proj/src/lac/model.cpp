#include "operon/lac/model.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "operon/error.hpp"
#include "operon/parallel.hpp"

namespace operon::lac {
namespace {

using exact::Region;

constexpr const char* kM = "M";
constexpr const char* kA = "A";
constexpr const char* kL = "L";

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

/// Constant in A over L.
BiPoly scalar(const Rat& r) { return BiPoly::constant(RatPoly::constant(r, kL), kA); }

BiPoly a_power(int n) { return BiPoly::monomial(RatPoly(1), static_cast<std::size_t>(n), kA); }

BiPoly lactose(const LacParams& p) {
    return BiPoly::constant(p.L ? RatPoly::constant(*p.L, kL) : RatPoly::x(kL), kA);
}

TriPoly in_M(BiPoly constant_term, BiPoly m_coefficient) {
    return TriPoly({std::move(constant_term), std::move(m_coefficient)}, kM);
}

Rat power(const Rat& x, int n) {
    Rat out(1);
    for (int i = 0; i < n; ++i) out *= x;
    return out;
}

} // namespace

void LacParams::validate() const {
    if (sgn(gamma) <= 0) throw Error("gamma must be positive");
    if (sgn(h) <= 0) throw Error("h must be positive");
    if (n < 1) throw Error("Hill coefficient n must be at least 1");
    if (sgn(c0) < 0 || sgn(c) < 0 || sgn(v) < 0 || sgn(delta) < 0) {
        throw Error("c0, c, v and delta must be nonnegative");
    }
    if (L && sgn(*L) <= 0) throw Error("lactose L must be positive");
}

LacParams parse_params(std::string_view text) {
    LacParams p;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::set<std::string> seen;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected `key = value`", line_no);
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (!seen.insert(key).second) throw ParseError("duplicate key '" + key + "'", line_no);
        try {
            if (key == "c0") {
                p.c0 = exact::parse_rat(value);
            } else if (key == "c") {
                p.c = exact::parse_rat(value);
            } else if (key == "gamma") {
                p.gamma = exact::parse_rat(value);
            } else if (key == "v") {
                p.v = exact::parse_rat(value);
            } else if (key == "delta") {
                p.delta = exact::parse_rat(value);
            } else if (key == "h") {
                p.h = exact::parse_rat(value);
            } else if (key == "n") {
                const Rat n = exact::parse_rat(value);
                if (n.get_den() != 1 || n < 1 || n > 64) throw ParseError("n must be an integer in 1..64");
                p.n = static_cast<int>(n.get_num().get_si());
            } else if (key == "L") {
                if (value == "sym") {
                    p.L.reset();
                } else {
                    p.L = exact::parse_rat(value);
                }
            } else {
                throw ParseError("unknown key '" + key + "'");
            }
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
    }
    try {
        p.validate();
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    return p;
}

SteadySystem build_system(const LacParams& p) {
    p.validate();
    const BiPoly one = scalar(Rat(1));
    const BiPoly hill = one + a_power(p.n); // 1 + A^n
    const BiPoly A = BiPoly::x(kA);
    const BiPoly L = lactose(p);

    // (c0 + c A^n/(1 + A^n) - gamma M) * (1 + A^n)
    TriPoly production = in_M(scalar(p.c0) * hill + scalar(p.c) * a_power(p.n), -(scalar(p.gamma) * hill));
    // (M L - delta A - v M A/(h + A)) * (h + A)
    const BiPoly shift = scalar(p.h) + A;
    TriPoly balance = in_M(-(scalar(p.delta) * A * shift), L * shift - scalar(p.v) * A);

    return {exact::clear_denominators(production), exact::clear_denominators(balance)};
}

BiPoly eliminate_M(const LacParams& p) {
    LacParams symbolic = p;
    symbolic.L.reset();
    const SteadySystem sys = build_system(symbolic);
    if (sys.production.degree() < 1 && sys.balance.degree() < 1) {
        throw Error("degenerate system: neither equation involves M");
    }
    BiPoly res = exact::resultant(sys.production, sys.balance);
    if (res.is_zero()) throw Error("degenerate system: the resultant vanishes identically");
    return exact::primitive_part(res.with_var(kA));
}

RatPoly eliminant_at(const LacParams& p, const Rat& L) {
    return exact::substitute_inner(eliminate_M(p), L);
}

RatPoly lactose_discriminant(const LacParams& p) {
    const BiPoly e = eliminate_M(p);
    if (e.degree() < 2) throw Error("eliminant has degree below 2 in A");
    return exact::discriminant(e).with_var(kL);
}

std::vector<RootBox> critical_lactose_values(const LacParams& p, const Rat& precision) {
    const RatPoly disc = lactose_discriminant(p);
    if (disc.is_zero()) throw Error("discriminant vanishes identically: degenerate parameterization");
    return exact::isolate_real_roots(disc, Region::positive, precision);
}

Rat recover_M(const LacParams& p, const Rat& A) {
    const Rat an = power(A, p.n);
    return Rat((p.c0 * (1 + an) + p.c * an) / (p.gamma * (1 + an)));
}

Rat recover_R(const LacParams& p, const Rat& A) { return Rat(1 / (1 + power(A, p.n))); }

namespace {

std::vector<SteadyState> states_from(const LacParams& p, const RatPoly& eliminant, const Rat& precision) {
    std::vector<SteadyState> out;
    if (eliminant.is_zero()) return out;
    for (const RootBox& box : exact::isolate_real_roots(eliminant, Region::positive, precision)) {
        // M increases and R decreases in A > 0, so endpoints map to endpoints.
        out.push_back({{box.lo, box.hi},
                       {recover_M(p, box.lo), recover_M(p, box.hi)},
                       {recover_R(p, box.hi), recover_R(p, box.lo)}});
    }
    return out;
}

} // namespace

SteadyStateAnalysis::SteadyStateAnalysis(LacParams params, Rat precision) : params_(std::move(params)) {
    eliminant_ = eliminate_M(params_);
    if (eliminant_.degree() < 2) throw Error("eliminant has degree below 2 in A");
    discriminant_ = exact::discriminant(eliminant_).with_var(kL);
    if (discriminant_.is_zero()) throw Error("discriminant vanishes identically: degenerate parameterization");
    critical_ = exact::isolate_real_roots(discriminant_, Region::positive, precision);
}

bool SteadyStateAnalysis::near_critical(const Rat& L) const {
    if (sgn(evaluate(discriminant_, L)) == 0) return true;
    return std::any_of(critical_.begin(), critical_.end(), [&](const RootBox& b) { return b.contains(L); });
}

SteadyCount SteadyStateAnalysis::count(const Rat& L) const {
    if (sgn(L) <= 0) throw Error("lactose L must be positive");
    const RatPoly e = exact::substitute_inner(eliminant_, L);
    if (e.is_zero()) return {0, true};
    return {exact::count_real_roots(e, Rat(0), std::nullopt), near_critical(L)};
}

std::vector<SteadyState> SteadyStateAnalysis::steady_states(const Rat& L, const Rat& precision) const {
    if (sgn(L) <= 0) throw Error("lactose L must be positive");
    return states_from(params_, exact::substitute_inner(eliminant_, L), precision);
}

BifurcationReport SteadyStateAnalysis::bifurcation(const Rat& lo, const Rat& hi, std::size_t samples,
                                                   const Rat& precision) const {
    if (sgn(lo) <= 0 || lo >= hi) throw Error("lactose range must satisfy 0 < lo < hi");
    if (samples < 2) throw Error("at least two samples are required");
    if (sgn(precision) <= 0) throw Error("precision must be positive");

    BifurcationReport report;
    report.critical = critical_;

    Rat region_lo(0);
    for (std::size_t i = 0; i <= critical_.size(); ++i) {
        RegionCount region;
        region.lo = region_lo;
        Rat probe;
        if (i < critical_.size()) {
            region.hi = critical_[i].lo;
            probe = (region_lo + critical_[i].lo) / 2;
            region_lo = critical_[i].hi;
        } else {
            probe = region_lo + 1;
        }
        region.count = count(probe).count;
        report.regions.push_back(std::move(region));
    }

    report.samples.resize(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        report.samples[k] = lo + (hi - lo) * exact::ratio(static_cast<long>(k), static_cast<long>(samples - 1));
    }

    std::vector<std::vector<BranchPoint>> per_sample(samples);
    parallel_for(
        samples,
        [&](std::size_t k) {
            const Rat& L = report.samples[k];
            const RatPoly e = exact::substitute_inner(eliminant_, L);
            const auto roots = exact::isolate_real_roots(e, Region::positive, precision);
            const bool boundary = near_critical(L);
            for (std::size_t b = 0; b < roots.size(); ++b) {
                per_sample[k].push_back({L, roots[b], b, roots.size(), boundary});
            }
        },
        1);
    for (auto& points : per_sample) {
        for (auto& pt : points) report.points.push_back(std::move(pt));
    }
    return report;
}

SteadyCount steady_state_count(const LacParams& p, const Rat& L, const Rat& precision) {
    return SteadyStateAnalysis(p, precision).count(L);
}

std::vector<SteadyState> steady_states_at(const LacParams& p, const Rat& L, const Rat& precision) {
    if (sgn(precision) <= 0) throw Error("precision must be positive");
    if (sgn(L) <= 0) throw Error("lactose L must be positive");
    return states_from(p, eliminant_at(p, L), precision);
}

BifurcationReport bifurcation_curve(const LacParams& p, const Rat& lo, const Rat& hi, std::size_t samples,
                                    const Rat& precision) {
    return SteadyStateAnalysis(p, precision).bifurcation(lo, hi, samples, precision);
}

std::string to_csv(const BifurcationReport& report, int digits) {
    std::string out = "L,A,branch,region_count\n";
    for (const BranchPoint& pt : report.points) {
        out += exact::to_decimal(pt.L, digits) + ',' + exact::to_decimal(pt.A.midpoint(), digits) + ',' +
               std::to_string(pt.branch) + ',' + std::to_string(pt.region_count) + '\n';
    }
    return out;
}

nlohmann::json to_json(const std::vector<SteadyState>& states, int digits) {
    nlohmann::json out = nlohmann::json::array();
    auto bounds = [](const Interval& i) { return nlohmann::json::array({exact::to_string(i.lo), exact::to_string(i.hi)}); };
    for (const SteadyState& s : states) {
        out.push_back({{"A", exact::to_decimal(s.A.midpoint(), digits)},
                       {"M", exact::to_decimal(s.M.midpoint(), digits)},
                       {"R", exact::to_decimal(s.R.midpoint(), digits)},
                       {"A_interval", bounds(s.A)},
                       {"M_interval", bounds(s.M)},
                       {"R_interval", bounds(s.R)}});
    }
    return out;
}

} // namespace operon::lac
