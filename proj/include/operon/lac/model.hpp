#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "operon/exact/resultant.hpp"
#include "operon/exact/roots.hpp"

namespace operon::lac {

using exact::BiPoly;
using exact::Rat;
using exact::RatPoly;
using exact::RootBox;
using exact::TriPoly;

/// Constants of the continuous lac operon model
///
///     R = 1 / (1 + A^n)
///     dM/dt = c0 + c (1 - R) - gamma M
///     dA/dt = M L - delta A - v M A / (h + A)
///
/// with lactose L either fixed or left symbolic.
struct LacParams {
    Rat c0{1, 20};
    Rat c{1};
    Rat gamma{1};
    Rat v{1};
    Rat delta{1, 5};
    Rat h{2};
    int n = 5;
    std::optional<Rat> L; // nullopt: symbolic

    /// Throws operon::Error unless gamma, h > 0, n >= 1, the remaining
    /// constants are nonnegative and a fixed L is positive.
    void validate() const;
};

/// Reads `key = value` lines (c0, c, gamma, v, delta, h, n, L) with exact
/// rationals; `L = sym` leaves lactose symbolic. Unlisted keys keep their
/// default values. `#` starts a comment.
LacParams parse_params(std::string_view text);

/// Default rendering precision for interval widths.
inline Rat default_precision() { return exact::pow10_neg(6); }

/// Steady-state equations with denominators (1 + A^n) and (h + A) cleared,
/// as polynomials in M over A over L.
struct SteadySystem {
    TriPoly production; // from dM/dt = 0
    TriPoly balance;    // from dA/dt = 0
};

SteadySystem build_system(const LacParams& p);

/// Primitive, sign-normalized Res_M of the steady-state system: a polynomial
/// of degree n + 2 in A whose coefficients are polynomials in symbolic L.
/// Any fixed L in `p` is ignored. Throws when neither equation involves M.
BiPoly eliminate_M(const LacParams& p);

/// The symbolic eliminant with L substituted.
RatPoly eliminant_at(const LacParams& p, const Rat& L);

/// Discriminant in A of the eliminant, a polynomial in L.
RatPoly lactose_discriminant(const LacParams& p);

/// Positive roots of the lactose discriminant. Throws when it vanishes
/// identically.
std::vector<RootBox> critical_lactose_values(const LacParams& p, const Rat& precision);

struct SteadyCount {
    std::size_t count = 0;
    bool boundary = false; // L falls on a critical value at the working precision
};

/// Closed rational interval.
struct Interval {
    Rat lo;
    Rat hi;
    Rat midpoint() const { return Rat((lo + hi) / 2); }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

/// Positive steady state; M and R are exact images of the A interval.
struct SteadyState {
    Interval A;
    Interval M;
    Interval R;
};

struct RegionCount {
    Rat lo;                // open lower end (0 for the first region)
    std::optional<Rat> hi; // open upper end; nullopt means +infinity
    std::size_t count = 0;
};

struct BranchPoint {
    Rat L;
    RootBox A;
    std::size_t branch = 0;       // index among positive roots at this L, ascending
    std::size_t region_count = 0; // positive steady states at this L
    bool boundary = false;
};

struct BifurcationReport {
    std::vector<RootBox> critical;
    std::vector<RegionCount> regions;
    std::vector<BranchPoint> points; // sorted by L, then branch
    std::vector<Rat> samples;
};

/// Precomputes the eliminant, its discriminant and the critical lactose
/// values once for repeated queries.
class SteadyStateAnalysis {
public:
    explicit SteadyStateAnalysis(LacParams params, Rat precision = default_precision());

    const LacParams& params() const noexcept { return params_; }
    const BiPoly& eliminant() const noexcept { return eliminant_; }
    const RatPoly& discriminant() const noexcept { return discriminant_; }
    const std::vector<RootBox>& critical_values() const noexcept { return critical_; }

    /// Throws unless L > 0.
    SteadyCount count(const Rat& L) const;
    std::vector<SteadyState> steady_states(const Rat& L, const Rat& precision) const;
    /// Requires 0 < lo < hi and samples >= 2.
    BifurcationReport bifurcation(const Rat& lo, const Rat& hi, std::size_t samples, const Rat& precision) const;

private:
    bool near_critical(const Rat& L) const;

    LacParams params_;
    BiPoly eliminant_;
    RatPoly discriminant_;
    std::vector<RootBox> critical_;
};

SteadyCount steady_state_count(const LacParams& p, const Rat& L, const Rat& precision = default_precision());
std::vector<SteadyState> steady_states_at(const LacParams& p, const Rat& L, const Rat& precision);
BifurcationReport bifurcation_curve(const LacParams& p, const Rat& lo, const Rat& hi, std::size_t samples,
                                    const Rat& precision);

/// M = (c0 (1 + A^n) + c A^n) / (gamma (1 + A^n)).
Rat recover_M(const LacParams& p, const Rat& A);
/// R = 1 / (1 + A^n).
Rat recover_R(const LacParams& p, const Rat& A);

/// `L,A,branch,region_count` with fixed-point decimals.
std::string to_csv(const BifurcationReport& report, int digits);
nlohmann::json to_json(const std::vector<SteadyState>& states, int digits);

} // namespace operon::lac
