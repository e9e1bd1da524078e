#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "operon/gf2/bit_vector.hpp"
#include "operon/gf2/expr.hpp"
#include "operon/groebner/groebner.hpp"

namespace operon::boolnet {

using gf2::BoolPoly;
using gf2::Expr;
using State = gf2::BitVector;

/// 0/1 value per parameter name.
struct ParamSetting {
    std::map<std::string, bool> values;

    friend bool operator==(const ParamSetting&, const ParamSetting&) = default;
};

/// Synchronous Boolean network: state variables with one update rule each,
/// plus external 0/1 parameters that are never updated.
class BooleanNetwork {
public:
    /// Validates names and identifiers; throws operon::Error.
    BooleanNetwork(std::string name, std::vector<std::string> variables, std::vector<std::string> params,
                   std::vector<Expr> rules);

    const std::string& name() const noexcept { return name_; }
    const gf2::VarSetPtr& vars() const noexcept { return vars_; }
    std::size_t size() const noexcept { return vars_->size(); }
    const std::vector<std::string>& params() const noexcept { return params_; }
    const Expr& rule(std::size_t i) const { return rules_.at(i); }
    const std::vector<Expr>& rules() const noexcept { return rules_; }

    /// Throws operon::Error unless `setting` assigns exactly the declared parameters.
    void check(const ParamSetting& setting) const;
    void check(const State& state) const;

private:
    std::string name_;
    gf2::VarSetPtr vars_;
    std::vector<std::string> params_;
    std::vector<Expr> rules_;
};

/// Parses the network DSL:
///
///     network lac
///     vars: M, P, B, C, R, A, Al, L, Ll
///     params: a, g
///     M' = !R & C
///     ...
///
/// `#` starts a comment. Errors carry the offending line number.
BooleanNetwork parse_network(std::string_view text);

/// Parses `a=1,g=0`; values other than 0/1 and unknown names throw operon::Error.
ParamSetting parse_param_setting(std::string_view text, const BooleanNetwork& net);

/// Every parameter setting in binary order (first declared parameter is the
/// most significant bit).
std::vector<ParamSetting> all_param_settings(const BooleanNetwork& net);

std::string to_string(const ParamSetting& setting);

/// Translated update functions H_i with parameters substituted.
std::vector<BoolPoly> update_polynomials(const BooleanNetwork& net, const ParamSetting& params);

/// One generator H_i + x_i per variable; zero generators are pruned.
groebner::PolySystem to_polynomial_system(const BooleanNetwork& net, const ParamSetting& params);

} // namespace operon::boolnet
