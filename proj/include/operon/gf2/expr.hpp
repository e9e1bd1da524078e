#pragma once

#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>

#include "operon/error.hpp"
#include "operon/gf2/bool_poly.hpp"

namespace operon::gf2 {

enum class ExprOp { constant, variable, negation, conjunction, exclusive, disjunction };

/// Immutable logic expression tree over named identifiers.
class Expr {
public:
    static Expr constant(bool value);
    static Expr variable(std::string name);
    static Expr negation(Expr operand);
    static Expr binary(ExprOp op, Expr lhs, Expr rhs);

    ExprOp op() const;
    bool value() const;              // constant
    const std::string& name() const; // variable
    const Expr& operand() const;     // negation
    const Expr& lhs() const;         // binary
    const Expr& rhs() const;         // binary

    bool evaluate(const std::function<bool(const std::string&)>& lookup) const;
    std::set<std::string> identifiers() const;

private:
    struct Node;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses `!`, `&`, `^`, `|` (tightest to loosest, left-associative),
/// parentheses, `0`, `1` and identifiers. Throws operon::ParseError.
Expr parse_expr(std::string_view text);

/// Fully parenthesised rendering, e.g. `(!A & !Al)`.
std::string to_string(const Expr& e);

/// Translates a logic expression into the Boolean ring:
///   !a -> a + 1,  a & b -> ab,  a ^ b -> a + b,  a | b -> a + b + ab.
/// Identifiers found in `constants` are replaced by their value first.
/// Throws operon::TranslationError naming any other identifier missing from `vars`.
BoolPoly translate_expr(const Expr& e, const VarSetPtr& vars,
                        const std::map<std::string, bool>& constants = {});

class TranslationError : public Error {
public:
    explicit TranslationError(const std::string& identifier)
        : Error("unknown identifier '" + identifier + "'"), identifier_(identifier) {}
    const std::string& identifier() const noexcept { return identifier_; }

private:
    std::string identifier_;
};

} // namespace operon::gf2
