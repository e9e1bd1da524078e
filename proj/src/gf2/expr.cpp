#include "operon/gf2/expr.hpp"

#include <cctype>
#include <vector>

#include "operon/error.hpp"

namespace operon::gf2 {

struct Expr::Node {
    ExprOp op;
    bool value = false;
    std::string name;
    std::vector<Expr> children;
};

Expr Expr::constant(bool value) {
    return Expr(std::make_shared<const Node>(Node{ExprOp::constant, value, {}, {}}));
}

Expr Expr::variable(std::string name) {
    return Expr(std::make_shared<const Node>(Node{ExprOp::variable, false, std::move(name), {}}));
}

Expr Expr::negation(Expr operand) {
    return Expr(std::make_shared<const Node>(Node{ExprOp::negation, false, {}, {std::move(operand)}}));
}

Expr Expr::binary(ExprOp op, Expr lhs, Expr rhs) {
    if (op != ExprOp::conjunction && op != ExprOp::exclusive && op != ExprOp::disjunction) {
        throw Error("not a binary operator");
    }
    return Expr(std::make_shared<const Node>(Node{op, false, {}, {std::move(lhs), std::move(rhs)}}));
}

ExprOp Expr::op() const { return node_->op; }
bool Expr::value() const { return node_->value; }
const std::string& Expr::name() const { return node_->name; }

const Expr& Expr::operand() const { return node_->children.at(0); }
const Expr& Expr::lhs() const { return node_->children.at(0); }
const Expr& Expr::rhs() const { return node_->children.at(1); }

bool Expr::evaluate(const std::function<bool(const std::string&)>& lookup) const {
    switch (op()) {
    case ExprOp::constant: return value();
    case ExprOp::variable: return lookup(name());
    case ExprOp::negation: return !operand().evaluate(lookup);
    case ExprOp::conjunction: return lhs().evaluate(lookup) && rhs().evaluate(lookup);
    case ExprOp::exclusive: return lhs().evaluate(lookup) != rhs().evaluate(lookup);
    case ExprOp::disjunction: return lhs().evaluate(lookup) || rhs().evaluate(lookup);
    }
    return false;
}

std::set<std::string> Expr::identifiers() const {
    std::set<std::string> out;
    std::function<void(const Expr&)> walk = [&](const Expr& e) {
        switch (e.op()) {
        case ExprOp::constant: break;
        case ExprOp::variable: out.insert(e.name()); break;
        case ExprOp::negation: walk(e.operand()); break;
        default:
            walk(e.lhs());
            walk(e.rhs());
        }
    };
    walk(*this);
    return out;
}

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    Expr parse() {
        Expr e = disjunction();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    Expr disjunction() {
        Expr e = exclusive();
        while (accept('|')) e = Expr::binary(ExprOp::disjunction, e, exclusive());
        return e;
    }

    Expr exclusive() {
        Expr e = conjunction();
        while (accept('^')) e = Expr::binary(ExprOp::exclusive, e, conjunction());
        return e;
    }

    Expr conjunction() {
        Expr e = unary();
        while (accept('&')) e = Expr::binary(ExprOp::conjunction, e, unary());
        return e;
    }

    Expr unary() {
        if (accept('!')) return Expr::negation(unary());
        return primary();
    }

    Expr primary() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of expression");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = disjunction();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (c == '0' || c == '1') {
            ++pos_;
            if (pos_ < text_.size() && is_ident_char(text_[pos_])) fail("invalid constant");
            return Expr::constant(c == '1');
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            return Expr::variable(std::string(text_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    static bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at column " + std::to_string(pos_ + 1));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Expr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string to_string(const Expr& e) {
    switch (e.op()) {
    case ExprOp::constant: return e.value() ? "1" : "0";
    case ExprOp::variable: return e.name();
    case ExprOp::negation: return "!" + to_string(e.operand());
    case ExprOp::conjunction: return "(" + to_string(e.lhs()) + " & " + to_string(e.rhs()) + ")";
    case ExprOp::exclusive: return "(" + to_string(e.lhs()) + " ^ " + to_string(e.rhs()) + ")";
    case ExprOp::disjunction: return "(" + to_string(e.lhs()) + " | " + to_string(e.rhs()) + ")";
    }
    return {};
}

BoolPoly translate_expr(const Expr& e, const VarSetPtr& vars, const std::map<std::string, bool>& constants) {
    switch (e.op()) {
    case ExprOp::constant: return BoolPoly::constant(vars, e.value());
    case ExprOp::variable: {
        if (auto it = constants.find(e.name()); it != constants.end()) return BoolPoly::constant(vars, it->second);
        auto index = vars->find(e.name());
        if (!index) throw TranslationError(e.name());
        return BoolPoly::variable(vars, *index);
    }
    case ExprOp::negation: return translate_expr(e.operand(), vars, constants) + BoolPoly::one(vars);
    case ExprOp::conjunction:
        return translate_expr(e.lhs(), vars, constants) * translate_expr(e.rhs(), vars, constants);
    case ExprOp::exclusive:
        return translate_expr(e.lhs(), vars, constants) + translate_expr(e.rhs(), vars, constants);
    case ExprOp::disjunction: {
        BoolPoly a = translate_expr(e.lhs(), vars, constants);
        BoolPoly b = translate_expr(e.rhs(), vars, constants);
        return a + b + a * b;
    }
    }
    return BoolPoly::zero(vars);
}

} // namespace operon::gf2
