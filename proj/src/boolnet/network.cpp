#include "operon/boolnet/network.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "operon/error.hpp"

namespace operon::boolnet {
namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())) || s.front() == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> split_names(std::string_view list) {
    std::string text(list);
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string name; in >> name;) {
        if (!is_identifier(name)) throw ParseError("invalid identifier '" + name + "'");
        out.push_back(name);
    }
    return out;
}

/// Returns the text after `keyword:` when the line starts with it.
std::optional<std::string> header(const std::string& line, std::string_view keyword) {
    if (line.size() > keyword.size() && line.compare(0, keyword.size(), keyword) == 0) {
        const std::string rest = trim(std::string_view(line).substr(keyword.size()));
        if (!rest.empty() && rest.front() == ':') return rest.substr(1);
    }
    return std::nullopt;
}

} // namespace

BooleanNetwork::BooleanNetwork(std::string name, std::vector<std::string> variables, std::vector<std::string> params,
                               std::vector<Expr> rules)
    : name_(std::move(name)), params_(std::move(params)), rules_(std::move(rules)) {
    vars_ = gf2::make_vars(std::move(variables));
    if (rules_.size() != vars_->size()) throw Error("expected one update rule per variable");
    std::set<std::string> seen;
    for (const std::string& p : params_) {
        if (vars_->find(p)) throw Error("'" + p + "' is declared both as variable and parameter");
        if (!seen.insert(p).second) throw Error("duplicate parameter '" + p + "'");
    }
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        for (const std::string& id : rules_[i].identifiers()) {
            if (!vars_->find(id) && !seen.contains(id)) {
                throw Error("rule for '" + vars_->name(i) + "' uses undeclared identifier '" + id + "'");
            }
        }
    }
}

void BooleanNetwork::check(const ParamSetting& setting) const {
    for (const std::string& p : params_) {
        if (!setting.values.contains(p)) throw Error("no value for parameter '" + p + "'");
    }
    for (const auto& [key, value] : setting.values) {
        if (std::find(params_.begin(), params_.end(), key) == params_.end()) {
            throw Error("unknown parameter '" + key + "'");
        }
    }
}

void BooleanNetwork::check(const State& state) const {
    if (state.size() != size()) {
        throw Error("state has " + std::to_string(state.size()) + " coordinates, network has " +
                    std::to_string(size()) + " variables");
    }
}

BooleanNetwork parse_network(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::string name;
    std::optional<std::vector<std::string>> variables;
    std::vector<std::string> params;
    std::map<std::string, std::pair<Expr, std::size_t>> rules;

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        try {
            if (line.rfind("network", 0) == 0 && (line.size() == 7 || std::isspace(static_cast<unsigned char>(line[7])))) {
                if (!name.empty()) throw ParseError("duplicate network declaration");
                name = trim(std::string_view(line).substr(7));
                if (!is_identifier(name)) throw ParseError("invalid network name '" + name + "'");
            } else if (auto list = header(line, "vars")) {
                if (variables) throw ParseError("duplicate 'vars:' declaration");
                variables = split_names(*list);
            } else if (auto plist = header(line, "params")) {
                params = split_names(*plist);
            } else {
                const auto eq = line.find('=');
                if (eq == std::string::npos) throw ParseError("expected `X' = <expr>`");
                std::string lhs = trim(std::string_view(line).substr(0, eq));
                if (lhs.empty() || lhs.back() != '\'') throw ParseError("update target must be written X'");
                lhs = trim(std::string_view(lhs).substr(0, lhs.size() - 1));
                if (!variables) throw ParseError("update rule before 'vars:' declaration");
                if (std::find(variables->begin(), variables->end(), lhs) == variables->end()) {
                    throw ParseError("update rule for undeclared variable '" + lhs + "'");
                }
                if (rules.contains(lhs)) throw ParseError("duplicate update rule for '" + lhs + "'");
                Expr rule = gf2::parse_expr(std::string_view(line).substr(eq + 1));
                for (const std::string& id : rule.identifiers()) {
                    const bool known = std::find(variables->begin(), variables->end(), id) != variables->end() ||
                                       std::find(params.begin(), params.end(), id) != params.end();
                    if (!known) throw ParseError("undeclared identifier '" + id + "'");
                }
                rules.emplace(lhs, std::make_pair(std::move(rule), line_no));
            }
        } catch (const ParseError& e) {
            if (e.line() != 0) throw;
            throw ParseError(e.what(), line_no);
        }
    }
    if (!variables) throw ParseError("missing 'vars:' declaration");
    std::vector<Expr> ordered;
    for (const std::string& v : *variables) {
        auto it = rules.find(v);
        if (it == rules.end()) throw ParseError("variable '" + v + "' has no update rule");
        ordered.push_back(it->second.first);
    }
    try {
        return BooleanNetwork(name.empty() ? "network" : name, std::move(*variables), std::move(params),
                              std::move(ordered));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

ParamSetting parse_param_setting(std::string_view text, const BooleanNetwork& net) {
    ParamSetting out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        const std::string entry = trim(item);
        if (entry.empty()) continue;
        const auto eq = entry.find('=');
        if (eq == std::string::npos) throw Error("expected name=value in '" + entry + "'");
        const std::string key = trim(std::string_view(entry).substr(0, eq));
        const std::string value = trim(std::string_view(entry).substr(eq + 1));
        if (value != "0" && value != "1") throw Error("parameter values must be 0 or 1");
        if (out.values.contains(key)) throw Error("parameter '" + key + "' set twice");
        out.values[key] = value == "1";
    }
    net.check(out);
    return out;
}

std::vector<ParamSetting> all_param_settings(const BooleanNetwork& net) {
    const std::size_t k = net.params().size();
    if (k > 20) throw LimitError("too many parameters to iterate");
    std::vector<ParamSetting> out;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << k); ++code) {
        ParamSetting s;
        for (std::size_t i = 0; i < k; ++i) s.values[net.params()[i]] = (code >> (k - 1 - i)) & 1U;
        out.push_back(std::move(s));
    }
    return out;
}

std::string to_string(const ParamSetting& setting) {
    std::string out;
    for (const auto& [key, value] : setting.values) {
        if (!out.empty()) out += ',';
        out += key + '=' + (value ? '1' : '0');
    }
    return out;
}

std::vector<BoolPoly> update_polynomials(const BooleanNetwork& net, const ParamSetting& params) {
    net.check(params);
    std::vector<BoolPoly> out;
    out.reserve(net.size());
    for (const Expr& rule : net.rules()) out.push_back(gf2::translate_expr(rule, net.vars(), params.values));
    return out;
}

groebner::PolySystem to_polynomial_system(const BooleanNetwork& net, const ParamSetting& params) {
    std::vector<BoolPoly> generators = update_polynomials(net, params);
    for (std::size_t i = 0; i < generators.size(); ++i) generators[i] += BoolPoly::variable(net.vars(), i);
    return groebner::PolySystem(net.vars(), std::move(generators));
}

} // namespace operon::boolnet
