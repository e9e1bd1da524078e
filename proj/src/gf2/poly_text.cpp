#include "operon/gf2/poly_text.hpp"

#include <cctype>
#include <string>

#include "operon/error.hpp"

namespace operon::gf2 {

BoolPoly parse_poly(std::string_view text, const VarSetPtr& vars) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError(msg + " at column " + std::to_string(pos + 1));
    };
    auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };

    std::vector<BoolMonomial> terms;
    while (true) {
        std::uint64_t bits = 0;
        bool vanished = false;
        while (true) {
            skip();
            if (pos == text.size()) throw fail("expected a factor");
            const std::size_t start = pos;
            while (pos < text.size() && ident_char(text[pos])) ++pos;
            if (start == pos) throw fail("unexpected '" + std::string(1, text[pos]) + "'");
            const std::string_view token = text.substr(start, pos - start);
            if (token == "1") {
            } else if (token == "0") {
                vanished = true;
            } else if (std::isdigit(static_cast<unsigned char>(token.front()))) {
                pos = start;
                throw fail("invalid coefficient '" + std::string(token) + "'");
            } else {
                auto index = vars->find(token);
                if (!index) {
                    pos = start;
                    throw fail("unknown variable '" + std::string(token) + "'");
                }
                bits |= std::uint64_t{1} << *index;
            }
            skip();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!vanished) terms.emplace_back(bits);
        if (pos == text.size()) break;
        if (text[pos] != '+') throw fail("expected '+' or '*'");
        ++pos;
    }
    return BoolPoly(vars, std::move(terms));
}

} // namespace operon::gf2
