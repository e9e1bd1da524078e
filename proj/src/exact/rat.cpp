#include "operon/exact/rat.hpp"

#include <cctype>

#include "operon/error.hpp"

namespace operon::exact {
namespace {

Int pow10(unsigned k) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, k);
    return out;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rat pow10_neg(unsigned k) { return Rat(Int(1), pow10(k)); }

Rat parse_rat(std::string_view text) {
    const auto fail = [&] { return ParseError("invalid rational '" + std::string(text) + "'"); };
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw fail();

    bool negative = false;
    if (s.front() == '-' || s.front() == '+') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    Rat value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        const std::string_view num = s.substr(0, slash);
        const std::string_view den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw fail();
        const Int d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        value = Rat(Int{std::string(num)}, d);
        value.canonicalize();
    } else {
        long exponent = 0;
        if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp = s.substr(e + 1);
            bool exp_negative = false;
            if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
                exp_negative = exp.front() == '-';
                exp.remove_prefix(1);
            }
            if (!all_digits(exp) || exp.size() > 6) throw fail();
            exponent = std::stol(std::string(exp)) * (exp_negative ? -1 : 1);
            s = s.substr(0, e);
        }
        std::string digits;
        if (auto dot = s.find('.'); dot != std::string_view::npos) {
            const std::string_view whole = s.substr(0, dot);
            const std::string_view frac = s.substr(dot + 1);
            if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
                (!frac.empty() && !all_digits(frac))) {
                throw fail();
            }
            digits = std::string(whole) + std::string(frac);
            exponent -= static_cast<long>(frac.size());
        } else {
            if (!all_digits(s)) throw fail();
            digits = std::string(s);
        }
        if (digits.empty()) digits = "0";
        value = Rat(Int{digits});
        if (exponent > 0) value *= Rat(pow10(static_cast<unsigned>(exponent)));
        if (exponent < 0) value /= Rat(pow10(static_cast<unsigned>(-exponent)));
    }
    return negative ? Rat(-value) : value;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Int round_half_even(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t()); // floor
    const Rat frac = r - Rat(q);
    const int cmp = ::cmp(frac, Rat(1, 2));
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t()))) ++q;
    return q;
}

std::string to_decimal(const Rat& r, int digits) {
    if (digits < 0) throw Error("negative digit count");
    const Int scaled = round_half_even(r * Rat(pow10(static_cast<unsigned>(digits))));
    Int magnitude = abs(scaled);
    std::string body = magnitude.get_str();
    if (digits > 0) {
        if (body.size() <= static_cast<std::size_t>(digits)) body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
        body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    }
    return (sgn(scaled) < 0 ? "-" : "") + body;
}

} // namespace operon::exact
