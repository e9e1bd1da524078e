#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace operon::gf2 {

/// Squarefree product of variables stored as a bitset over variable indices.
/// The empty set is the constant monomial 1.
class BoolMonomial {
public:
    constexpr BoolMonomial() = default;
    constexpr explicit BoolMonomial(std::uint64_t bits) : bits_(bits) {}

    static constexpr BoolMonomial one() { return BoolMonomial{}; }
    static constexpr BoolMonomial var(std::size_t index) { return BoolMonomial{std::uint64_t{1} << index}; }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int degree() const { return std::popcount(bits_); }
    constexpr bool is_one() const { return bits_ == 0; }
    constexpr bool contains(std::size_t index) const { return (bits_ >> index) & 1U; }
    constexpr bool divides(BoolMonomial other) const { return (bits_ & ~other.bits_) == 0; }

    /// Product in the quotient ring (x*x = x): set union.
    friend constexpr BoolMonomial operator*(BoolMonomial a, BoolMonomial b) { return BoolMonomial{a.bits_ | b.bits_}; }
    friend constexpr BoolMonomial lcm(BoolMonomial a, BoolMonomial b) { return a * b; }
    /// Cofactor `a / b` for `b | a`.
    friend constexpr BoolMonomial quotient(BoolMonomial a, BoolMonomial b) { return BoolMonomial{a.bits_ & ~b.bits_}; }
    friend constexpr bool coprime(BoolMonomial a, BoolMonomial b) { return (a.bits_ & b.bits_) == 0; }

    /// Structural order on the raw bitset; not a monomial order.
    friend constexpr auto operator<=>(BoolMonomial, BoolMonomial) = default;

private:
    std::uint64_t bits_ = 0;
};

enum class OrderKind { lex, degrevlex };

/// Total order on squarefree monomials. `priority` lists variable indices from
/// most to least significant; an empty priority means index order
/// (variable 0 is the largest).
class MonomialOrder {
public:
    MonomialOrder() : MonomialOrder(OrderKind::degrevlex) {}
    explicit MonomialOrder(OrderKind kind, std::vector<std::size_t> priority = {});

    static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
    static MonomialOrder degrevlex() { return MonomialOrder(OrderKind::degrevlex); }

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& priority() const { return priority_; }

    /// Re-encodes a monomial so the most significant variable occupies bit 63.
    /// Under this key, lex is plain unsigned comparison.
    std::uint64_t key(BoolMonomial m) const;
    BoolMonomial from_key(std::uint64_t key) const;

    /// Compares two keys produced by `key()`.
    std::strong_ordering compare_keys(std::uint64_t a, std::uint64_t b) const {
        if (kind_ == OrderKind::lex) return a <=> b;
        if (auto c = std::popcount(a) <=> std::popcount(b); c != 0) return c;
        if (a == b) return std::strong_ordering::equal;
        const std::uint64_t lowest = (a ^ b) & (~(a ^ b) + 1);
        return (a & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    std::strong_ordering compare(BoolMonomial a, BoolMonomial b) const { return compare_keys(key(a), key(b)); }
    bool less(BoolMonomial a, BoolMonomial b) const { return compare(a, b) < 0; }

private:
    OrderKind kind_;
    std::vector<std::size_t> priority_;
    std::vector<int> rank_; // rank_[var] = bit position in key space
};

} // namespace operon::gf2
