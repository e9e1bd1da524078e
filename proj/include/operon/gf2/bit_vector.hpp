#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace operon::gf2 {

/// Fixed-length 0/1 vector of at most 64 coordinates. Coordinate i lives in
/// bit i, so the packed word doubles as an evaluation point for BoolPoly.
/// Ordering is lexicographic with coordinate 0 first, matching to_string().
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size, std::uint64_t bits = 0);

    /// Parses "0110..."; throws operon::Error on other characters.
    static BitVector parse(std::string_view text);

    std::size_t size() const noexcept { return size_; }
    std::uint64_t bits() const noexcept { return bits_; }
    bool operator[](std::size_t i) const { return (bits_ >> i) & 1U; }
    BitVector with(std::size_t i, bool value) const;

    std::string to_string() const;

    friend bool operator==(const BitVector&, const BitVector&) = default;
    friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
        const std::size_t common = a.size_ < b.size_ ? a.size_ : b.size_;
        const std::uint64_t mask = common == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << common) - 1;
        const std::uint64_t diff = (a.bits_ ^ b.bits_) & mask;
        if (diff != 0) {
            const int first = std::countr_zero(diff);
            return ((a.bits_ >> first) & 1U) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return a.size_ <=> b.size_;
    }

private:
    std::uint64_t bits_ = 0;
    std::size_t size_ = 0;
};

} // namespace operon::gf2
