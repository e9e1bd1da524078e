#include "operon/gf2/bit_vector.hpp"

#include "operon/error.hpp"
#include "operon/gf2/var_set.hpp"

namespace operon::gf2 {

BitVector::BitVector(std::size_t size, std::uint64_t bits) : size_(size) {
    if (size > kMaxVars) throw LimitError("bit vectors hold at most 64 coordinates");
    const std::uint64_t mask = size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1;
    bits_ = bits & mask;
}

BitVector BitVector::parse(std::string_view text) {
    if (text.size() > kMaxVars) throw LimitError("bit vectors hold at most 64 coordinates");
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '0') {
            throw Error("invalid bit string '" + std::string(text) + "'");
        }
    }
    return BitVector(text.size(), bits);
}

BitVector BitVector::with(std::size_t i, bool value) const {
    if (i >= size_) throw Error("bit index out of range");
    const std::uint64_t bit = std::uint64_t{1} << i;
    return BitVector(size_, value ? (bits_ | bit) : (bits_ & ~bit));
}

std::string BitVector::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if ((*this)[i]) out[i] = '1';
    }
    return out;
}

} // namespace operon::gf2
