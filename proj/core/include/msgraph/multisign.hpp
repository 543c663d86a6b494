#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace msgraph {

// Element of the group {+1,-1}^m under componentwise multiplication,
// 1 <= m <= 64. Bit i set <=> component i is -1, so the group product is a
// single xor and every element is its own inverse.
class Multisign {
public:
    static constexpr int max_width = 64;

    // The all-+1 element.
    static Multisign identity(int width);

    // Element from its bit encoding; bits above `width` must be zero.
    static Multisign from_bits(int width, std::uint64_t bits);

    // Text encoding: character i is '+' or '-' for component i.
    static Multisign parse(std::string_view text);

    int width() const { return width_; }
    std::uint64_t bits() const { return bits_; }
    bool is_identity() const { return bits_ == 0; }

    // Component i as +1 or -1.
    int component(int i) const;

    // Copy with component i negated.
    Multisign flipped(int i) const;

    // k-th power: identity for even k, *this for odd (every element has
    // order at most 2).
    Multisign pow_parity(std::uint64_t k) const;

    std::string to_text() const;

    Multisign& operator*=(const Multisign& rhs);
    friend Multisign operator*(Multisign a, const Multisign& b) { return a *= b; }

    friend bool operator==(const Multisign&, const Multisign&) = default;
    friend std::strong_ordering operator<=>(const Multisign&, const Multisign&) = default;

private:
    Multisign(int width, std::uint64_t bits) : width_(width), bits_(bits) {}

    int width_;
    std::uint64_t bits_;
};

std::ostream& operator<<(std::ostream& os, const Multisign& g);

} // namespace msgraph
