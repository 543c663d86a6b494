#include "msgraph/multisign.hpp"

#include <ostream>
#include <stdexcept>

namespace msgraph {

namespace {

void check_width(int width) {
    if (width < 1 || width > Multisign::max_width) {
        throw std::invalid_argument("multisign width must be in [1, 64], got " +
                                    std::to_string(width));
    }
}

} // namespace

Multisign Multisign::identity(int width) {
    check_width(width);
    return Multisign(width, 0);
}

Multisign Multisign::from_bits(int width, std::uint64_t bits) {
    check_width(width);
    if (width < max_width && (bits >> width) != 0) {
        throw std::invalid_argument("multisign bits exceed width " + std::to_string(width));
    }
    return Multisign(width, bits);
}

Multisign Multisign::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("multisign text is empty");
    }
    if (text.size() > static_cast<std::size_t>(max_width)) {
        throw std::invalid_argument("multisign text longer than 64 components (" +
                                    std::to_string(text.size()) + ")");
    }
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '-') {
            bits |= std::uint64_t{1} << i;
        } else if (text[i] != '+') {
            throw std::invalid_argument("illegal multisign character '" +
                                        std::string(1, text[i]) + "' at position " +
                                        std::to_string(i));
        }
    }
    return Multisign(static_cast<int>(text.size()), bits);
}

int Multisign::component(int i) const {
    if (i < 0 || i >= width_) {
        throw std::invalid_argument("component index " + std::to_string(i) +
                                    " out of range for width " + std::to_string(width_));
    }
    return (bits_ >> i) & 1 ? -1 : +1;
}

Multisign Multisign::flipped(int i) const {
    if (i < 0 || i >= width_) {
        throw std::invalid_argument("component index " + std::to_string(i) +
                                    " out of range for width " + std::to_string(width_));
    }
    return Multisign(width_, bits_ ^ (std::uint64_t{1} << i));
}

Multisign Multisign::pow_parity(std::uint64_t k) const {
    return (k & 1) ? *this : Multisign(width_, 0);
}

std::string Multisign::to_text() const {
    std::string out(static_cast<std::size_t>(width_), '+');
    for (int i = 0; i < width_; ++i) {
        if ((bits_ >> i) & 1) out[static_cast<std::size_t>(i)] = '-';
    }
    return out;
}

Multisign& Multisign::operator*=(const Multisign& rhs) {
    if (width_ != rhs.width_) {
        throw std::invalid_argument("multisign width mismatch: " + std::to_string(width_) +
                                    " vs " + std::to_string(rhs.width_));
    }
    bits_ ^= rhs.bits_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Multisign& g) {
    return os << g.to_text();
}

} // namespace msgraph
