#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphk {

// Natural number extended with omega. Addition absorbs into omega; every
// finite value compares below omega. Arithmetic on finite values that would
// wrap 64 bits throws instead of wrapping.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t n) : v_(n) {}

    static constexpr ExtNat omega() {
        ExtNat e;
        e.v_ = kOmega;
        return e;
    }

    constexpr bool is_omega() const { return v_ == kOmega; }
    constexpr bool is_finite() const { return v_ != kOmega; }

    std::uint64_t finite() const {
        if (is_omega()) throw std::logic_error("ExtNat: finite() called on omega");
        return v_;
    }

    friend ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.is_omega() || b.is_omega()) return omega();
        std::uint64_t s = a.v_ + b.v_;
        if (s < a.v_ || s == kOmega) throw std::overflow_error("ExtNat: sum overflow");
        return ExtNat(s);
    }
    ExtNat& operator+=(ExtNat o) { return *this = *this + o; }

    // kOmega is the largest representable value, so raw comparison orders
    // omega above every finite count.
    friend constexpr bool operator==(ExtNat, ExtNat) = default;
    friend constexpr auto operator<=>(ExtNat a, ExtNat b) { return a.v_ <=> b.v_; }

    std::string str() const { return is_omega() ? "inf" : std::to_string(v_); }

private:
    static constexpr std::uint64_t kOmega = ~std::uint64_t{0};
    std::uint64_t v_ = 0;
};

}  // namespace graphk
