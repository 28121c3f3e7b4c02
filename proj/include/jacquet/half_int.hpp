#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "jacquet/rational.hpp"

namespace jacquet {

// An element of (1/2)Z, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int value) : twice_(2 * static_cast<std::int64_t>(value)) {}

    static constexpr HalfInt from_twice(std::int64_t t) {
        HalfInt h;
        h.twice_ = t;
        return h;
    }
    // Accepts "3", "-2", "3/2", "-1/2".
    static HalfInt parse(std::string_view text);

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    // Only valid when is_integer().
    std::int64_t to_integer() const;
    Rational to_rational() const;
    std::string str() const;

    HalfInt operator-() const;
    HalfInt& operator+=(HalfInt o);
    HalfInt& operator-=(HalfInt o);
    friend HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr std::strong_ordering operator<=>(HalfInt a, HalfInt b) {
        return a.twice_ <=> b.twice_;
    }

private:
    std::int64_t twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

// (a + b) / 2; throws std::domain_error when the result is not in (1/2)Z.
HalfInt midpoint(HalfInt a, HalfInt b);

}  // namespace jacquet

template <>
struct std::hash<jacquet::HalfInt> {
    std::size_t operator()(jacquet::HalfInt h) const noexcept {
        return std::hash<std::int64_t>{}(h.twice());
    }
};
