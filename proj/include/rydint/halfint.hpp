#pragma once

#include <compare>
#include <cstdlib>
#include <string>

#include "rydint/errors.hpp"

namespace rydint {

/// Exact half-integer angular momentum. Stores twice the value so 1/2, 3/2,
/// ... are represented without floating point.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(int twice) : twice_(twice) {}

    static constexpr HalfInt from_int(int v) { return HalfInt(2 * v); }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr HalfInt operator-() const { return HalfInt(-twice_); }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt(a.twice_ + b.twice_); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt(a.twice_ - b.twice_); }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

    /// "1/2", "-3/2", "2"
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    /// Parses "3/2", "1.5" or "2". Throws ArgumentError on anything else.
    static HalfInt parse(const std::string& s);

private:
    int twice_ = 0;
};

inline constexpr HalfInt half{1};

} // namespace rydint
