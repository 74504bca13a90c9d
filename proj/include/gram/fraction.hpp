// Exact rational arithmetic for rule measures and thresholds.
//
// Rule counts are sensitive to boundary ties (2/3 vs 0.667), so every
// threshold comparison in the library goes through cross-multiplied integer
// arithmetic instead of floating point.
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "gram/errors.hpp"

namespace gram {

class Fraction {
  public:
    constexpr Fraction() : num_(0), den_(1) {}

    // Reduced on construction; requires den > 0 and num >= 0.
    Fraction(std::int64_t num, std::int64_t den);

    static Fraction ratio(std::size_t num, std::size_t den) {
        return Fraction(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
    }

    // Parses a plain decimal ("0.17", "1", "1.0") into the exact rational
    // 17/100 etc. At most 9 fractional digits are accepted so that all
    // downstream cross multiplications stay inside 128-bit range.
    static Fraction from_decimal(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "num/den"
    std::string to_string() const;

    friend bool operator==(const Fraction& a, const Fraction& b) {
        // Both sides are kept reduced, so structural equality is exact.
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        const auto lhs = static_cast<__int128>(a.num_) * b.den_;
        const auto rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

  private:
    std::int64_t num_;
    std::int64_t den_;  // > 0
};

// a/b >= f, compared exactly. Requires b > 0.
inline bool ratio_at_least(std::int64_t a, std::int64_t b, const Fraction& f) {
    return static_cast<__int128>(a) * f.den() >= static_cast<__int128>(f.num()) * b;
}

}  // namespace gram
