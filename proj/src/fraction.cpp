#include "gram/fraction.hpp"

#include <cctype>
#include <numeric>

namespace gram {

Fraction::Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den <= 0) throw ParamError("fraction denominator must be positive");
    if (num < 0) throw ParamError("fraction numerator must be non-negative");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    const std::int64_t g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

Fraction Fraction::from_decimal(std::string_view text) {
    if (text.empty()) throw ParamError("empty decimal");
    std::size_t pos = 0;
    std::int64_t integral = 0;
    std::size_t int_digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        integral = integral * 10 + (text[pos] - '0');
        if (integral > 1'000'000'000) throw ParamError("decimal out of range: " + std::string(text));
        ++int_digits;
        ++pos;
    }
    std::int64_t frac = 0;
    std::int64_t scale = 1;
    std::size_t frac_digits = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            frac = frac * 10 + (text[pos] - '0');
            scale *= 10;
            if (scale > 1'000'000'000)
                throw ParamError("at most 9 fractional digits supported: " + std::string(text));
            ++frac_digits;
            ++pos;
        }
        if (frac_digits == 0) throw ParamError("not a plain decimal: " + std::string(text));
    }
    if (int_digits == 0 || pos != text.size())
        throw ParamError("not a plain decimal: " + std::string(text));
    return Fraction(integral * scale + frac, scale);
}

std::string Fraction::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace gram
