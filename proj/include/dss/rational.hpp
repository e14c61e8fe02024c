#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace dss {

// Exact fraction over 64-bit integers, always kept reduced with a positive
// denominator, so every value has exactly one representation and equality
// is field-wise. Arithmetic is carried out in 128-bit intermediates and
// throws OverflowError if a reduced result no longer fits in 64 bits.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_(value) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const;
    Rational reciprocal() const;
    Rational abs() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    long double to_long_double() const {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

    // "p/q" when the denominator is not 1, plain integer otherwise.
    std::string str() const;

    // Accepts "p/q", plain integers, and finite decimals such as "0.25".
    static Rational parse(std::string_view text);

private:
    using Wide = __int128;

    struct Raw {};
    constexpr Rational(std::int64_t num, std::int64_t den, Raw) : num_(num), den_(den) {}

    // Normalizes an unreduced wide fraction; the only construction path.
    static Rational reduce(Wide num, Wide den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace dss
