#include "dss/rational.hpp"

#include <charconv>
#include <limits>

#include "dss/error.hpp"

namespace dss {

namespace {

__int128 wide_abs(__int128 v) { return v < 0 ? -v : v; }

__int128 wide_gcd(__int128 a, __int128 b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(__int128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw OverflowError("rational arithmetic overflowed 64 bits");
    }
    return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw DataError("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

} // namespace

Rational Rational::reduce(Wide num, Wide den) {
    if (den == 0) throw DataError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) return Rational(0, 1, Raw{});
    const Wide g = wide_gcd(num, den);
    return Rational(narrow(num / g), narrow(den / g), Raw{});
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    *this = reduce(num, den);
}

Rational Rational::operator-() const {
    return reduce(-static_cast<Wide>(num_), den_);
}

Rational Rational::reciprocal() const {
    if (num_ == 0) throw DataError("reciprocal of zero");
    return reduce(den_, num_);
}

Rational Rational::abs() const {
    return num_ < 0 ? -*this : *this;
}

Rational operator+(const Rational& a, const Rational& b) {
    using Wide = Rational::Wide;
    const Wide num = static_cast<Wide>(a.num_) * b.den_ + static_cast<Wide>(b.num_) * a.den_;
    return Rational::reduce(num, static_cast<Wide>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    using Wide = Rational::Wide;
    const Wide num = static_cast<Wide>(a.num_) * b.den_ - static_cast<Wide>(b.num_) * a.den_;
    return Rational::reduce(num, static_cast<Wide>(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    using Wide = Rational::Wide;
    return Rational::reduce(static_cast<Wide>(a.num_) * b.num_,
                            static_cast<Wide>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    using Wide = Rational::Wide;
    if (b.num_ == 0) throw DataError("rational division by zero");
    return Rational::reduce(static_cast<Wide>(a.num_) * b.den_,
                            static_cast<Wide>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    using Wide = Rational::Wide;
    const Wide lhs = static_cast<Wide>(a.num_) * b.den_;
    const Wide rhs = static_cast<Wide>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw DataError("empty rational literal");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const std::int64_t num = parse_int(text.substr(0, slash));
        const std::int64_t den = parse_int(text.substr(slash + 1));
        return Rational(num, den);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 18 ||
            frac.find_first_not_of("0123456789") != std::string_view::npos) {
            throw DataError("bad decimal literal: '" + std::string(text) + "'");
        }
        const bool negative = !whole.empty() && whole.front() == '-';
        std::int64_t whole_value = 0;
        if (!whole.empty() && whole != "-" && whole != "+") whole_value = parse_int(whole);
        Wide scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::int64_t frac_value = parse_int(frac);
        Wide num = wide_abs(static_cast<Wide>(whole_value)) * scale + frac_value;
        if (negative) num = -num;
        return reduce(num, scale);
    }
    return Rational(parse_int(text));
}

} // namespace dss
