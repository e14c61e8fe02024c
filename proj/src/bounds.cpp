#include "dss/bounds.hpp"

#include "dss/error.hpp"

namespace dss {

Rational adjacent_slope_gap(std::int64_t n) {
    if (n < 1) throw DataError("distance must be positive");
    return Rational(1, n);
}

Rational optimal_bound(std::int64_t n) {
    if (n < 1) throw DataError("distance must be positive");
    return Rational(1, 2 * n);
}

Rational general_bound(std::int64_t n) {
    if (n < 1) throw DataError("distance must be positive");
    return Rational(1, n);
}

BoundaryLines fit_boundary_lines(const Dss& seg) {
    if (!seg.slope.is_exact()) throw DataError("boundary lines need an exact slope");
    if (seg.points.size() < 2) throw DataError("segment needs at least two points");

    const Rational m = seg.slope.exact_value();
    const GridPoint first = seg.points.front();
    const Rational c = Rational(first.y) - m * Rational(first.x);

    Rational a(0);
    Rational b(0);
    for (const GridPoint& p : seg.points) {
        const Rational offset = Rational(p.y) - m * Rational(p.x) - c;
        if (offset > a) a = offset;
        if (-offset > b) b = -offset;
    }

    const auto steps = static_cast<std::int64_t>(seg.points.size()) - 1;
    return BoundaryLines{.m = m, .c = c, .a = a, .b = b, .tight = steps >= m.den()};
}

SlopeBoundsAt slope_bounds_at(const BoundaryLines& lines, GridPoint anchor, std::int64_t i) {
    if (i < 1) throw DataError("distance must be positive");
    const Rational k = Rational(anchor.y) - lines.m * Rational(anchor.x) - lines.c;
    if (k < -lines.b || k > lines.a) {
        throw DataError("anchor offset lies outside the boundary lines");
    }
    const Rational inv(1, i);
    return SlopeBoundsAt{.lower = lines.m - (lines.b + k) * inv,
                         .upper = lines.m + (lines.a - k) * inv,
                         .i = i};
}

Rational bounds_width(const BoundaryLines& lines, std::int64_t i) {
    if (i < 1) throw DataError("distance must be positive");
    return (lines.a + lines.b) * Rational(1, i);
}

} // namespace dss
