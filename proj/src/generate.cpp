#include "dss/generate.hpp"

#include <algorithm>
#include <cmath>

#include "dss/error.hpp"

namespace dss {

namespace {

// Nearest-row offset for exact slope r/s at horizontal distance dx:
// floor(r*dx/s + 1/2) with non-negative operands, so plain integer
// division is the floor.
std::int64_t rounded_row_exact(std::int64_t r, std::int64_t s, std::int64_t dx) {
    return (2 * r * dx + s) / (2 * s);
}

constexpr long double kCellBoundaryGuard = 0x1p-40L;

std::int64_t rounded_row_approx(long double m, std::int64_t dx) {
    const long double shifted = m * static_cast<long double>(dx) + 0.5L;
    const long double nearest = std::round(shifted);
    if (std::fabs(shifted - nearest) < kCellBoundaryGuard) {
        throw PrecisionError("slope evaluation within 2^-40 of a cell boundary");
    }
    return static_cast<std::int64_t>(std::floor(shifted));
}

} // namespace

Dss generate_optimal(GridPoint origin, const SlopeValue& m, std::int64_t steps) {
    if (steps < 1) throw DataError("step count must be positive");
    if (m.is_exact()) {
        const Rational& slope = m.exact_value();
        if (slope < Rational(0) || slope > Rational(1)) {
            throw DataError("slope must lie in [0, 1]");
        }
    } else if (m.approx_value() < 0.0L || m.approx_value() > 1.0L) {
        throw DataError("slope must lie in [0, 1]");
    }

    Dss seg{.points = {}, .slope = m, .origin = origin};
    seg.points.reserve(static_cast<std::size_t>(steps) + 1);
    seg.points.push_back(origin);
    for (std::int64_t dx = 1; dx <= steps; ++dx) {
        const std::int64_t row =
            m.is_exact()
                ? rounded_row_exact(m.exact_value().num(), m.exact_value().den(), dx)
                : rounded_row_approx(m.approx_value(), dx);
        seg.points.push_back({origin.x + dx, origin.y + row});
    }
    return seg;
}

std::int64_t period_length(const Rational& m) {
    if (m < Rational(0) || m > Rational(1)) throw DataError("slope must lie in [0, 1]");
    return m.den();
}

std::vector<BasicSet> basic_sets(const Rational& m) {
    const std::int64_t s = period_length(m);
    const Dss two_periods = generate_optimal({0, 0}, SlopeValue::exact(m), 2 * s);

    std::vector<BasicSet> sets;
    sets.reserve(static_cast<std::size_t>(s));
    for (std::int64_t offset = 0; offset < s; ++offset) {
        BasicSet bs{.slope = m, .points = {}};
        bs.points.reserve(static_cast<std::size_t>(s) + 1);
        const GridPoint base = two_periods.points[static_cast<std::size_t>(offset)];
        for (std::int64_t j = 0; j <= s; ++j) {
            bs.points.push_back(two_periods.points[static_cast<std::size_t>(offset + j)] - base);
        }
        if (std::find(sets.begin(), sets.end(), bs) == sets.end()) {
            sets.push_back(std::move(bs));
        }
    }
    return sets;
}

Dss generate_from_basic_set(const BasicSet& bs, std::int64_t periods) {
    if (periods < 1) throw DataError("period count must be positive");
    const std::int64_t s = bs.slope.den();
    const std::int64_t r = bs.slope.num();
    if (bs.points.size() != static_cast<std::size_t>(s) + 1) {
        throw DataError("basic set must hold s+1 points");
    }

    Dss seg{.points = bs.points,
            .slope = SlopeValue::exact(bs.slope),
            .origin = bs.points.front()};
    seg.points.reserve(static_cast<std::size_t>(periods * s) + 1);
    for (std::int64_t n = 1; n < periods; ++n) {
        const GridPoint shift{n * s, n * r};
        for (std::int64_t j = 1; j <= s; ++j) {
            seg.points.push_back(bs.points[static_cast<std::size_t>(j)] + shift);
        }
    }
    return seg;
}

} // namespace dss
