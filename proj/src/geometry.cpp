#include "dss/geometry.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "dss/error.hpp"

namespace dss {

std::int64_t d8(GridPoint p, GridPoint q) {
    const std::int64_t dx = std::llabs(q.x - p.x);
    const std::int64_t dy = std::llabs(q.y - p.y);
    return dx > dy ? dx : dy;
}

Rational slope_between(GridPoint p, GridPoint q) {
    if (q.x == p.x) throw DataError("slope of a vertical point pair is undefined");
    return Rational(q.y - p.y, q.x - p.x);
}

const Rational& SlopeValue::exact_value() const {
    if (!exact_) throw DataError("slope is approximate, no exact value");
    return rational_;
}

long double SlopeValue::approx_value() const {
    if (exact_) throw DataError("slope is exact, no approximate value");
    return real_;
}

std::string SlopeValue::str() const {
    if (exact_) return rational_.str();
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.18Lg", real_);
    return buf;
}

MuSeries mu_series(std::span<const GridPoint> points, std::size_t anchor_index) {
    if (anchor_index >= points.size()) throw DataError("anchor index out of range");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (d8(points[i - 1], points[i]) != 1) {
            throw DataError("points are not 8-connected");
        }
    }
    MuSeries series;
    series.anchor = points[anchor_index];
    for (std::size_t i = anchor_index + 1; i < points.size(); ++i) {
        if (points[i].x <= points[i - 1].x) {
            throw DataError("x must increase strictly right of the anchor");
        }
        const std::int64_t distance = d8(series.anchor, points[i]);
        series.values.emplace_back(distance, slope_between(series.anchor, points[i]));
    }
    return series;
}

namespace {

// Sector k covers directions between chain rays k and k+1 (mod 8); its
// transform maps those two rays onto rays 0 and 1.
constexpr std::array<std::array<std::int64_t, 4>, 8> kSectorMatrices{{
    {1, 0, 0, 1},   // 0: identity
    {0, 1, 1, 0},   // 1: mirror across y = x
    {0, 1, -1, 0},  // 2: quarter turn clockwise
    {-1, 0, 0, 1},  // 3: mirror across the y axis
    {-1, 0, 0, -1}, // 4: half turn
    {0, -1, -1, 0}, // 5: mirror across y = -x
    {0, -1, 1, 0},  // 6: quarter turn counter-clockwise
    {1, 0, 0, -1},  // 7: mirror across the x axis
}};

constexpr std::array<GridPoint, 8> kChainRays{{
    {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1},
}};

int direction_of(GridPoint from, GridPoint to) {
    const GridPoint delta = to - from;
    for (int d = 0; d < 8; ++d) {
        if (kChainRays[d] == delta) return d;
    }
    throw DataError("points are not 8-connected");
}

} // namespace

OctantTransform OctantTransform::for_sector(int sector) {
    if (sector < 0 || sector > 7) throw DataError("sector out of range");
    const auto& m = kSectorMatrices[static_cast<std::size_t>(sector)];
    return OctantTransform(sector, m[0], m[1], m[2], m[3]);
}

GridPoint OctantTransform::apply(GridPoint p) const {
    return {xx_ * p.x + xy_ * p.y, yx_ * p.x + yy_ * p.y};
}

GridPoint OctantTransform::invert(GridPoint p) const {
    // transpose of an orthogonal matrix
    return {xx_ * p.x + yx_ * p.y, xy_ * p.x + yy_ * p.y};
}

std::pair<std::vector<GridPoint>, OctantTransform>
octant_normalize(std::span<const GridPoint> points) {
    if (points.empty()) throw DataError("cannot normalize an empty point sequence");

    std::array<std::int64_t, 8> counts{};
    for (std::size_t i = 1; i < points.size(); ++i) {
        counts[static_cast<std::size_t>(direction_of(points[i - 1], points[i]))]++;
    }

    int majority = 0;
    for (int d = 1; d < 8; ++d) {
        if (counts[static_cast<std::size_t>(d)] > counts[static_cast<std::size_t>(majority)]) {
            majority = d;
        }
    }
    // The majority ray borders two sectors; the stronger neighbor decides.
    const int next = (majority + 1) % 8;
    const int prev = (majority + 7) % 8;
    const int sector = counts[static_cast<std::size_t>(next)] >= counts[static_cast<std::size_t>(prev)]
                           ? majority
                           : prev;

    const OctantTransform transform = OctantTransform::for_sector(sector);
    std::vector<GridPoint> normalized;
    normalized.reserve(points.size());
    for (const GridPoint& p : points) normalized.push_back(transform.apply(p));
    return {std::move(normalized), transform};
}

} // namespace dss
