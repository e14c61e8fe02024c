#pragma once

#include <cstdint>
#include <vector>

#include "dss/geometry.hpp"
#include "dss/rational.hpp"

namespace dss {

// One period of a rational-slope segment: s+1 points whose endpoints differ
// by exactly (s, r) for slope r/s.
struct BasicSet {
    Rational slope;
    std::vector<GridPoint> points;

    friend bool operator==(const BasicSet&, const BasicSet&) = default;
};

// A first-octant digital straight segment: 8-connected points with strictly
// increasing x. For an exact slope r/s the points repeat with the
// translation (s, r).
struct Dss {
    std::vector<GridPoint> points;
    SlopeValue slope;
    GridPoint origin;
};

// Rounded rasterization of the line through `origin` with slope m in [0, 1]:
// each step advances x by one and picks the nearest row, halves rounding up.
// Exact slopes use pure integer arithmetic. Approximate slopes evaluate in
// extended precision and throw PrecisionError when a value lands within
// 2^-40 of a cell boundary instead of guessing the row.
Dss generate_optimal(GridPoint origin, const SlopeValue& m, std::int64_t steps);

// Length of the repeating period: the denominator of the reduced slope.
std::int64_t period_length(const Rational& m);

// All distinct single-period windows of the two-period rounded segment of
// slope m, each translated to start at the origin, in path order.
std::vector<BasicSet> basic_sets(const Rational& m);

// Tiles a basic set by its period translation for the requested number of
// periods; the result has periods * s + 1 points.
Dss generate_from_basic_set(const BasicSet& bs, std::int64_t periods);

} // namespace dss
