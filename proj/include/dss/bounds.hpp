#pragma once

#include <cstdint>

#include "dss/generate.hpp"
#include "dss/geometry.hpp"
#include "dss/rational.hpp"

namespace dss {

// Two parallel real lines y = m*x + c + a and y = m*x + c - b that sandwich
// every point of a segment. `tight` is false when the segment was shorter
// than one period, in which case a and b are valid but not extremal.
struct BoundaryLines {
    Rational m;
    Rational c;
    Rational a;
    Rational b;
    bool tight = true;
};

// Exact lower/upper bounds on the slope from an anchor to any segment point
// at chessboard distance i.
struct SlopeBoundsAt {
    Rational lower;
    Rational upper;
    std::int64_t i = 0;
};

// Gap between slopes that aim at vertically adjacent lattice targets at
// horizontal distance n: exactly 1/n.
Rational adjacent_slope_gap(std::int64_t n);

// Deviation cap for rounded rasterizations: the slope from the segment
// start to the point at distance n differs from the true slope by at most
// 1/(2n).
Rational optimal_bound(std::int64_t n);

// Deviation cap valid for any segment variant, not just the rounded one:
// at most 1/n at distance n.
Rational general_bound(std::int64_t n);

// Fits the boundary lines of a segment with an exact slope. The reference
// line passes through the first point (its offset is zero there), and a, b
// are the maximal offsets above and below, so results are reproducible.
BoundaryLines fit_boundary_lines(const Dss& seg);

// Slope bounds seen from an anchor on the segment at distance i, derived
// from the boundary lines and the anchor's own offset.
SlopeBoundsAt slope_bounds_at(const BoundaryLines& lines, GridPoint anchor, std::int64_t i);

// Width of the slope bound window at distance i: (a + b)/i, at most 1/i.
Rational bounds_width(const BoundaryLines& lines, std::int64_t i);

} // namespace dss
