#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dss/rational.hpp"

namespace dss {

// Integer lattice coordinate pair.
struct GridPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

inline GridPoint operator+(GridPoint a, GridPoint b) { return {a.x + b.x, a.y + b.y}; }
inline GridPoint operator-(GridPoint a, GridPoint b) { return {a.x - b.x, a.y - b.y}; }

// Chessboard distance: max of the absolute coordinate differences.
std::int64_t d8(GridPoint p, GridPoint q);

// Exact reduced slope (q.y - p.y) / (q.x - p.x). Throws DataError on a
// vertical pair; callers handle those by swapping coordinates first.
Rational slope_between(GridPoint p, GridPoint q);

// A slope that is either an exact fraction or a real approximation.
// Vertical directions are never represented here; they are handled by
// swapping coordinates before a slope is formed.
class SlopeValue {
public:
    static SlopeValue exact(Rational value) { return SlopeValue(value, 0.0L, true); }
    static SlopeValue approx(long double value) { return SlopeValue(Rational(), value, false); }

    bool is_exact() const { return exact_; }
    const Rational& exact_value() const;
    long double approx_value() const;
    long double as_real() const { return exact_ ? rational_.to_long_double() : real_; }

    std::string str() const;

private:
    SlopeValue(Rational r, long double v, bool exact) : rational_(r), real_(v), exact_(exact) {}

    Rational rational_;
    long double real_ = 0.0L;
    bool exact_ = false;
};

// Slopes from a fixed anchor point to each successor, keyed by the
// chessboard distance between them (1, 2, 3, ...).
struct MuSeries {
    GridPoint anchor;
    std::vector<std::pair<std::int64_t, Rational>> values;
};

// Slope from `anchor_index` to each later point of an 8-connected sequence
// whose x coordinates increase strictly to the right of the anchor.
MuSeries mu_series(std::span<const GridPoint> points, std::size_t anchor_index);

// One of the eight lattice symmetries (axis swaps and negations). These are
// orthogonal integer matrices, so the inverse is the transpose.
class OctantTransform {
public:
    static OctantTransform for_sector(int sector);
    static OctantTransform identity() { return for_sector(0); }

    int sector() const { return sector_; }
    bool is_identity() const { return sector_ == 0; }

    GridPoint apply(GridPoint p) const;
    GridPoint invert(GridPoint p) const;

private:
    OctantTransform(int sector, std::int64_t xx, std::int64_t xy, std::int64_t yx, std::int64_t yy)
        : sector_(sector), xx_(xx), xy_(xy), yx_(yx), yy_(yy) {}

    int sector_;
    std::int64_t xx_, xy_, yx_, yy_; // row-major 2x2 matrix
};

// Maps an 8-connected sequence into the first octant (dominant direction
// with slope in [0, 1] and x non-decreasing), chosen by the majority chain
// direction of the whole input. The returned transform inverts the mapping
// exactly; applying invert() to every output point restores the input.
std::pair<std::vector<GridPoint>, OctantTransform>
octant_normalize(std::span<const GridPoint> points);

} // namespace dss
