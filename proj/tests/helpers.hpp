#pragma once

#include <numeric>
#include <random>
#include <vector>

#include "dss/chaincode.hpp"
#include "dss/geometry.hpp"
#include "dss/rational.hpp"

namespace dsstest {

inline std::vector<dss::GridPoint> random_walk(std::mt19937& rng, std::size_t steps,
                                               dss::GridPoint start = {0, 0}) {
    std::uniform_int_distribution<int> dir(0, 7);
    std::vector<dss::GridPoint> points{start};
    points.reserve(steps + 1);
    for (std::size_t i = 0; i < steps; ++i) {
        points.push_back(points.back() + dss::kChainMoves[static_cast<std::size_t>(dir(rng))]);
    }
    return points;
}

// All reduced fractions r/s with 0 <= r/s <= 1 and s <= max_den.
inline std::vector<dss::Rational> reduced_slopes_up_to(std::int64_t max_den) {
    std::vector<dss::Rational> slopes{dss::Rational(0), dss::Rational(1)};
    for (std::int64_t s = 2; s <= max_den; ++s) {
        for (std::int64_t r = 1; r < s; ++r) {
            if (std::gcd(r, s) == 1) slopes.emplace_back(r, s);
        }
    }
    return slopes;
}

inline dss::Rational random_slope(std::mt19937& rng, std::int64_t max_den) {
    std::uniform_int_distribution<std::int64_t> den(1, max_den);
    const std::int64_t s = den(rng);
    std::uniform_int_distribution<std::int64_t> num(0, s);
    return dss::Rational(num(rng), s);
}

} // namespace dsstest
