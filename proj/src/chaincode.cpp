#include "dss/chaincode.hpp"

#include "dss/error.hpp"

namespace dss {

std::uint8_t encode_step(GridPoint from, GridPoint to) {
    const GridPoint delta = to - from;
    for (std::uint8_t d = 0; d < 8; ++d) {
        if (kChainMoves[d] == delta) return d;
    }
    throw DataError("consecutive points are not 8-adjacent");
}

ChainCode encode(std::span<const GridPoint> points) {
    if (points.empty()) throw DataError("cannot encode an empty point sequence");
    ChainCode chain{.start = points.front(), .symbols = {}};
    chain.symbols.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        chain.symbols.push_back(encode_step(points[i - 1], points[i]));
    }
    return chain;
}

std::vector<GridPoint> decode(const ChainCode& chain) {
    std::vector<GridPoint> points;
    points.reserve(chain.symbols.size() + 1);
    points.push_back(chain.start);
    for (const std::uint8_t sym : chain.symbols) {
        if (sym > 7) throw DataError("chain symbol out of range");
        points.push_back(points.back() + kChainMoves[sym]);
    }
    return points;
}

namespace {

bool adjacent_mod8(int a, int b) {
    const int d = (a - b + 8) % 8;
    return d == 1 || d == 7;
}

} // namespace

PropertyState property_step(PropertyState state, unsigned symbol) {
    if (!state.ok()) return state;
    if (symbol > 7) throw DataError("chain symbol out of range");
    const int s = static_cast<int>(symbol);

    if (s == state.last_symbol) {
        if (state.run_symbol < 0) {
            state.run_symbol = s;
        } else if (state.run_symbol != s) {
            state.violation = ChainViolation::single_symbol_run;
            return state;
        }
    }

    if (s != state.seen[0] && s != state.seen[1]) {
        if (state.seen[0] < 0) {
            state.seen[0] = s;
        } else if (state.seen[1] < 0) {
            if (!adjacent_mod8(state.seen[0], s)) {
                state.violation = ChainViolation::non_adjacent_pair;
                return state;
            }
            state.seen[1] = s;
        } else {
            state.violation = ChainViolation::third_symbol;
            return state;
        }
    }

    state.last_symbol = s;
    return state;
}

} // namespace dss
