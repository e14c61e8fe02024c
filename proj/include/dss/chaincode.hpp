#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dss/geometry.hpp"

namespace dss {

// Unit moves of the 8-direction chain scheme: 0 = +x, then counter-clockwise.
inline constexpr std::array<GridPoint, 8> kChainMoves{{
    {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1},
}};

// Freeman chain code: a start point plus one direction symbol per step.
struct ChainCode {
    GridPoint start;
    std::vector<std::uint8_t> symbols;
};

// Symbol of the unit move from one point to an 8-adjacent one.
std::uint8_t encode_step(GridPoint from, GridPoint to);

ChainCode encode(std::span<const GridPoint> points);
std::vector<GridPoint> decode(const ChainCode& chain);

enum class ChainViolation {
    none,
    third_symbol,       // a third distinct symbol appeared
    non_adjacent_pair,  // the two symbols do not differ by 1 mod 8
    single_symbol_run,  // the symbol required to occur singly repeated
};

// Incremental check of the two chain-code straightness rules: at most two
// symbols differing by unity modulo eight, one of which occurs singly.
// Which of the two is the singly-occurring one is not known up front; the
// first symbol seen twice in a row is designated the run symbol and the
// other one must occur singly from then on. A violation is absorbing until
// the state is replaced.
struct PropertyState {
    int seen[2] = {-1, -1};
    int run_symbol = -1;
    int last_symbol = -1;
    ChainViolation violation = ChainViolation::none;

    bool ok() const { return violation == ChainViolation::none; }
    std::optional<int> single_symbol() const {
        if (run_symbol < 0) return std::nullopt;
        if (seen[0] >= 0 && seen[0] != run_symbol) return seen[0];
        if (seen[1] >= 0 && seen[1] != run_symbol) return seen[1];
        return std::nullopt;
    }
};

PropertyState property_step(PropertyState state, unsigned symbol);

} // namespace dss
