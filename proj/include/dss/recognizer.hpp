#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dss/geometry.hpp"
#include "dss/rational.hpp"

namespace dss {

// Running slope window measured from the last vertex. After each point at
// chessboard distance i from the anchor, `lower` is the largest mu(i) - 1/i
// seen so far and `upper` the smallest mu(i) + 1/i, so lower never
// decreases and upper never increases within a run. Inside one straight
// segment the window always keeps width strictly above 1/i; reaching 1/i
// or less is proof the run has left the segment.
struct SlopeEnvelope {
    GridPoint anchor;
    std::int64_t i = 0;
    bool inverted = false; // measure reciprocal slopes for steep runs
    Rational lower;
    Rational upper;
};

enum class EnvelopeVerdict { inside, vertex };

// Slope from the anchor, or its reciprocal in inverted mode. Throws
// DataError when the denominator coordinate difference is zero; vertical
// pairs require inverted mode, horizontal pairs direct mode.
Rational mu_relative(GridPoint anchor, GridPoint p, bool inverted);

// Folds the next point into the envelope and decides whether the window
// still admits a common slope. The comparison is exact; a window of width
// 1/i or less is a vertex.
std::pair<SlopeEnvelope, EnvelopeVerdict> envelope_update(const SlopeEnvelope& env,
                                                          GridPoint next_point);

enum class VertexCause {
    chain_property_1, // third symbol or non-adjacent symbol pair
    chain_property_2, // the singly-occurring symbol repeated
    slope_envelope,   // slope window collapsed below 1/i
};

std::string to_string(VertexCause cause);

struct FoundVertex {
    std::size_t index = 0;
    GridPoint point;
    VertexCause cause = VertexCause::slope_envelope;
};

// Inclusive index range; consecutive segments share their vertex endpoint.
struct SegmentRange {
    std::size_t first = 0;
    std::size_t last = 0;
};

struct SegmentationResult {
    std::vector<FoundVertex> vertices;
    std::vector<SegmentRange> segments;
};

// One row per envelope update; i restarts at 1 after every vertex.
struct TraceRow {
    std::size_t point_index = 0;
    std::int64_t i = 0;
    Rational mu;
    Rational lower;
    Rational upper;
};

// Splits an 8-connected point sequence into straight runs. Each point first
// passes the two chain-code rules for the current run; a failure marks the
// previous point as a vertex. Points that survive the chain rules feed the
// slope envelope, measured from the last vertex and inverted once per run
// if the direction leaves [-1, 1]; a collapsed envelope likewise marks the
// previous point. After a vertex both checks restart anchored there.
SegmentationResult segment(std::span<const GridPoint> points,
                           std::vector<TraceRow>* trace = nullptr);

} // namespace dss
