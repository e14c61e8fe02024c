#include "dss/recognizer.hpp"

#include <cstdlib>
#include <tuple>

#include "dss/chaincode.hpp"
#include "dss/error.hpp"

namespace dss {

Rational mu_relative(GridPoint anchor, GridPoint p, bool inverted) {
    const std::int64_t dx = p.x - anchor.x;
    const std::int64_t dy = p.y - anchor.y;
    if (!inverted) {
        if (dx == 0) throw DataError("vertical pair needs the inverted slope mode");
        return Rational(dy, dx);
    }
    if (dy == 0) throw DataError("horizontal pair needs the direct slope mode");
    return Rational(dx, dy);
}

std::pair<SlopeEnvelope, EnvelopeVerdict> envelope_update(const SlopeEnvelope& env,
                                                          GridPoint next_point) {
    SlopeEnvelope out = env;
    out.i = env.i + 1;
    if (d8(env.anchor, next_point) != out.i) {
        throw DataError("point does not extend the current run");
    }

    const Rational mu = mu_relative(env.anchor, next_point, env.inverted);
    const Rational gap(1, out.i);
    const Rational lo = mu - gap;
    const Rational hi = mu + gap;
    if (env.i == 0) {
        out.lower = lo;
        out.upper = hi;
    } else {
        if (lo > out.lower) out.lower = lo;
        if (hi < out.upper) out.upper = hi;
    }

    // Inside an exact segment the window stays strictly wider than 1/i
    // (the residual band of a rounded line is half-open, so its width is
    // strictly below one row). Width exactly 1/i therefore already proves
    // the run is not one segment, and equality triggers the vertex.
    const bool collapsed = out.upper - out.lower <= gap;
    return {out, collapsed ? EnvelopeVerdict::vertex : EnvelopeVerdict::inside};
}

std::string to_string(VertexCause cause) {
    switch (cause) {
        case VertexCause::chain_property_1: return "chain-property-1";
        case VertexCause::chain_property_2: return "chain-property-2";
        case VertexCause::slope_envelope: return "slope-envelope";
    }
    return "unknown";
}

namespace {

VertexCause cause_of(ChainViolation violation) {
    return violation == ChainViolation::single_symbol_run ? VertexCause::chain_property_2
                                                          : VertexCause::chain_property_1;
}

bool steeper_than_diagonal(GridPoint anchor, GridPoint p) {
    return std::llabs(p.y - anchor.y) > std::llabs(p.x - anchor.x);
}

bool shallower_than_diagonal(GridPoint anchor, GridPoint p) {
    return std::llabs(p.x - anchor.x) > std::llabs(p.y - anchor.y);
}

} // namespace

SegmentationResult segment(std::span<const GridPoint> points, std::vector<TraceRow>* trace) {
    if (points.size() < 2) throw DataError("segmentation needs at least two points");

    SegmentationResult result;
    PropertyState prop;
    SlopeEnvelope env{.anchor = points.front(), .i = 0, .inverted = false, .lower = {}, .upper = {}};

    const auto reset_at = [&](std::size_t vertex_index, VertexCause cause) {
        result.vertices.push_back({vertex_index, points[vertex_index], cause});
        prop = PropertyState{};
        env = SlopeEnvelope{.anchor = points[vertex_index], .i = 0, .inverted = false, .lower = {}, .upper = {}};
    };

    for (std::size_t idx = 1; idx < points.size(); ++idx) {
        const GridPoint current = points[idx];
        const std::uint8_t sym = encode_step(points[idx - 1], current);

        prop = property_step(prop, sym);
        if (!prop.ok()) {
            const VertexCause cause = cause_of(prop.violation);
            reset_at(idx - 1, cause);
            prop = property_step(PropertyState{}, sym);
        }

        // The reciprocal mode is decided once per run, at the first point
        // whose direction leaves [-1, 1]. Anything seen before that moment
        // was exactly diagonal, so the already-folded slopes are their own
        // reciprocals. Falling back below the diagonal afterwards is a
        // direction change, not one segment.
        if (!env.inverted) {
            if (steeper_than_diagonal(env.anchor, current)) env.inverted = true;
        } else if (shallower_than_diagonal(env.anchor, current)) {
            reset_at(idx - 1, VertexCause::slope_envelope);
            prop = property_step(PropertyState{}, sym);
            if (steeper_than_diagonal(env.anchor, current)) env.inverted = true;
        }

        auto [next_env, verdict] = envelope_update(env, current);
        if (verdict == EnvelopeVerdict::vertex) {
            reset_at(idx - 1, VertexCause::slope_envelope);
            prop = property_step(PropertyState{}, sym);
            if (steeper_than_diagonal(env.anchor, current)) env.inverted = true;
            std::tie(next_env, verdict) = envelope_update(env, current);
        }
        env = next_env;

        if (trace) {
            trace->push_back({idx, env.i, mu_relative(env.anchor, current, env.inverted),
                              env.lower, env.upper});
        }
    }

    std::size_t begin = 0;
    for (const FoundVertex& v : result.vertices) {
        result.segments.push_back({begin, v.index});
        begin = v.index;
    }
    result.segments.push_back({begin, points.size() - 1});
    return result;
}

} // namespace dss
