#include <doctest.h>

#include <random>

#include "dss/benchmark.hpp"
#include "dss/chaincode.hpp"
#include "dss/error.hpp"
#include "dss/generate.hpp"
#include "dss/recognizer.hpp"
#include "helpers.hpp"

using namespace dss;

namespace {

// Two rounded segments of the given slopes joined end to end.
std::vector<GridPoint> two_segments(const Rational& m1, std::int64_t steps1, const Rational& m2,
                                    std::int64_t steps2) {
    Dss first = generate_optimal({0, 0}, SlopeValue::exact(m1), steps1);
    const Dss second = generate_optimal(first.points.back(), SlopeValue::exact(m2), steps2);
    first.points.insert(first.points.end(), second.points.begin() + 1, second.points.end());
    return first.points;
}

} // namespace

TEST_SUITE("recognizer") {

TEST_CASE("mu_relative") {
    CHECK(mu_relative({0, 0}, {7, 2}, false) == Rational(2, 7));
    CHECK(mu_relative({0, 0}, {2, 7}, true) == Rational(2, 7));
    CHECK_THROWS_AS(mu_relative({0, 0}, {0, 5}, false), DataError);
    CHECK(mu_relative({0, 0}, {0, 5}, true) == Rational(0));
    CHECK_THROWS_AS(mu_relative({0, 0}, {5, 0}, true), DataError);
}

TEST_CASE("the first step of a run is never a vertex") {
    SlopeEnvelope env{.anchor = {0, 0}, .i = 0, .inverted = false, .lower = {}, .upper = {}};
    const auto [updated, verdict] = envelope_update(env, {1, 1});
    CHECK(verdict == EnvelopeVerdict::inside);
    CHECK(updated.i == 1);
    CHECK(updated.upper - updated.lower == Rational(2));
}

TEST_CASE("envelope stays open across a whole rounded segment") {
    const Dss seg = generate_optimal({0, 0}, SlopeValue::exact(Rational(2, 7)), 14);
    SlopeEnvelope env{.anchor = seg.points.front(), .i = 0, .inverted = false,
                      .lower = {}, .upper = {}};
    for (std::size_t i = 1; i < seg.points.size(); ++i) {
        const auto [updated, verdict] = envelope_update(env, seg.points[i]);
        CHECK(verdict == EnvelopeVerdict::inside);
        env = updated;
    }
}

TEST_CASE("envelope rejects points that skip ahead") {
    SlopeEnvelope env{.anchor = {0, 0}, .i = 0, .inverted = false, .lower = {}, .upper = {}};
    CHECK_THROWS_AS(envelope_update(env, {3, 1}), DataError);
}

TEST_CASE("no false split on exact segments") {
    SUBCASE("every variant, exhaustive to denominator 9") {
        for (const Rational& m : dsstest::reduced_slopes_up_to(9)) {
            for (const BasicSet& bs : basic_sets(m)) {
                const Dss seg = generate_from_basic_set(bs, 2);
                CHECK(segment(seg.points).vertices.empty());
            }
        }
    }
    SUBCASE("random rounded segments up to denominator 50") {
        std::mt19937 rng(41);
        for (int iter = 0; iter < 60; ++iter) {
            const Rational m = dsstest::random_slope(rng, 50);
            const Dss seg = generate_optimal({0, 0}, SlopeValue::exact(m), 4 * m.den());
            CHECK(segment(seg.points).vertices.empty());
        }
    }
}

TEST_CASE("close slopes are separated by the envelope") {
    const auto points = two_segments(Rational(1, 5), 30, Rational(1, 3), 30);
    const SegmentationResult result = segment(points);
    REQUIRE(!result.vertices.empty());
    CHECK(result.vertices[0].cause == VertexCause::slope_envelope);

    const GridPoint true_vertex = points[30];
    const double score = effectiveness(true_vertex, result.vertices[0].point, 30);
    CHECK(score <= 0.2);
}

TEST_CASE("a flat run followed by a diagonal breaks the single-symbol rule") {
    const auto points = two_segments(Rational(0), 10, Rational(1), 10);
    const SegmentationResult result = segment(points);
    REQUIRE(!result.vertices.empty());
    CHECK(result.vertices[0].cause == VertexCause::chain_property_2);
    CHECK(d8(result.vertices[0].point, points[10]) <= 1);
}

TEST_CASE("perpendicular runs break the adjacency rule") {
    std::vector<GridPoint> points;
    for (std::int64_t y = 0; y <= 6; ++y) points.push_back({0, y});
    for (std::int64_t x = 1; x <= 6; ++x) points.push_back({x, 6});
    const SegmentationResult result = segment(points);
    REQUIRE(!result.vertices.empty());
    CHECK(result.vertices[0].cause == VertexCause::chain_property_1);
    CHECK(result.vertices[0].point == GridPoint{0, 6});
}

TEST_CASE("steep segments are recognized through the reciprocal mode") {
    const Dss seg = generate_optimal({0, 0}, SlopeValue::exact(Rational(2, 7)), 14);
    std::vector<GridPoint> swapped;
    for (const GridPoint& p : seg.points) swapped.push_back({p.y, p.x});
    CHECK(segment(swapped).vertices.empty());
}

TEST_CASE("segments partition the input with shared endpoints") {
    const auto points = two_segments(Rational(0), 10, Rational(1), 10);
    const SegmentationResult result = segment(points);
    REQUIRE(result.segments.size() == result.vertices.size() + 1);
    CHECK(result.segments.front().first == 0);
    CHECK(result.segments.back().last == points.size() - 1);
    for (std::size_t i = 0; i + 1 < result.segments.size(); ++i) {
        CHECK(result.segments[i].last == result.segments[i + 1].first);
        CHECK(result.segments[i].last == result.vertices[i].index);
        CHECK(result.segments[i].first < result.segments[i].last);
    }
}

TEST_CASE("the window straddles the true slope inside one segment") {
    std::mt19937 rng(47);
    for (int iter = 0; iter < 40; ++iter) {
        const Rational m = dsstest::random_slope(rng, 30);
        const Dss seg = generate_optimal({0, 0}, SlopeValue::exact(m), 3 * m.den());
        std::vector<TraceRow> trace;
        segment(seg.points, &trace);
        for (const TraceRow& row : trace) {
            CHECK(row.lower < m);
            CHECK(row.upper > m);
        }
    }
}

TEST_CASE("the envelope window only tightens within a run") {
    const auto points = two_segments(Rational(1, 5), 25, Rational(2, 5), 25);
    std::vector<TraceRow> trace;
    segment(points, &trace);
    REQUIRE(!trace.empty());
    for (std::size_t i = 1; i < trace.size(); ++i) {
        if (trace[i].i <= trace[i - 1].i) continue; // new run
        CHECK(trace[i].lower >= trace[i - 1].lower);
        CHECK(trace[i].upper <= trace[i - 1].upper);
    }
}

TEST_CASE("segmentation is deterministic") {
    std::mt19937 rng(43);
    const auto walk = dsstest::random_walk(rng, 120);
    const SegmentationResult a = segment(walk);
    const SegmentationResult b = segment(walk);
    REQUIRE(a.vertices.size() == b.vertices.size());
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        CHECK(a.vertices[i].index == b.vertices[i].index);
        CHECK(a.vertices[i].cause == b.vertices[i].cause);
    }
}

TEST_CASE("arbitrary closed boundaries segment without error") {
    // decoded from the sample boundary chain used in the chaincode tests
    ChainCode chain{.start = {0, 0}, .symbols = {}};
    for (const char ch : std::string("44232232223443222110010077077566566566566")) {
        chain.symbols.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    const std::vector<GridPoint> points = decode(chain);
    const SegmentationResult result = segment(points);
    CHECK(!result.vertices.empty());
    for (const FoundVertex& v : result.vertices) {
        CHECK(v.index > 0);
        CHECK(v.index < points.size() - 1);
    }
}

TEST_CASE("too few points") {
    CHECK_THROWS_AS(segment(std::vector<GridPoint>{{0, 0}}), DataError);
}

} // TEST_SUITE
