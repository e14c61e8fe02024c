#include <doctest.h>

#include <sstream>

#include "dss/benchmark.hpp"
#include "dss/error.hpp"
#include "dss/generate.hpp"
#include "helpers.hpp"

using namespace dss;

TEST_SUITE("benchmark") {

TEST_CASE("effectiveness") {
    CHECK(effectiveness({5, 5}, GridPoint{5, 5}, 20) == 0.0);
    CHECK(effectiveness({0, 0}, GridPoint{20, 0}, 20) == 1.0);
    CHECK(effectiveness({0, 0}, GridPoint{5, 2}, 20) == 0.25);
    CHECK(effectiveness({0, 0}, std::nullopt, 20) == 1.0);
    CHECK(effectiveness({0, 0}, GridPoint{50, 0}, 20) == 1.0); // clamped
    // symmetric and scale-covariant
    CHECK(effectiveness({0, 0}, GridPoint{5, 2}, 20) == effectiveness({5, 2}, GridPoint{0, 0}, 20));
    CHECK(effectiveness({0, 0}, GridPoint{10, 4}, 40) == effectiveness({0, 0}, GridPoint{5, 2}, 20));
    CHECK_THROWS_AS(effectiveness({0, 0}, std::nullopt, 0), DataError);
}

TEST_CASE("bank enumeration") {
    const auto specs = build_bank();
    CHECK(specs.size() == 811800);
    CHECK(specs.front() == BenchmarkCaseSpec{0, 1, 21});
    CHECK(specs.back() == BenchmarkCaseSpec{43, 45, 430});
    // slope-major, then delta, then length
    CHECK(specs[409] == BenchmarkCaseSpec{0, 1, 430});
    CHECK(specs[410] == BenchmarkCaseSpec{0, 2, 21});
    CHECK(specs[45 * 410] == BenchmarkCaseSpec{1, 1, 21});
}

TEST_CASE("case construction") {
    SUBCASE("flat start, 45 degrees: the second half is the diagonal") {
        const BenchmarkCase c = make_case({0, 45, 43});
        REQUIRE(c.points.size() == 87);
        CHECK(c.true_vertex_index == 43);
        const GridPoint vertex = c.points[43];
        CHECK(vertex == GridPoint{43, 0});
        for (std::int64_t j = 1; j <= 43; ++j) {
            CHECK(c.points[static_cast<std::size_t>(43 + j)] == vertex + GridPoint{j, j});
        }
    }
    SUBCASE("diagonal start, 45 degrees: the second half is vertical") {
        const BenchmarkCase c = make_case({43, 45, 21});
        const GridPoint vertex = c.points[21];
        CHECK(vertex == GridPoint{21, 21});
        for (std::int64_t j = 1; j <= 21; ++j) {
            CHECK(c.points[static_cast<std::size_t>(21 + j)] == vertex + GridPoint{0, j});
        }
    }
    SUBCASE("both halves have the advertised chessboard length") {
        for (const BenchmarkCaseSpec spec :
             {BenchmarkCaseSpec{7, 13, 30}, BenchmarkCaseSpec{1, 45, 30},
              BenchmarkCaseSpec{43, 10, 25}, BenchmarkCaseSpec{20, 44, 60}}) {
            const BenchmarkCase c = make_case(spec);
            REQUIRE(c.points.size() == 2u * static_cast<std::size_t>(spec.length) + 1u);
            const GridPoint vertex = c.points[c.true_vertex_index];
            CHECK(d8(c.points.front(), vertex) == spec.length);
            CHECK(d8(vertex, c.points.back()) == spec.length);
            for (std::size_t i = 1; i < c.points.size(); ++i) {
                CHECK(d8(c.points[i - 1], c.points[i]) == 1);
            }
        }
    }
    SUBCASE("a 45-degree delta with a steep result uses exact arithmetic") {
        // first slope 1/43: the second direction has rational slope 22/21,
        // whose reciprocal rasterization crosses exact rounding ties
        const BenchmarkCase c = make_case({1, 45, 30});
        const GridPoint vertex = c.points[30];
        for (std::int64_t j = 1; j <= 30; ++j) {
            const GridPoint p = c.points[static_cast<std::size_t>(30 + j)];
            CHECK(p.y - vertex.y == j);
            CHECK(p.x - vertex.x == (2 * 21 * j + 22) / 44);
        }
    }
}

TEST_CASE("oracle fixtures") {
    SUBCASE("rounded segments and their variants are accepted") {
        for (const Rational& m : dsstest::reduced_slopes_up_to(9)) {
            for (const BasicSet& bs : basic_sets(m)) {
                const Dss seg = generate_from_basic_set(bs, 3);
                CHECK(oracle_is_dss(seg.points));
            }
        }
    }
    SUBCASE("a jump of two rows is rejected") {
        CHECK_FALSE(oracle_is_dss(std::vector<GridPoint>{{0, 0}, {1, 0}, {2, 2}}));
    }
    SUBCASE("a known slope-1/2 family member is accepted") {
        CHECK(oracle_is_dss(std::vector<GridPoint>{{0, 0}, {1, 1}, {2, 1}, {3, 2}, {4, 2}}));
    }
    SUBCASE("non-unit x steps are rejected as input") {
        CHECK_THROWS_AS(oracle_is_dss(std::vector<GridPoint>{{0, 0}, {2, 0}}), DataError);
        CHECK_THROWS_AS(oracle_is_dss(std::vector<GridPoint>{}), DataError);
    }
    SUBCASE("single point is trivially straight") {
        CHECK(oracle_is_dss(std::vector<GridPoint>{{4, 4}}));
    }
}

TEST_CASE("generated case halves pass the oracle") {
    for (const BenchmarkCaseSpec spec :
         {BenchmarkCaseSpec{0, 45, 43}, BenchmarkCaseSpec{1, 45, 25},
          BenchmarkCaseSpec{7, 13, 30}, BenchmarkCaseSpec{43, 10, 25},
          BenchmarkCaseSpec{43, 45, 21}, BenchmarkCaseSpec{30, 44, 50}}) {
        const BenchmarkCase c = make_case(spec);
        const std::vector<GridPoint> first(c.points.begin(),
                                           c.points.begin() + static_cast<std::ptrdiff_t>(c.true_vertex_index) + 1);
        CHECK(oracle_is_dss(first));
        const std::vector<GridPoint> second(c.points.begin() + static_cast<std::ptrdiff_t>(c.true_vertex_index),
                                            c.points.end());
        const auto [normalized, transform] = octant_normalize(second);
        CHECK(oracle_is_dss(normalized));
    }
}

TEST_CASE("run_bank on a small slice") {
    auto specs = build_bank();
    std::vector<BenchmarkCaseSpec> slice;
    for (const BenchmarkCaseSpec& spec : specs) {
        if ((spec.delta_deg == 1 || spec.delta_deg == 45) && spec.length <= 25) {
            slice.push_back(spec);
        }
    }
    REQUIRE(slice.size() == 44u * 2u * 5u);

    const BankReport serial = run_bank(slice, {.jobs = 1});
    REQUIRE(serial.records.size() == slice.size());
    for (const EffectivenessRecord& r : serial.records) {
        CHECK(r.effectiveness >= 0.0);
        CHECK(r.effectiveness <= 1.0);
    }

    SUBCASE("parallel run is identical") {
        const BankReport parallel = run_bank(slice, {.jobs = 3});
        REQUIRE(parallel.records.size() == serial.records.size());
        for (std::size_t i = 0; i < serial.records.size(); ++i) {
            CHECK(parallel.records[i].effectiveness == serial.records[i].effectiveness);
            CHECK(parallel.records[i].found_index == serial.records[i].found_index);
            CHECK(parallel.records[i].cause == serial.records[i].cause);
        }
        std::ostringstream a, b;
        write_summary_csv(a, serial.summary);
        write_summary_csv(b, parallel.summary);
        CHECK(a.str() == b.str());
    }

    SUBCASE("summary covers the present deltas with an all-bucket row") {
        int all_rows = 0;
        for (const SummaryRow& row : serial.summary) {
            CHECK((row.delta_deg == 1 || row.delta_deg == 45));
            if (row.bucket == "all") {
                ++all_rows;
                CHECK(row.cases == 44 * 5);
                CHECK(row.chain_property_1 + row.chain_property_2 + row.slope_envelope +
                          row.none ==
                      row.cases);
            }
        }
        CHECK(all_rows == 2);
    }
}

TEST_CASE("csv formats") {
    EffectivenessRecord r;
    r.case_id = 3;
    r.spec = {1, 2, 21};
    r.found_index = 20;
    r.effectiveness = 0.125;
    r.cause = VertexCause::slope_envelope;
    std::ostringstream out;
    write_records_csv(out, std::vector<EffectivenessRecord>{r});
    CHECK(out.str() ==
          "case_id,slope_index,delta_deg,length,found_index,effectiveness,cause\n"
          "3,1,2,21,20,0.125000,slope-envelope\n");

    EffectivenessRecord miss;
    miss.case_id = 4;
    miss.spec = {0, 1, 21};
    std::ostringstream out2;
    write_records_csv(out2, std::vector<EffectivenessRecord>{miss});
    CHECK(out2.str() ==
          "case_id,slope_index,delta_deg,length,found_index,effectiveness,cause\n"
          "4,0,1,21,,1.000000,none\n");
}

} // TEST_SUITE
