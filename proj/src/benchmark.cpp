#include "dss/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <ostream>
#include <thread>

#include "dss/error.hpp"
#include "dss/generate.hpp"

namespace dss {

std::vector<BenchmarkCaseSpec> build_bank() {
    std::vector<BenchmarkCaseSpec> specs;
    specs.reserve(44u * 45u * 410u);
    for (int k = 0; k <= kBankSlopeDenominator; ++k) {
        for (int delta = 1; delta <= 45; ++delta) {
            for (int length = kBankMinLength; length <= kBankMaxLength; ++length) {
                specs.push_back({k, delta, length});
            }
        }
    }
    return specs;
}

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

void append_normal(std::vector<GridPoint>& points, GridPoint vertex, const SlopeValue& slope,
                   int length) {
    const Dss seg = generate_optimal(vertex, slope, length);
    points.insert(points.end(), seg.points.begin() + 1, seg.points.end());
}

void append_swapped(std::vector<GridPoint>& points, GridPoint vertex, const SlopeValue& slope,
                    int length) {
    const Dss seg = generate_optimal({0, 0}, slope, length);
    for (std::size_t j = 1; j < seg.points.size(); ++j) {
        points.push_back(vertex + GridPoint{seg.points[j].y, seg.points[j].x});
    }
}

void append_second_segment(std::vector<GridPoint>& points, GridPoint vertex, const Rational& m1,
                           int delta, int length) {
    if (delta == 45) {
        // tan(A + 45deg) = (m1 + 1) / (1 - m1): the one delta whose tangent
        // is rational, so the rounding ties it produces must be decided in
        // integer arithmetic rather than through a float tangent.
        if (m1 == Rational(1)) {
            for (int j = 1; j <= length; ++j) points.push_back(vertex + GridPoint{0, j});
            return;
        }
        const Rational m2 = (Rational(1) + m1) / (Rational(1) - m1);
        if (m2 <= Rational(1)) {
            append_normal(points, vertex, SlopeValue::exact(m2), length);
        } else {
            append_swapped(points, vertex, SlopeValue::exact(m2.reciprocal()), length);
        }
        return;
    }

    const long double theta =
        std::atan(m1.to_long_double()) + static_cast<long double>(delta) * kPi / 180.0L;
    if (theta > kPi / 4.0L) {
        append_swapped(points, vertex, SlopeValue::approx(std::tan(kPi / 2.0L - theta)), length);
    } else {
        append_normal(points, vertex, SlopeValue::approx(std::tan(theta)), length);
    }
}

} // namespace

BenchmarkCase make_case(const BenchmarkCaseSpec& spec) {
    if (spec.slope_index < 0 || spec.slope_index > kBankSlopeDenominator ||
        spec.delta_deg < 1 || spec.delta_deg > 45 || spec.length < 1) {
        throw DataError("benchmark case parameters out of range");
    }

    BenchmarkCase c;
    c.spec = spec;
    c.m1 = Rational(spec.slope_index, kBankSlopeDenominator);

    Dss first = generate_optimal({0, 0}, SlopeValue::exact(c.m1), spec.length);
    c.points = std::move(first.points);
    c.true_vertex_index = static_cast<std::size_t>(spec.length);

    const GridPoint vertex = c.points.back();
    c.points.reserve(2u * static_cast<std::size_t>(spec.length) + 1u);
    append_second_segment(c.points, vertex, c.m1, spec.delta_deg, spec.length);
    return c;
}

double effectiveness(GridPoint true_vertex, const std::optional<GridPoint>& found_vertex,
                     std::int64_t length) {
    if (length < 1) throw DataError("segment length must be positive");
    if (!found_vertex) return 1.0;
    const std::int64_t dist = d8(true_vertex, *found_vertex);
    if (dist >= length) return 1.0;
    return static_cast<double>(dist) / static_cast<double>(length);
}

namespace {

EffectivenessRecord score_case(std::uint32_t case_id, const BenchmarkCaseSpec& spec) {
    const BenchmarkCase c = make_case(spec);
    const SegmentationResult result = segment(c.points);
    const GridPoint true_vertex = c.points[c.true_vertex_index];

    EffectivenessRecord record;
    record.case_id = case_id;
    record.spec = spec;
    if (!result.vertices.empty()) {
        const FoundVertex* best = &result.vertices.front();
        std::int64_t best_dist = d8(true_vertex, best->point);
        for (const FoundVertex& v : result.vertices) {
            const std::int64_t dist = d8(true_vertex, v.point);
            if (dist < best_dist) {
                best = &v;
                best_dist = dist;
            }
        }
        record.found_index = static_cast<std::uint32_t>(best->index);
        record.cause = best->cause;
        record.effectiveness = effectiveness(true_vertex, best->point, spec.length);
    }
    return record;
}

int bucket_index(int length) {
    if (length <= 21) return 0; // half period
    return std::min(10, (length + kBankSlopeDenominator - 1) / kBankSlopeDenominator);
}

const char* bucket_label(int index) {
    static const char* labels[] = {"0.5", "1", "2", "3", "4", "5", "6", "7", "8", "9", "10"};
    return labels[index];
}

struct Accumulator {
    std::int64_t cases = 0;
    double sum = 0.0;
    std::int64_t causes[4] = {0, 0, 0, 0}; // p1, p2, envelope, none

    void add(const EffectivenessRecord& r) {
        ++cases;
        sum += r.effectiveness;
        if (!r.cause) {
            ++causes[3];
        } else {
            ++causes[static_cast<int>(*r.cause)];
        }
    }

    SummaryRow row(int delta, const std::string& bucket) const {
        return SummaryRow{.delta_deg = delta,
                          .bucket = bucket,
                          .cases = cases,
                          .mean_effectiveness = cases > 0 ? sum / static_cast<double>(cases) : 0.0,
                          .chain_property_1 = causes[0],
                          .chain_property_2 = causes[1],
                          .slope_envelope = causes[2],
                          .none = causes[3]};
    }
};

std::vector<SummaryRow> summarize(std::span<const EffectivenessRecord> records) {
    // delta 1..45 x bucket 0..10, plus a whole-delta accumulator each
    std::vector<Accumulator> per_bucket(45u * 11u);
    std::vector<Accumulator> per_delta(45u);
    for (const EffectivenessRecord& r : records) {
        const int d = r.spec.delta_deg - 1;
        per_bucket[static_cast<std::size_t>(d * 11 + bucket_index(r.spec.length))].add(r);
        per_delta[static_cast<std::size_t>(d)].add(r);
    }

    std::vector<SummaryRow> rows;
    for (int d = 0; d < 45; ++d) {
        if (per_delta[static_cast<std::size_t>(d)].cases == 0) continue;
        for (int b = 0; b <= 10; ++b) {
            const Accumulator& acc = per_bucket[static_cast<std::size_t>(d * 11 + b)];
            if (acc.cases == 0) continue;
            rows.push_back(acc.row(d + 1, bucket_label(b)));
        }
        rows.push_back(per_delta[static_cast<std::size_t>(d)].row(d + 1, "all"));
    }
    return rows;
}

} // namespace

BankReport run_bank(std::span<const BenchmarkCaseSpec> specs, const RunBankOptions& opts) {
    BankReport report;
    report.records.resize(specs.size());

    const unsigned jobs = std::max(1u, opts.jobs);
    if (jobs == 1 || specs.size() < 2) {
        for (std::size_t i = 0; i < specs.size(); ++i) {
            report.records[i] = score_case(static_cast<std::uint32_t>(i), specs[i]);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::mutex error_mutex;
        std::exception_ptr error;
        constexpr std::size_t kChunk = 512;

        auto worker = [&] {
            for (;;) {
                const std::size_t begin = next.fetch_add(kChunk);
                if (begin >= specs.size()) return;
                const std::size_t end = std::min(begin + kChunk, specs.size());
                try {
                    for (std::size_t i = begin; i < end; ++i) {
                        report.records[i] = score_case(static_cast<std::uint32_t>(i), specs[i]);
                    }
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                    return;
                }
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    report.summary = summarize(report.records);
    return report;
}

bool oracle_is_dss(std::span<const GridPoint> points) {
    if (points.empty()) throw DataError("oracle needs at least one point");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i].x != points[i - 1].x + 1) {
            throw DataError("oracle input must be first-octant normalized, x stepping by one");
        }
    }
    if (points.size() == 1) return true;

    // Candidate slopes: the window width max(y - m*x) - min(y - m*x) is a
    // convex piecewise-linear function of m, so its minimum over [0, 1] is
    // attained at a slope between two input points or at an endpoint.
    std::vector<std::pair<std::int64_t, std::int64_t>> candidates{{0, 1}, {1, 1}};
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t k = j + 1; k < points.size(); ++k) {
            const std::int64_t dy = points[k].y - points[j].y;
            const std::int64_t dx = points[k].x - points[j].x;
            if (dy < 0 || dy > dx) continue;
            const std::int64_t g = std::gcd(dy, dx);
            candidates.emplace_back(dy / g, dx / g);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // A line with slope p/q fits iff the residuals q*y - p*x span less
    // than q, leaving room to center an intercept.
    for (const auto& [p, q] : candidates) {
        std::int64_t lo = q * points[0].y - p * points[0].x;
        std::int64_t hi = lo;
        for (const GridPoint& pt : points) {
            const std::int64_t v = q * pt.y - p * pt.x;
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (hi - lo < q) return true;
    }
    return false;
}

void write_records_csv(std::ostream& out, std::span<const EffectivenessRecord> records) {
    out << "case_id,slope_index,delta_deg,length,found_index,effectiveness,cause\n";
    char buf[32];
    for (const EffectivenessRecord& r : records) {
        out << r.case_id << ',' << r.spec.slope_index << ',' << r.spec.delta_deg << ','
            << r.spec.length << ',';
        if (r.found_index) out << *r.found_index;
        std::snprintf(buf, sizeof(buf), "%.6f", r.effectiveness);
        out << ',' << buf << ',' << (r.cause ? to_string(*r.cause) : "none") << '\n';
    }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> summary) {
    out << "delta_deg,bucket,cases,mean_effectiveness,"
           "chain_property_1,chain_property_2,slope_envelope,none\n";
    char buf[32];
    for (const SummaryRow& row : summary) {
        std::snprintf(buf, sizeof(buf), "%.6f", row.mean_effectiveness);
        out << row.delta_deg << ',' << row.bucket << ',' << row.cases << ',' << buf << ','
            << row.chain_property_1 << ',' << row.chain_property_2 << ',' << row.slope_envelope
            << ',' << row.none << '\n';
    }
}

} // namespace dss
