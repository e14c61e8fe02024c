#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dss/geometry.hpp"
#include "dss/rational.hpp"
#include "dss/recognizer.hpp"

namespace dss {

inline constexpr int kBankSlopeDenominator = 43;
inline constexpr int kBankMinLength = 21;
inline constexpr int kBankMaxLength = 430;

// One trial: two connected segments of equal chessboard length. The first
// slope is slope_index / 43; the second direction differs by delta_deg.
struct BenchmarkCaseSpec {
    int slope_index = 0; // 0..43
    int delta_deg = 0;   // 1..45
    int length = 0;      // 21..430

    friend bool operator==(const BenchmarkCaseSpec&, const BenchmarkCaseSpec&) = default;
};

// Full grid of 44 slopes x 45 angle deltas x 410 lengths = 811,800 cases,
// enumerated slope-major, in a stable order.
std::vector<BenchmarkCaseSpec> build_bank();

struct BenchmarkCase {
    BenchmarkCaseSpec spec;
    Rational m1;
    std::vector<GridPoint> points;
    std::size_t true_vertex_index = 0;
};

// Generates the trial's points. The second slope is kept exact whenever the
// 45-degree tangent identity makes it rational (including the vertical
// special case); all other angles rasterize from an extended-precision
// tangent and may throw PrecisionError.
BenchmarkCase make_case(const BenchmarkCaseSpec& spec);

// Distance from the true to the found vertex divided by the segment length,
// clamped to [0, 1]; a missing vertex scores 1.
double effectiveness(GridPoint true_vertex, const std::optional<GridPoint>& found_vertex,
                     std::int64_t length);

struct EffectivenessRecord {
    std::uint32_t case_id = 0;
    BenchmarkCaseSpec spec;
    std::optional<std::uint32_t> found_index;
    double effectiveness = 1.0;
    std::optional<VertexCause> cause; // of the scored vertex
};

// Aggregate over one (delta, length-bucket) group or a whole delta
// ("all" bucket). Buckets follow the length-to-period ratio grid
// 0.5, 1, 2, ..., 10.
struct SummaryRow {
    int delta_deg = 0;
    std::string bucket;
    std::int64_t cases = 0;
    double mean_effectiveness = 0.0;
    std::int64_t chain_property_1 = 0;
    std::int64_t chain_property_2 = 0;
    std::int64_t slope_envelope = 0;
    std::int64_t none = 0;
};

struct BankReport {
    std::vector<EffectivenessRecord> records; // case order
    std::vector<SummaryRow> summary;
};

struct RunBankOptions {
    unsigned jobs = 1;
};

// Runs the recognizer over every case and scores it. When several vertices
// are reported, the one nearest the true vertex is scored. Cases are
// independent, so they may be evaluated on several threads; the output is
// merged by case id and identical for any job count.
BankReport run_bank(std::span<const BenchmarkCaseSpec> specs, const RunBankOptions& opts = {});

// Exact decision: is there a real line whose rounded rasterization produces
// exactly these points? Input must be first-octant normalized with x
// stepping by one. Decided over the critical slopes generated by point
// pairs, in pure integer arithmetic.
bool oracle_is_dss(std::span<const GridPoint> points);

void write_records_csv(std::ostream& out, std::span<const EffectivenessRecord> records);
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> summary);

} // namespace dss
