#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "dss/bounds.hpp"
#include "dss/chaincode.hpp"
#include "dss/geometry.hpp"
#include "dss/recognizer.hpp"

namespace dss {

// Point-list format: one "x y" integer pair per line, LF line endings.
std::vector<GridPoint> read_points(std::istream& in);
void write_points(std::ostream& out, std::span<const GridPoint> points);

// Chain format: line 1 "x y" start point, line 2 the symbols as digits.
ChainCode read_chain(std::istream& in);
void write_chain(std::ostream& out, const ChainCode& chain);

enum class InputFormat { points, chain };

// A chain file is exactly two lines with a digits-only second line.
InputFormat sniff_format(const std::string& content);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

void write_vertices_csv(std::ostream& out, const SegmentationResult& result);
void write_trace_csv(std::ostream& out, std::span<const TraceRow> rows);

// Rows of the `bounds` subcommand: slope from the anchor and the exact
// window at each distance.
struct BoundsRow {
    std::int64_t i = 0;
    Rational mu;
    Rational lower;
    Rational upper;
};

void write_bounds_csv(std::ostream& out, std::span<const BoundsRow> rows);

} // namespace dss
