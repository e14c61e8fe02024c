#include "dss/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dss/error.hpp"

namespace dss {

namespace {

std::int64_t parse_coordinate(const std::string& token, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw DataError("line " + std::to_string(line_no) + ": bad coordinate '" + token + "'");
    }
    return value;
}

GridPoint parse_point_line(const std::string& line, std::size_t line_no) {
    std::istringstream fields(line);
    std::string x, y, extra;
    if (!(fields >> x >> y) || (fields >> extra)) {
        throw DataError("line " + std::to_string(line_no) + ": expected 'x y'");
    }
    return {parse_coordinate(x, line_no), parse_coordinate(y, line_no)};
}

} // namespace

std::vector<GridPoint> read_points(std::istream& in) {
    std::vector<GridPoint> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        points.push_back(parse_point_line(line, line_no));
    }
    return points;
}

void write_points(std::ostream& out, std::span<const GridPoint> points) {
    for (const GridPoint& p : points) {
        out << p.x << ' ' << p.y << '\n';
    }
}

ChainCode read_chain(std::istream& in) {
    std::string start_line;
    if (!std::getline(in, start_line) || start_line.empty()) {
        throw DataError("chain file: missing start point line");
    }
    ChainCode chain{.start = parse_point_line(start_line, 1), .symbols = {}};

    std::string symbols_line;
    std::getline(in, symbols_line); // may be absent: an empty chain
    chain.symbols.reserve(symbols_line.size());
    for (const char ch : symbols_line) {
        if (ch < '0' || ch > '7') {
            throw DataError(std::string("chain file: bad symbol '") + ch + "'");
        }
        chain.symbols.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return chain;
}

void write_chain(std::ostream& out, const ChainCode& chain) {
    out << chain.start.x << ' ' << chain.start.y << '\n';
    for (const std::uint8_t sym : chain.symbols) {
        out << static_cast<char>('0' + sym);
    }
    out << '\n';
}

InputFormat sniff_format(const std::string& content) {
    std::istringstream in(content);
    std::string first, second, third;
    std::getline(in, first);
    const bool has_second = static_cast<bool>(std::getline(in, second));
    const bool has_third = static_cast<bool>(std::getline(in, third)) && !third.empty();
    if (has_second && !has_third && !second.empty() &&
        second.find_first_not_of("01234567") == std::string::npos) {
        return InputFormat::chain;
    }
    return InputFormat::points;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << content;
}

void write_vertices_csv(std::ostream& out, const SegmentationResult& result) {
    out << "index,x,y,cause\n";
    for (const FoundVertex& v : result.vertices) {
        out << v.index << ',' << v.point.x << ',' << v.point.y << ',' << to_string(v.cause)
            << '\n';
    }
}

void write_trace_csv(std::ostream& out, std::span<const TraceRow> rows) {
    out << "i,mu,l,u,one_over_i\n";
    for (const TraceRow& row : rows) {
        out << row.i << ',' << row.mu.str() << ',' << row.lower.str() << ',' << row.upper.str()
            << ',' << Rational(1, row.i).str() << '\n';
    }
}

void write_bounds_csv(std::ostream& out, std::span<const BoundsRow> rows) {
    out << "i,mu,lower,upper\n";
    for (const BoundsRow& row : rows) {
        out << row.i << ',' << row.mu.str() << ',' << row.lower.str() << ',' << row.upper.str()
            << '\n';
    }
}

} // namespace dss
