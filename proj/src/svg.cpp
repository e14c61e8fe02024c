#include "dss/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "dss/error.hpp"
#include "dss/rational.hpp"

namespace dss {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

double parse_cell(const std::string& cell) {
    return Rational::parse(cell).to_double();
}

std::string fmt(double v, const char* spec = "%.2f") {
    char buf[40];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

} // namespace

PlotData parse_plot_csv(const std::string& content) {
    std::istringstream in(content);
    std::string line;
    if (!std::getline(in, line)) throw DataError("plot input: empty file");

    const std::vector<std::string> header = split_csv_line(line);
    bool has_reference = false;
    if (header.size() == 5 && header[0] == "i" && header[1] == "mu" && header[2] == "l" &&
        header[3] == "u" && header[4] == "one_over_i") {
        has_reference = true;
    } else if (header.size() == 4 && header[0] == "i" && header[1] == "mu" &&
               header[2] == "lower" && header[3] == "upper") {
        has_reference = false;
    } else {
        throw DataError("plot input: unrecognized CSV header");
    }

    PlotData data;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size()) {
            throw DataError("plot input: line " + std::to_string(line_no) + ": wrong cell count");
        }
        PlotRow row;
        try {
            row.i = static_cast<std::int64_t>(parse_cell(cells[0]));
            row.mu = parse_cell(cells[1]);
            row.lower = parse_cell(cells[2]);
            row.upper = parse_cell(cells[3]);
            row.one_over_i = has_reference ? parse_cell(cells[4])
                                           : 1.0 / static_cast<double>(row.i);
        } catch (const Error&) {
            throw DataError("plot input: line " + std::to_string(line_no) + ": bad value");
        }
        if (!data.rows.empty() && row.i <= data.rows.back().i) {
            data.run_starts.push_back(data.rows.size());
        }
        data.rows.push_back(row);
    }
    return data;
}

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 780.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 510.0;

struct Scale {
    double y_min = 0.0;
    double y_max = 1.0;
    std::size_t n = 0;

    double x(std::size_t index) const {
        if (n <= 1) return (kLeft + kRight) / 2.0;
        return kLeft + (kRight - kLeft) * static_cast<double>(index) /
                           static_cast<double>(n - 1);
    }
    double y(double value) const {
        return kBottom - (kBottom - kTop) * (value - y_min) / (y_max - y_min);
    }
};

void emit_step_path(std::ostringstream& out, const PlotData& data, const Scale& scale,
                    double PlotRow::*field, const char* color) {
    std::size_t run = 0;
    std::size_t begin = 0;
    while (begin < data.rows.size()) {
        const std::size_t end =
            run < data.run_starts.size() ? data.run_starts[run] : data.rows.size();
        out << "  <path fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" d=\"";
        for (std::size_t j = begin; j < end; ++j) {
            const double x = scale.x(j);
            const double y = scale.y(data.rows[j].*field);
            if (j == begin) {
                out << "M" << fmt(x) << " " << fmt(y);
            } else {
                out << " H" << fmt(x) << " V" << fmt(y);
            }
        }
        out << "\"/>\n";
        begin = end;
        ++run;
    }
}

void emit_polyline(std::ostringstream& out, const PlotData& data, const Scale& scale,
                   double PlotRow::*field, const char* color, const char* dash) {
    std::size_t run = 0;
    std::size_t begin = 0;
    while (begin < data.rows.size()) {
        const std::size_t end =
            run < data.run_starts.size() ? data.run_starts[run] : data.rows.size();
        out << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1\"";
        if (dash) out << " stroke-dasharray=\"" << dash << "\"";
        out << " points=\"";
        for (std::size_t j = begin; j < end; ++j) {
            if (j != begin) out << ' ';
            out << fmt(scale.x(j)) << ',' << fmt(scale.y(data.rows[j].*field));
        }
        out << "\"/>\n";
        begin = end;
        ++run;
    }
}

} // namespace

std::string render_plot_svg(const PlotData& data) {
    Scale scale;
    scale.n = data.rows.size();
    if (!data.rows.empty()) {
        double lo = data.rows.front().lower;
        double hi = data.rows.front().upper;
        for (const PlotRow& row : data.rows) {
            lo = std::min({lo, row.mu, row.lower, row.upper, row.one_over_i});
            hi = std::max({hi, row.mu, row.lower, row.upper, row.one_over_i});
        }
        if (hi <= lo) hi = lo + 1.0;
        const double pad = (hi - lo) * 0.05;
        scale.y_min = lo - pad;
        scale.y_max = hi + pad;
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth, "%.0f")
        << "\" height=\"" << fmt(kHeight, "%.0f") << "\" viewBox=\"0 0 " << fmt(kWidth, "%.0f")
        << " " << fmt(kHeight, "%.0f") << "\">\n"
        << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    out << "  <line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kBottom) << "\" x2=\""
        << fmt(kRight) << "\" y2=\"" << fmt(kBottom) << "\" stroke=\"black\"/>\n"
        << "  <line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(kLeft)
        << "\" y2=\"" << fmt(kBottom) << "\" stroke=\"black\"/>\n";

    // y ticks
    for (int t = 0; t <= 5; ++t) {
        const double value = scale.y_min + (scale.y_max - scale.y_min) * t / 5.0;
        const double y = scale.y(value);
        out << "  <line x1=\"" << fmt(kLeft - 4) << "\" y1=\"" << fmt(y) << "\" x2=\""
            << fmt(kLeft) << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n"
            << "  <text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(y + 4)
            << "\" font-size=\"11\" text-anchor=\"end\" font-family=\"monospace\">"
            << fmt(value, "%.3f") << "</text>\n";
    }

    if (!data.rows.empty()) {
        // x ticks labelled with the distance column
        const std::size_t ticks = std::min<std::size_t>(data.rows.size(), 12);
        for (std::size_t t = 0; t < ticks; ++t) {
            const std::size_t index =
                ticks <= 1 ? 0 : t * (data.rows.size() - 1) / (ticks - 1);
            const double x = scale.x(index);
            out << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kBottom) << "\" x2=\""
                << fmt(x) << "\" y2=\"" << fmt(kBottom + 4) << "\" stroke=\"black\"/>\n"
                << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(kBottom + 18)
                << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"monospace\">"
                << data.rows[index].i << "</text>\n";
        }

        for (const std::size_t start : data.run_starts) {
            const double x = (scale.x(start - 1) + scale.x(start)) / 2.0;
            out << "  <line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop) << "\" x2=\"" << fmt(x)
                << "\" y2=\"" << fmt(kBottom)
                << "\" stroke=\"#999999\" stroke-dasharray=\"2 3\"/>\n";
        }

        emit_polyline(out, data, scale, &PlotRow::one_over_i, "#888888", "5 3");
        emit_step_path(out, data, scale, &PlotRow::lower, "#1f77b4");
        emit_step_path(out, data, scale, &PlotRow::upper, "#2ca02c");
        for (std::size_t j = 0; j < data.rows.size(); ++j) {
            out << "  <circle cx=\"" << fmt(scale.x(j)) << "\" cy=\""
                << fmt(scale.y(data.rows[j].mu)) << "\" r=\"2.5\" fill=\"#d62728\"/>\n";
        }
    }

    out << "  <text x=\"" << fmt(kRight) << "\" y=\"" << fmt(kTop - 14)
        << "\" font-size=\"12\" text-anchor=\"end\" font-family=\"monospace\">"
        << "mu (dots), lower/upper window, 1/i (dashed)</text>\n"
        << "  <text x=\"" << fmt((kLeft + kRight) / 2) << "\" y=\"" << fmt(kBottom + 38)
        << "\" font-size=\"12\" text-anchor=\"middle\" font-family=\"monospace\">"
        << "distance from anchor</text>\n"
        << "</svg>\n";
    return out.str();
}

} // namespace dss
