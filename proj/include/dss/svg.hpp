#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dss {

// One plotted sample: slope toward the anchor plus the window around it.
struct PlotRow {
    std::int64_t i = 0;
    double mu = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double one_over_i = 0.0;
};

struct PlotData {
    std::vector<PlotRow> rows;
    // Positions where a new run starts (the distance column dropped),
    // marked in the plot with a separator line.
    std::vector<std::size_t> run_starts;
};

// Accepts the trace schema (i,mu,l,u,one_over_i) and the bounds schema
// (i,mu,lower,upper); fraction-valued cells like "2/7" are understood.
PlotData parse_plot_csv(const std::string& content);

// Deterministic standalone SVG: mu markers, lower/upper staircases and the
// 1/i reference curve. Identical input yields identical bytes.
std::string render_plot_svg(const PlotData& data);

} // namespace dss
