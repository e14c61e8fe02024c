#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dss/benchmark.hpp"
#include "dss/bounds.hpp"
#include "dss/chaincode.hpp"
#include "dss/error.hpp"
#include "dss/generate.hpp"
#include "dss/geometry.hpp"
#include "dss/io.hpp"
#include "dss/recognizer.hpp"
#include "dss/svg.hpp"

namespace {

using namespace dss;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    return read_file(path);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
    } else {
        write_file(path, content);
    }
}

Rational parse_slope(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const DataError&) {
        throw UsageError("cannot parse slope '" + text + "'; expected p/q or a decimal");
    }
}

GridPoint parse_origin(const std::string& text) {
    std::istringstream in(text);
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::string extra;
    if (!(in >> x >> y) || (in >> extra)) {
        throw UsageError("cannot parse origin '" + text + "'; expected \"x y\"");
    }
    return {x, y};
}

struct GenerateOptions {
    std::string slope_text = "0";
    std::string variant = "optimal";
    std::string origin_text = "0 0";
    std::int64_t length = 0;
    std::int64_t periods = 0;
    std::uint32_t seed = 0;
    std::string output;
};

void run_generate(const GenerateOptions& opt) {
    const GridPoint origin = parse_origin(opt.origin_text);
    std::vector<GridPoint> points;
    std::string period_note = "-";

    if (opt.variant == "walk") {
        if (opt.length < 1) throw UsageError("--variant walk needs --length");
        std::mt19937 rng(opt.seed);
        std::uniform_int_distribution<int> dir(0, 7);
        points.push_back(origin);
        for (std::int64_t i = 0; i < opt.length; ++i) {
            points.push_back(points.back() + kChainMoves[static_cast<std::size_t>(dir(rng))]);
        }
    } else {
        const Rational slope = parse_slope(opt.slope_text);
        if (slope < Rational(0) || slope > Rational(1)) {
            throw UsageError("slope must lie in [0, 1]");
        }
        period_note = std::to_string(period_length(slope));

        if (opt.variant == "optimal") {
            std::int64_t steps = opt.length;
            if (steps == 0 && opt.periods > 0) steps = opt.periods * slope.den();
            if (steps < 1) throw UsageError("need --length or --periods");
            points = generate_optimal(origin, SlopeValue::exact(slope), steps).points;
        } else if (opt.variant.rfind("basic-set:", 0) == 0) {
            std::size_t index = 0;
            try {
                index = static_cast<std::size_t>(std::stoul(opt.variant.substr(10)));
            } catch (const std::exception&) {
                throw UsageError("bad basic-set index in '" + opt.variant + "'");
            }
            const auto sets = basic_sets(slope);
            if (sets.size() != static_cast<std::size_t>(slope.den())) {
                std::cerr << "warning: expected " << slope.den() << " distinct basic sets, got "
                          << sets.size() << "\n";
            }
            if (index >= sets.size()) {
                throw UsageError("basic-set index " + std::to_string(index) +
                                 " out of range; slope has " + std::to_string(sets.size()) +
                                 " sets");
            }
            const std::int64_t periods = opt.periods > 0 ? opt.periods : 1;
            points = generate_from_basic_set(sets[index], periods).points;
            if (!(origin == GridPoint{0, 0})) {
                for (GridPoint& p : points) p = p + origin;
            }
        } else {
            throw UsageError("unknown variant '" + opt.variant +
                             "'; expected optimal, basic-set:K or walk");
        }
    }

    std::ostringstream out;
    write_points(out, points);
    write_output(opt.output, out.str());

    std::cerr << "period: " << period_note << "\n";
    std::ostringstream chain_out;
    write_chain(chain_out, encode(points));
    const std::string chain_text = chain_out.str();
    std::cerr << "chain: " << chain_text.substr(chain_text.find('\n') + 1);
}

std::vector<GridPoint> load_points(const std::string& input, const std::string& format) {
    const std::string content = read_input(input);
    InputFormat fmt = InputFormat::points;
    if (format == "auto") {
        fmt = sniff_format(content);
    } else if (format == "chain") {
        fmt = InputFormat::chain;
    } else if (format != "points") {
        throw UsageError("unknown format '" + format + "'");
    }
    std::istringstream in(content);
    if (fmt == InputFormat::chain) return decode(read_chain(in));
    return read_points(in);
}

void run_bounds(const std::string& input, const std::string& slope_text,
                const std::string& output) {
    std::istringstream in(read_input(input));
    const std::vector<GridPoint> points = read_points(in);
    if (points.empty()) throw UsageError("input holds no points");
    if (points.size() < 2) throw DataError("bounds needs at least two points");

    const Rational slope = slope_text.empty()
                               ? slope_between(points.front(), points.back())
                               : parse_slope(slope_text);

    const Dss seg{.points = points, .slope = SlopeValue::exact(slope), .origin = points.front()};
    const BoundaryLines lines = fit_boundary_lines(seg);
    if (!lines.tight) {
        std::cerr << "warning: segment shorter than one period; offsets are not extremal\n";
    }

    const MuSeries series = mu_series(points, 0);
    std::vector<BoundsRow> rows;
    rows.reserve(series.values.size());
    for (const auto& [i, mu] : series.values) {
        const SlopeBoundsAt at = slope_bounds_at(lines, points.front(), i);
        rows.push_back({i, mu, at.lower, at.upper});
    }
    std::ostringstream out;
    write_bounds_csv(out, rows);
    write_output(output, out.str());
}

void run_recognize(const std::string& input, const std::string& format,
                   const std::string& output, const std::string& trace_path,
                   bool check_oracle) {
    const std::vector<GridPoint> points = load_points(input, format);
    if (points.empty()) throw UsageError("input holds no points");
    if (points.size() < 2) throw DataError("recognition needs at least two points");

    std::vector<TraceRow> trace;
    const SegmentationResult result = segment(points, trace_path.empty() ? nullptr : &trace);

    std::ostringstream out;
    write_vertices_csv(out, result);
    write_output(output, out.str());

    if (!trace_path.empty()) {
        std::ostringstream trace_out;
        write_trace_csv(trace_out, trace);
        write_output(trace_path, trace_out.str());
    }

    if (check_oracle) {
        for (const SegmentRange& range : result.segments) {
            const std::vector<GridPoint> piece(
                points.begin() + static_cast<std::ptrdiff_t>(range.first),
                points.begin() + static_cast<std::ptrdiff_t>(range.last) + 1);
            const auto [normalized, transform] = octant_normalize(piece);
            const bool exact = oracle_is_dss(normalized);
            std::cerr << "segment " << range.first << ".." << range.last << ": "
                      << (exact ? "exact" : "heuristic-boundary") << "\n";
        }
    }
}

struct BenchmarkOptions {
    std::string deltas_text;
    int min_length = kBankMinLength;
    int max_length = kBankMaxLength;
    unsigned jobs = 0;
    std::string out_dir = ".";
    bool no_records = false;
};

void run_benchmark(const BenchmarkOptions& opt) {
    if (opt.min_length < kBankMinLength || opt.max_length > kBankMaxLength ||
        opt.min_length > opt.max_length) {
        throw UsageError("length range must lie within " + std::to_string(kBankMinLength) + ".." +
                         std::to_string(kBankMaxLength));
    }
    std::vector<bool> delta_selected(46, true);
    if (!opt.deltas_text.empty()) {
        delta_selected.assign(46, false);
        std::istringstream in(opt.deltas_text);
        std::string item;
        while (std::getline(in, item, ',')) {
            int delta = 0;
            try {
                delta = std::stoi(item);
            } catch (const std::exception&) {
                throw UsageError("bad delta '" + item + "'");
            }
            if (delta < 1 || delta > 45) throw UsageError("deltas must lie in 1..45");
            delta_selected[static_cast<std::size_t>(delta)] = true;
        }
    }

    std::vector<BenchmarkCaseSpec> specs;
    for (const BenchmarkCaseSpec& spec : build_bank()) {
        if (!delta_selected[static_cast<std::size_t>(spec.delta_deg)]) continue;
        if (spec.length < opt.min_length || spec.length > opt.max_length) continue;
        specs.push_back(spec);
    }

    RunBankOptions run_opt;
    run_opt.jobs = opt.jobs > 0 ? opt.jobs : std::max(1u, std::thread::hardware_concurrency());
    std::cerr << "running " << specs.size() << " cases on " << run_opt.jobs << " thread(s)\n";
    const BankReport report = run_bank(specs, run_opt);

    std::filesystem::create_directories(opt.out_dir);
    const std::string summary_path = opt.out_dir + "/bank_summary.csv";
    {
        std::ostringstream out;
        write_summary_csv(out, report.summary);
        write_file(summary_path, out.str());
    }
    std::cerr << "summary: " << summary_path << "\n";

    if (!opt.no_records) {
        const std::string records_path = opt.out_dir + "/bank_records.csv";
        std::ostringstream out;
        write_records_csv(out, report.records);
        write_file(records_path, out.str());
        std::cerr << "records: " << records_path << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"digital straight segment toolkit"};
    app.require_subcommand(1);

    GenerateOptions gen;
    CLI::App* generate = app.add_subcommand("generate", "rasterize a segment and write its points");
    generate->add_option("--slope", gen.slope_text, "slope as p/q or decimal, in [0, 1]");
    generate->add_option("--variant", gen.variant, "optimal | basic-set:K | walk")
        ->capture_default_str();
    generate->add_option("--length", gen.length, "number of steps");
    generate->add_option("--periods", gen.periods, "number of periods (exact slopes)");
    generate->add_option("--origin", gen.origin_text, "start point \"x y\"")
        ->capture_default_str();
    generate->add_option("--seed", gen.seed, "seed for the walk variant");
    generate->add_option("-o,--output", gen.output, "output file (default stdout)");
    generate->callback([&gen] { run_generate(gen); });

    std::string enc_input;
    std::string enc_output;
    CLI::App* enc = app.add_subcommand("encode", "point list to chain file");
    enc->add_option("input", enc_input, "point-list file (default stdin)");
    enc->add_option("-o,--output", enc_output, "output file (default stdout)");
    enc->callback([&enc_input, &enc_output] {
        std::istringstream in(read_input(enc_input));
        const std::vector<GridPoint> points = read_points(in);
        if (points.empty()) throw UsageError("input holds no points");
        std::ostringstream out;
        write_chain(out, encode(points));
        write_output(enc_output, out.str());
    });

    std::string dec_input;
    std::string dec_output;
    CLI::App* dec = app.add_subcommand("decode", "chain file to point list");
    dec->add_option("input", dec_input, "chain file (default stdin)");
    dec->add_option("-o,--output", dec_output, "output file (default stdout)");
    dec->callback([&dec_input, &dec_output] {
        std::istringstream in(read_input(dec_input));
        std::ostringstream out;
        write_points(out, decode(read_chain(in)));
        write_output(dec_output, out.str());
    });

    std::string bounds_input;
    std::string bounds_slope;
    std::string bounds_output;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "exact slope window per distance");
    bounds_cmd->add_option("input", bounds_input, "point-list file (default stdin)");
    bounds_cmd->add_option("--slope", bounds_slope,
                           "segment slope p/q (default: first-to-last slope)");
    bounds_cmd->add_option("-o,--output", bounds_output, "output CSV (default stdout)");
    bounds_cmd->callback([&bounds_input, &bounds_slope, &bounds_output] {
        run_bounds(bounds_input, bounds_slope, bounds_output);
    });

    std::string rec_input;
    std::string rec_format = "auto";
    std::string rec_output;
    std::string rec_trace;
    bool rec_oracle = false;
    CLI::App* rec = app.add_subcommand("recognize", "split a curve into straight runs");
    rec->add_option("input", rec_input, "point-list or chain file (default stdin)");
    rec->add_option("--format", rec_format, "auto | points | chain")->capture_default_str();
    rec->add_option("-o,--output", rec_output, "vertices CSV (default stdout)");
    rec->add_option("--trace", rec_trace, "write the per-step envelope trace CSV here");
    rec->add_flag("--check-oracle", rec_oracle,
                  "report per segment whether it is an exact straight run");
    rec->callback([&rec_input, &rec_format, &rec_output, &rec_trace, &rec_oracle] {
        run_recognize(rec_input, rec_format, rec_output, rec_trace, rec_oracle);
    });

    BenchmarkOptions bench;
    CLI::App* bench_cmd = app.add_subcommand("benchmark", "run the two-segment case bank");
    bench_cmd->add_option("--deltas", bench.deltas_text,
                          "comma list of angle deltas (default all)");
    bench_cmd->add_option("--min-length", bench.min_length, "smallest per-segment length")
        ->capture_default_str();
    bench_cmd->add_option("--max-length", bench.max_length, "largest per-segment length")
        ->capture_default_str();
    bench_cmd->add_option("--jobs", bench.jobs, "worker threads (default: hardware)");
    bench_cmd->add_option("--out", bench.out_dir, "output directory")->capture_default_str();
    bench_cmd->add_flag("--no-records", bench.no_records, "skip the per-case records CSV");
    bench_cmd->callback([&bench] { run_benchmark(bench); });

    std::string plot_input;
    std::string plot_output;
    CLI::App* plot = app.add_subcommand("plot", "render a trace or bounds CSV as SVG");
    plot->add_option("input", plot_input, "CSV file (default stdin)");
    plot->add_option("-o,--output", plot_output, "output SVG (default stdout)");
    plot->callback([&plot_input, &plot_output] {
        const PlotData data = parse_plot_csv(read_input(plot_input));
        write_output(plot_output, render_plot_svg(data));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PrecisionError& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 4;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
