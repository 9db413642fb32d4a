#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "idtnet/graph.hpp"
#include "idtnet/idt_analytic.hpp"
#include "idtnet/idt_empirical.hpp"
#include "idtnet/trend.hpp"

// Readers and writers for every CSV the tools exchange. All files may start
// with '#' comment lines; readers skip them and expose them separately.
// Readers throw InputError on malformed content.
namespace idtnet::io {

/// Comma-separated table with its header row and leading comment lines
/// (without the '#').
struct Table {
    std::vector<std::string> comments;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name; throws InputError if absent.
    std::size_t column(std::string_view name) const;
    bool has_column(std::string_view name) const;
};

Table read_table(std::istream& in);
Table read_table_file(const std::filesystem::path& path);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);
double parse_double(std::string_view s);
long long parse_int(std::string_view s);

/// Writes `contents` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

/// Emits `# line` for each line.
void write_comments(std::ostream& out, const std::vector<std::string>& lines);

/// `u,v` per edge with u < v; node count recorded as a `# n=` comment so
/// trailing isolated nodes survive a round trip.
void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments = {});
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::filesystem::path& path);

void write_analytic_curve(std::ostream& out, const analytic::AnalyticCurve& curve,
                          const std::vector<std::string>& comments = {});

struct AnalyticCurveFile {
    std::vector<analytic::CurveRow> rows;
    std::vector<std::string> comments;
};
AnalyticCurveFile read_analytic_curve(const Table& t);

void write_empirical_curve(std::ostream& out, const empirical::EmpiricalCurve& curve,
                           const std::vector<std::string>& comments = {});
empirical::EmpiricalCurve read_empirical_curve(const Table& t);

/// unit,degree,idt_sweeps,censored,fit_slope,fit_intercept,fit_points
void write_per_unit(std::ostream& out, std::span<const empirical::FitResult> fits,
                    std::span<const std::size_t> degrees, const std::vector<std::string>& comments = {});

struct OracleRow {
    std::size_t lag = 0;
    std::size_t unit = 0;
    double mi_bits = 0.0;
};
void write_oracle(std::ostream& out, std::span<const OracleRow> rows, const std::vector<std::string>& comments = {});

/// Reads `x,y` (extra columns ignored).
trend::XYSeries read_xy(const Table& t);

void write_trend(std::ostream& out, const trend::XYSeries& raw, const trend::XYSeries& smooth,
                 const trend::LinearFit& fit, double fit_from, double fit_to,
                 const std::vector<std::string>& comments = {});

} // namespace idtnet::io
