#include "idtnet/csv_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>

#include "idtnet/errors.hpp"

namespace idtnet::io {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string> split(std::string_view line)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        out.emplace_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

const std::string& cell(const Table& t, std::size_t row, std::size_t col)
{
    if (col >= t.rows[row].size()) {
        throw InputError("row " + std::to_string(row + 1) + " is missing column '" + t.header[col] + "'");
    }
    return t.rows[row][col];
}

} // namespace

std::size_t Table::column(std::string_view name) const
{
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        throw InputError("missing column '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
}

bool Table::has_column(std::string_view name) const
{
    return std::find(header.begin(), header.end(), name) != header.end();
}

Table read_table(std::istream& in)
{
    Table t;
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view view = trim(line);
        if (view.empty()) {
            continue;
        }
        if (view.front() == '#') {
            if (t.header.empty()) {
                t.comments.emplace_back(trim(view.substr(1)));
            }
            continue;
        }
        if (t.header.empty()) {
            t.header = split(view);
        } else {
            t.rows.push_back(split(view));
            if (t.rows.back().size() != t.header.size()) {
                throw InputError("row " + std::to_string(t.rows.size()) + " has " +
                                 std::to_string(t.rows.back().size()) + " fields, header has " +
                                 std::to_string(t.header.size()));
            }
        }
    }
    if (t.header.empty()) {
        throw InputError("CSV has no header row");
    }
    return t;
}

Table read_table_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path.string() + "'");
    }
    return read_table(in);
}

std::string format_double(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_double(std::string_view s)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        if (s == "inf" || s == "infinity") {
            return std::numeric_limits<double>::infinity();
        }
        throw InputError("not a number: '" + std::string(s) + "'");
    }
    return v;
}

long long parse_int(std::string_view s)
{
    s = trim(s);
    long long v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
        throw InputError("not an integer: '" + std::string(s) + "'");
    }
    return v;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents)
{
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw InputError("cannot write '" + tmp.string() + "'");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            throw InputError("write failed for '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw InputError("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

void write_comments(std::ostream& out, const std::vector<std::string>& lines)
{
    for (const auto& l : lines) {
        out << "# " << l << '\n';
    }
}

void write_graph(std::ostream& out, const Graph& g, const std::vector<std::string>& comments)
{
    write_comments(out, comments);
    out << "# n=" << g.node_count() << '\n';
    out << "u,v\n";
    for (const auto& [u, v] : g.edges()) {
        out << u << ',' << v << '\n';
    }
}

Graph read_graph(std::istream& in)
{
    const Table t = read_table(in);
    const std::size_t cu = t.column("u");
    const std::size_t cv = t.column("v");
    std::size_t n = 0;
    bool have_n = false;
    for (const auto& c : t.comments) {
        if (c.rfind("n=", 0) == 0) {
            n = static_cast<std::size_t>(parse_int(std::string_view(c).substr(2)));
            have_n = true;
        }
    }
    std::vector<Edge> edges;
    edges.reserve(t.rows.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const long long u = parse_int(cell(t, r, cu));
        const long long v = parse_int(cell(t, r, cv));
        if (u < 0 || v < 0 || u > UINT32_MAX || v > UINT32_MAX) {
            throw InputError("node id out of range on row " + std::to_string(r + 1));
        }
        if (!(u < v)) {
            throw InputError("edge rows must satisfy u < v (row " + std::to_string(r + 1) + ")");
        }
        edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
        if (!have_n) {
            n = std::max(n, static_cast<std::size_t>(v) + 1);
        }
    }
    try {
        return Graph(n, edges);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("invalid graph: ") + e.what());
    }
}

Graph read_graph_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open graph file '" + path.string() + "'");
    }
    return read_graph(in);
}

void write_analytic_curve(std::ostream& out, const analytic::AnalyticCurve& curve,
                          const std::vector<std::string>& comments)
{
    write_comments(out, comments);
    out << "# eps=" << format_double(curve.eps) << ",c_eff=" << format_double(curve.c_eff)
        << ",i_hat=" << format_double(curve.i_hat) << ",rho=" << format_double(curve.rho) << '\n';
    out << "# branch=" << (curve.symmetric_phase ? "symmetric" : "broken")
        << ",cavity_iterations=" << curve.cavity.iterations
        << ",degenerate_ratio=" << (curve.degenerate_ratio ? "true" : "false") << '\n';
    out << "k,i0_bits,t_k_bits,i1_upper_bits,d_steps\n";
    for (const auto& r : curve.rows) {
        out << r.k << ',' << format_double(r.i0) << ',' << format_double(r.t_k) << ','
            << format_double(r.i1_upper) << ',' << format_double(r.d) << '\n';
    }
}

AnalyticCurveFile read_analytic_curve(const Table& t)
{
    AnalyticCurveFile f;
    f.comments = t.comments;
    const std::size_t ck = t.column("k");
    const std::size_t c0 = t.column("i0_bits");
    const std::size_t ct = t.column("t_k_bits");
    const std::size_t c1 = t.column("i1_upper_bits");
    const std::size_t cd = t.column("d_steps");
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        analytic::CurveRow row;
        row.k = static_cast<int>(parse_int(cell(t, r, ck)));
        row.i0 = parse_double(cell(t, r, c0));
        row.t_k = parse_double(cell(t, r, ct));
        row.i1_upper = parse_double(cell(t, r, c1));
        row.d = parse_double(cell(t, r, cd));
        f.rows.push_back(row);
    }
    return f;
}

void write_empirical_curve(std::ostream& out, const empirical::EmpiricalCurve& curve,
                           const std::vector<std::string>& comments)
{
    write_comments(out, comments);
    out << "# censored_total=" << curve.censored_count << '\n';
    out << "k,n_units,mean_idt_sweeps,sem_idt,censored\n";
    for (const auto& r : curve.rows) {
        out << r.k << ',' << r.n_units << ',' << format_double(r.mean_idt) << ',' << format_double(r.sem_idt)
            << ',' << r.censored << '\n';
    }
}

empirical::EmpiricalCurve read_empirical_curve(const Table& t)
{
    empirical::EmpiricalCurve curve;
    const std::size_t ck = t.column("k");
    const std::size_t cn = t.column("n_units");
    const std::size_t cm = t.column("mean_idt_sweeps");
    const std::size_t cs = t.column("sem_idt");
    const std::size_t cc = t.column("censored");
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        empirical::CurveRow row;
        row.k = static_cast<int>(parse_int(cell(t, r, ck)));
        row.n_units = static_cast<std::size_t>(parse_int(cell(t, r, cn)));
        row.mean_idt = parse_double(cell(t, r, cm));
        row.sem_idt = parse_double(cell(t, r, cs));
        row.censored = static_cast<std::size_t>(parse_int(cell(t, r, cc)));
        row.low_n = row.n_units == 1;
        if (row.n_units == 0 || row.sem_idt < 0.0) {
            throw InputError("empirical curve row " + std::to_string(r + 1) + " is invalid");
        }
        curve.censored_count += row.censored;
        curve.rows.push_back(row);
    }
    for (const auto& c : t.comments) {
        if (c.rfind("censored_total=", 0) == 0) {
            curve.censored_count = static_cast<std::size_t>(parse_int(std::string_view(c).substr(15)));
        }
    }
    return curve;
}

void write_per_unit(std::ostream& out, std::span<const empirical::FitResult> fits,
                    std::span<const std::size_t> degrees, const std::vector<std::string>& comments)
{
    write_comments(out, comments);
    out << "unit,degree,idt_sweeps,censored,fit_slope,fit_intercept,fit_points\n";
    for (std::size_t u = 0; u < fits.size(); ++u) {
        const auto& f = fits[u];
        out << u << ',' << degrees[u] << ',' << (f.censored() ? std::string("nan") : format_double(f.idt)) << ','
            << (f.censored() ? 1 : 0) << ',' << format_double(f.slope) << ',' << format_double(f.intercept) << ','
            << f.points << '\n';
    }
}

void write_oracle(std::ostream& out, std::span<const OracleRow> rows, const std::vector<std::string>& comments)
{
    write_comments(out, comments);
    out << "lag,unit,mi_bits\n";
    for (const auto& r : rows) {
        out << r.lag << ',' << r.unit << ',' << format_double(r.mi_bits) << '\n';
    }
}

trend::XYSeries read_xy(const Table& t)
{
    const std::size_t cx = t.column("x");
    // trend's own output carries y_raw instead of y
    const std::size_t cy = t.has_column("y") || !t.has_column("y_raw") ? t.column("y") : t.column("y_raw");
    std::vector<trend::Point> pts;
    pts.reserve(t.rows.size());
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        pts.push_back({parse_double(cell(t, r, cx)), parse_double(cell(t, r, cy))});
    }
    try {
        return trend::XYSeries(std::move(pts));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

void write_trend(std::ostream& out, const trend::XYSeries& raw, const trend::XYSeries& smooth,
                 const trend::LinearFit& fit, double fit_from, double fit_to,
                 const std::vector<std::string>& comments)
{
    write_comments(out, comments);
    out << "# slope=" << format_double(fit.slope) << ",slope_se=" << format_double(fit.slope_se)
        << ",fit_from=" << format_double(fit_from) << ",fit_to=" << format_double(fit_to) << '\n';
    out << "# intercept=" << format_double(fit.intercept) << ",intercept_se=" << format_double(fit.intercept_se)
        << ",fit_points=" << fit.points << '\n';
    out << "x,y_raw,y_smooth\n";
    for (std::size_t i = 0; i < raw.size(); ++i) {
        out << format_double(raw.points()[i].x) << ',' << format_double(raw.points()[i].y) << ','
            << format_double(smooth.points()[i].y) << '\n';
    }
}

} // namespace idtnet::io
