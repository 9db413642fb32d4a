#include "idtnet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "idtnet/csv_io.hpp"
#include "idtnet/errors.hpp"
#include "idtnet/exact_oracle.hpp"
#include "idtnet/graph.hpp"
#include "idtnet/idt_analytic.hpp"
#include "idtnet/idt_empirical.hpp"
#include "idtnet/rng.hpp"
#include "idtnet/spin_dynamics.hpp"
#include "idtnet/svg_plot.hpp"
#include "idtnet/trend.hpp"

namespace idtnet::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string fmt(double v) { return io::format_double(v); }

// Resolved configuration, echoed as `# key = value` lines at the top of every
// CSV. Output paths and the worker count are left out: they cannot change the
// numbers, and leaving them in would make otherwise identical runs differ.
class Echo {
public:
    explicit Echo(std::string command) : command_(std::move(command)) {}

    template <typename T>
    void add(const std::string& key, const T& value)
    {
        if constexpr (std::is_floating_point_v<T>) {
            kv_.emplace_back(key, fmt(value));
        } else if constexpr (std::is_convertible_v<T, std::string>) {
            kv_.emplace_back(key, std::string(value));
        } else if constexpr (std::is_convertible_v<T, std::string_view>) {
            kv_.emplace_back(key, std::string(std::string_view(value)));
        } else {
            kv_.emplace_back(key, std::to_string(value));
        }
    }

    std::vector<std::string> lines() const
    {
        std::vector<std::string> out{"idtnet " + command_};
        for (const auto& [k, v] : kv_) {
            out.push_back(k + " = " + v);
        }
        return out;
    }

private:
    std::string command_;
    std::vector<std::pair<std::string, std::string>> kv_;
};

std::vector<std::string> with(std::vector<std::string> a, const std::vector<std::string>& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

void emit(const fs::path& path, const std::ostringstream& body) { io::write_file_atomic(path, body.str()); }

/// `<stem>.r<i><ext>` next to `path`.
fs::path realization_path(const fs::path& path, std::size_t r)
{
    fs::path out = path;
    out.replace_filename(path.stem().string() + ".r" + std::to_string(r) + path.extension().string());
    return out;
}

struct NetworkOptions {
    std::size_t n = 1000;
    double gamma = 1.6;
    int kmin = 1;
    int kmax = 0; // 0: ceil(sqrt(n))

    int resolved_kmax() const { return kmax > 0 ? kmax : default_k_max(n); }

    void add_to(CLI::App* sub)
    {
        sub->add_option("--n", n, "number of units")->capture_default_str();
        sub->add_option("--gamma", gamma, "power-law exponent")->capture_default_str();
        sub->add_option("--kmin", kmin, "smallest degree")->capture_default_str();
        sub->add_option("--kmax", kmax, "largest degree (0: ceil(sqrt(n)))")->capture_default_str();
    }

    void echo(Echo& e) const
    {
        e.add("n", n);
        e.add("gamma", gamma);
        e.add("kmin", kmin);
        e.add("kmax", resolved_kmax());
    }

    DegreeDistribution distribution() const { return DegreeDistribution::power_law(gamma, kmin, resolved_kmax()); }

    Graph generate(std::uint64_t seed, std::size_t realization) const
    {
        Rng rng = derive_stream(seed, "graph", realization);
        const auto degrees = sample_degree_sequence(distribution(), n, rng);
        return build_configuration_graph(degrees, rng);
    }
};

struct DynamicsOptions {
    double coupling = 1.0;
    double temp = 2.0;
    std::string rule = "glauber";

    void add_to(CLI::App* sub, bool with_rule)
    {
        sub->add_option("--coupling", coupling, "coupling J")->capture_default_str();
        sub->add_option("--temp", temp, "temperature T")->capture_default_str();
        if (with_rule) {
            sub->add_option("--rule", rule, "glauber | metropolis")->capture_default_str();
        }
    }

    DynamicsParams params() const
    {
        DynamicsParams p{coupling, temp, parse_update_rule(rule)};
        p.validate();
        return p;
    }

    void echo(Echo& e, bool with_rule) const
    {
        e.add("coupling", coupling);
        e.add("temp", temp);
        if (with_rule) {
            e.add("rule", to_string(parse_update_rule(rule)));
        }
    }
};

void add_seed(CLI::App* sub, std::uint64_t& seed)
{
    sub->add_option("--seed", seed, "master seed")->envname("IDTNET_SEED")->capture_default_str();
}

// ---- gen -------------------------------------------------------------------

struct GenOptions {
    NetworkOptions net;
    std::uint64_t seed = 0;
    std::string out;
};

void run_gen(const GenOptions& o)
{
    const Graph g = o.net.generate(o.seed, 0);
    Echo e("gen");
    o.net.echo(e);
    e.add("seed", o.seed);
    std::ostringstream body;
    io::write_graph(body, g, e.lines());
    emit(o.out, body);
}

// ---- analytic --------------------------------------------------------------

struct AnalyticOptions {
    NetworkOptions net;
    DynamicsOptions dyn;
    std::string graph;
    double eps = 1e-3;
    double c_eff = 1.0;
    int k_from = 1;
    int k_to = 0;
    std::string branch = "auto";
    std::string out;
};

DegreeDistribution distribution_of(const Graph& g)
{
    std::map<int, double> counts;
    for (std::size_t d : g.degrees()) {
        if (d > 0) {
            counts[static_cast<int>(d)] += 1.0;
        }
    }
    std::vector<DegreeMass> w;
    for (const auto& [k, c] : counts) {
        w.push_back({k, c});
    }
    if (w.empty()) {
        throw InputError("graph has no edges");
    }
    return DegreeDistribution(std::move(w));
}

void run_analytic(const AnalyticOptions& o)
{
    Echo e("analytic");
    std::optional<DegreeDistribution> dist;
    if (!o.graph.empty()) {
        dist = distribution_of(io::read_graph_file(o.graph));
        e.add("graph", o.graph);
    } else {
        dist = o.net.distribution();
        o.net.echo(e);
    }
    const DynamicsParams params = o.dyn.params();
    o.dyn.echo(e, false);
    analytic::CurveOptions copt;
    copt.eps = o.eps;
    copt.c_eff = o.c_eff;
    copt.k_from = o.k_from;
    copt.k_to = o.k_to > 0 ? o.k_to : dist->max_k();
    copt.branch = analytic::parse_branch(o.branch);
    e.add("eps", o.eps);
    e.add("c-eff", o.c_eff);
    e.add("k-from", copt.k_from);
    e.add("k-to", copt.k_to);
    e.add("branch", analytic::to_string(copt.branch));

    const auto curve = analytic::analytic_curve(*dist, params, copt);
    std::ostringstream body;
    io::write_analytic_curve(body, curve, e.lines());
    emit(o.out, body);
}

// ---- idt -------------------------------------------------------------------

struct IdtOptions {
    NetworkOptions net;
    DynamicsOptions dyn{1.0, 2.0, "metropolis"};
    std::string graph;
    std::string step = "sweep";
    double eps = 1e-3;
    std::size_t traj = 5000;
    std::size_t lag = 100;
    std::size_t equil = 1000;
    std::size_t marginal_sweeps = 10'000;
    std::size_t realizations = 1;
    unsigned workers = 1;
    std::uint64_t seed = 0;
    std::string out;
    std::string per_unit;
    std::string dump;
};

void run_idt(const IdtOptions& o)
{
    if (o.realizations < 1) {
        throw std::invalid_argument("--realizations must be at least 1");
    }
    Echo e("idt");
    std::optional<Graph> fixed;
    if (!o.graph.empty()) {
        fixed = io::read_graph_file(o.graph);
        e.add("graph", o.graph);
    } else {
        o.net.echo(e);
    }
    const DynamicsParams params = o.dyn.params();
    o.dyn.echo(e, true);

    empirical::EnsembleConfig cfg;
    cfg.trajectories = o.traj;
    cfg.max_lag = o.lag;
    cfg.eps = o.eps;
    cfg.equilibration_sweeps = o.equil;
    cfg.marginal_sweeps = o.marginal_sweeps;
    cfg.step = parse_step_unit(o.step);
    cfg.workers = std::max(1U, o.workers);
    cfg.validate();
    e.add("step", to_string(cfg.step));
    e.add("eps", o.eps);
    e.add("traj", o.traj);
    e.add("lag", o.lag);
    e.add("equil", o.equil);
    e.add("marginal-sweeps", o.marginal_sweeps);
    e.add("realizations", o.realizations);
    e.add("seed", o.seed);

    const std::vector<std::string> meta{"noise_floor=" + fmt(empirical::noise_floor(o.traj))};
    std::vector<empirical::FitResult> pooled_fits;
    std::vector<std::size_t> pooled_degrees;
    for (std::size_t r = 0; r < o.realizations; ++r) {
        const Graph g = fixed ? *fixed : o.net.generate(o.seed, r);
        cfg.seed = derive_seed(o.seed, "realization", r);
        const auto res = empirical::run_realization(g, params, cfg);
        pooled_fits.insert(pooled_fits.end(), res.fits.begin(), res.fits.end());
        pooled_degrees.insert(pooled_degrees.end(), res.degrees.begin(), res.degrees.end());

        const std::vector<std::string> tag{"realization=" + std::to_string(r)};
        if (o.realizations > 1) {
            std::ostringstream body;
            io::write_empirical_curve(body, res.curve, with(with(e.lines(), meta), tag));
            emit(realization_path(o.out, r), body);
        }
        if (!o.per_unit.empty()) {
            std::ostringstream body;
            io::write_per_unit(body, res.fits, res.degrees, with(e.lines(), tag));
            emit(o.realizations > 1 ? realization_path(o.per_unit, r) : fs::path(o.per_unit), body);
        }
        if (r == 0 && !o.dump.empty()) {
            const auto states = empirical::replay_trajectory(g, params, cfg, res.histograms.reference(), 0);
            std::ostringstream body;
            io::write_comments(body, with(e.lines(), {"realization=0", "trajectory=0"}));
            body << "t,unit,state\n";
            for (std::size_t t = 0; t < states.size(); ++t) {
                for (std::size_t u = 0; u < states[t].size(); ++u) {
                    body << t << ',' << u << ',' << static_cast<int>(states[t][u]) << '\n';
                }
            }
            emit(o.dump, body);
        }
    }
    const auto pooled = empirical::aggregate_by_degree(pooled_fits, pooled_degrees);
    std::ostringstream body;
    io::write_empirical_curve(body, pooled, with(e.lines(), meta));
    emit(o.out, body);
}

// ---- oracle ----------------------------------------------------------------

struct OracleOptions {
    DynamicsOptions dyn;
    std::string graph;
    std::size_t star = 0;
    std::size_t path = 0;
    std::string step = "sweep";
    std::size_t lag = 20;
    std::string out;
};

void run_oracle(const OracleOptions& o)
{
    Echo e("oracle");
    const int sources = (o.graph.empty() ? 0 : 1) + (o.star > 0 ? 1 : 0) + (o.path > 0 ? 1 : 0);
    if (sources != 1) {
        throw UsageError("oracle needs exactly one of --graph, --star, --path");
    }
    Graph g = !o.graph.empty() ? io::read_graph_file(o.graph) : o.star > 0 ? Graph::star(o.star) : Graph::path(o.path);
    if (!o.graph.empty()) {
        e.add("graph", o.graph);
    } else if (o.star > 0) {
        e.add("star", o.star);
    } else {
        e.add("path", o.path);
    }
    const DynamicsParams params = o.dyn.params();
    o.dyn.echo(e, true);
    const StepUnit unit = parse_step_unit(o.step);
    e.add("step", to_string(unit));
    e.add("lag", o.lag);

    const auto kernel = exact::build_kernel(g, params);
    const auto pi = exact::stationary_distribution(kernel);
    const std::size_t stride = unit == StepUnit::sweep ? g.node_count() : 1;
    std::vector<std::size_t> lags(o.lag + 1);
    for (std::size_t d = 0; d <= o.lag; ++d) {
        lags[d] = d * stride;
    }
    std::vector<io::OracleRow> rows((o.lag + 1) * g.node_count());
    for (std::size_t u = 0; u < g.node_count(); ++u) {
        const auto series = exact::lagged_unit_mi_series(kernel, pi, u, lags);
        for (std::size_t d = 0; d <= o.lag; ++d) {
            rows[d * g.node_count() + u] = {d, u, series[d]};
        }
    }
    std::ostringstream body;
    io::write_oracle(body, rows, e.lines());
    emit(o.out, body);
}

// ---- trend -----------------------------------------------------------------

struct TrendOptions {
    std::string in;
    std::string x_col;
    std::string y_col;
    double sigma = 10.0;
    double fit_from = -std::numeric_limits<double>::infinity();
    double fit_to = std::numeric_limits<double>::infinity();
    std::string out;
};

void run_trend(const TrendOptions& o)
{
    const io::Table t = io::read_table_file(o.in);
    std::string xc = o.x_col;
    std::string yc = o.y_col;
    if (xc.empty()) {
        xc = t.has_column("x") ? "x" : "k";
    }
    if (yc.empty()) {
        for (const char* c : {"y", "y_raw", "d_steps", "mean_idt_sweeps"}) {
            if (t.has_column(c)) {
                yc = c;
                break;
            }
        }
        if (yc.empty()) {
            throw InputError("no y column found in '" + o.in + "'; pass --y-col");
        }
    }
    const std::size_t ix = t.column(xc);
    const std::size_t iy = t.column(yc);
    std::vector<trend::Point> pts;
    for (const auto& row : t.rows) {
        pts.push_back({io::parse_double(row[ix]), io::parse_double(row[iy])});
    }
    trend::XYSeries raw;
    try {
        raw = trend::XYSeries(std::move(pts));
    } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
    }
    if (raw.empty()) {
        throw InputError("'" + o.in + "' has no rows");
    }
    const double from = std::isfinite(o.fit_from) ? o.fit_from : raw.points().front().x;
    const double to = std::isfinite(o.fit_to) ? o.fit_to : raw.points().back().x;
    const auto smooth = trend::gaussian_smooth(raw, o.sigma);
    const auto fit = trend::linear_fit(raw, from, to);

    Echo e("trend");
    e.add("in", o.in);
    e.add("x-col", xc);
    e.add("y-col", yc);
    e.add("sigma", o.sigma);
    e.add("fit-from", from);
    e.add("fit-to", to);
    std::ostringstream body;
    io::write_trend(body, raw, smooth, fit, from, to, e.lines());
    emit(o.out, body);
}

// ---- plot ------------------------------------------------------------------

struct PlotOptions {
    std::vector<std::string> in;
    int cols = 3;
    std::string out;
};

std::string echoed(const io::Table& t, const std::string& key)
{
    const std::string prefix = key + " = ";
    for (const auto& c : t.comments) {
        if (c.rfind(prefix, 0) == 0) {
            return c.substr(prefix.size());
        }
    }
    return {};
}

void run_plot(const PlotOptions& o)
{
    // one panel per temperature, in increasing order; files without one share a panel
    std::map<std::pair<double, std::string>, plot::Panel> panels;
    for (const auto& path : o.in) {
        const io::Table t = io::read_table_file(path);
        const std::string temp = echoed(t, "temp");
        const double order = temp.empty() ? std::numeric_limits<double>::infinity() : io::parse_double(temp);
        auto& panel = panels[{order, temp}];
        if (!temp.empty()) {
            panel.title = "T = " + temp;
        }
        plot::Series s;
        if (t.has_column("d_steps")) {
            s.label = "analytic";
            for (const auto& r : io::read_analytic_curve(t).rows) {
                s.x.push_back(r.k);
                s.y.push_back(r.d);
            }
        } else if (t.has_column("mean_idt_sweeps")) {
            s.style = plot::Series::Style::band_line;
            s.label = "empirical ±2 SEM";
            for (const auto& r : io::read_empirical_curve(t).rows) {
                s.x.push_back(r.k);
                s.y.push_back(r.mean_idt);
                s.lower.push_back(r.mean_idt - 2.0 * r.sem_idt);
                s.upper.push_back(r.mean_idt + 2.0 * r.sem_idt);
            }
        } else {
            s.label = fs::path(path).stem().string();
            const auto xy = io::read_xy(t);
            for (const auto& p : xy.points()) {
                s.x.push_back(p.x);
                s.y.push_back(p.y);
            }
        }
        panel.series.push_back(std::move(s));
    }
    std::vector<plot::Panel> ordered;
    for (auto& [key, p] : panels) {
        ordered.push_back(std::move(p));
    }
    io::write_file_atomic(o.out, plot::render_svg(ordered, o.cols));
}

} // namespace

std::vector<std::string> expand_config(const std::vector<std::string>& args)
{
    std::vector<std::string> rest;
    std::vector<std::string> from_file;
    for (std::size_t i = 0; i < args.size(); ++i) {
        std::string file;
        if (args[i] == "--config") {
            if (i + 1 == args.size()) {
                throw UsageError("--config needs a file");
            }
            file = args[++i];
        } else if (args[i].rfind("--config=", 0) == 0) {
            file = args[i].substr(9);
        } else {
            rest.push_back(args[i]);
            continue;
        }
        std::ifstream in(file);
        if (!in) {
            throw InputError("cannot open config '" + file + "'");
        }
        std::string line;
        for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') {
                continue;
            }
            const auto eq = line.find('=');
            auto trim = [](std::string s) {
                const auto a = s.find_first_not_of(" \t\r");
                const auto b = s.find_last_not_of(" \t\r");
                return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
            };
            const std::string key = eq == std::string::npos ? std::string{} : trim(line.substr(0, eq));
            if (key.empty() || key.find_first_of(" \t") != std::string::npos) {
                throw InputError(file + ":" + std::to_string(lineno) + ": expected 'key = value'");
            }
            from_file.push_back("--" + key);
            from_file.push_back(trim(line.substr(eq + 1)));
        }
    }
    if (from_file.empty() || rest.empty()) {
        return with(rest, from_file);
    }
    // subcommand first, then file settings, then explicit flags
    std::vector<std::string> out{rest.front()};
    out.insert(out.end(), from_file.begin(), from_file.end());
    out.insert(out.end(), rest.begin() + 1, rest.end());
    return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Information dissipation time on spin networks", "idtnet"};
    app.require_subcommand(1, 1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a configuration-model network");
    gen.net.add_to(gen_cmd);
    add_seed(gen_cmd, gen.seed);
    gen_cmd->add_option("--out", gen.out, "edge list CSV")->required();

    AnalyticOptions an;
    auto* an_cmd = app.add_subcommand("analytic", "analytic IDT curve D(k)");
    an.net.add_to(an_cmd);
    an.dyn.add_to(an_cmd, false);
    an_cmd->add_option("--graph", an.graph, "take the degree distribution from this edge list");
    an_cmd->add_option("--eps", an.eps, "threshold in bits")->capture_default_str();
    an_cmd->add_option("--c-eff", an.c_eff, "effective branching factor")->capture_default_str();
    an_cmd->add_option("--k-from", an.k_from, "first degree")->capture_default_str();
    an_cmd->add_option("--k-to", an.k_to, "last degree (0: kmax)")->capture_default_str();
    an_cmd->add_option("--branch", an.branch, "auto | symmetric")->capture_default_str();
    an_cmd->add_option("--out", an.out, "curve CSV")->required();

    IdtOptions idt;
    auto* idt_cmd = app.add_subcommand("idt", "empirical IDT per unit, aggregated by degree");
    idt.net.add_to(idt_cmd);
    idt.dyn.add_to(idt_cmd, true);
    idt_cmd->add_option("--graph", idt.graph, "edge list CSV (otherwise generated per realization)");
    idt_cmd->add_option("--step", idt.step, "site | sweep")->capture_default_str();
    idt_cmd->add_option("--eps", idt.eps, "threshold in bits")->capture_default_str();
    idt_cmd->add_option("--traj", idt.traj, "trajectories M")->capture_default_str();
    idt_cmd->add_option("--lag", idt.lag, "max lag L")->capture_default_str();
    idt_cmd->add_option("--equil", idt.equil, "equilibration sweeps")->capture_default_str();
    idt_cmd->add_option("--marginal-sweeps", idt.marginal_sweeps, "sweeps for stationary marginals")
        ->capture_default_str();
    idt_cmd->add_option("--realizations", idt.realizations, "independent realizations")->capture_default_str();
    idt_cmd->add_option("--workers", idt.workers, "threads; does not change results")->capture_default_str();
    add_seed(idt_cmd, idt.seed);
    idt_cmd->add_option("--out", idt.out, "pooled curve CSV")->required();
    idt_cmd->add_option("--per-unit", idt.per_unit, "per-unit fits CSV");
    idt_cmd->add_option("--dump", idt.dump, "trajectory 0 as t,unit,state");

    OracleOptions orc;
    auto* orc_cmd = app.add_subcommand("oracle", "exact lagged mutual information for small graphs");
    orc.dyn.add_to(orc_cmd, true);
    orc_cmd->add_option("--graph", orc.graph, "edge list CSV");
    orc_cmd->add_option("--star", orc.star, "star with this many leaves");
    orc_cmd->add_option("--path", orc.path, "path with this many units");
    orc_cmd->add_option("--step", orc.step, "site | sweep")->capture_default_str();
    orc_cmd->add_option("--lag", orc.lag, "max lag")->capture_default_str();
    orc_cmd->add_option("--out", orc.out, "lag,unit,mi_bits CSV")->required();

    TrendOptions tr;
    auto* tr_cmd = app.add_subcommand("trend", "Gaussian smoothing and linear fit of a curve");
    tr_cmd->add_option("--in", tr.in, "input CSV")->required();
    tr_cmd->add_option("--x-col", tr.x_col, "x column (default x or k)");
    tr_cmd->add_option("--y-col", tr.y_col, "y column (default y, d_steps or mean_idt_sweeps)");
    tr_cmd->add_option("--sigma", tr.sigma, "kernel width in points")->capture_default_str();
    tr_cmd->add_option("--fit-from", tr.fit_from, "fit window start");
    tr_cmd->add_option("--fit-to", tr.fit_to, "fit window end");
    tr_cmd->add_option("--out", tr.out, "trend CSV")->required();

    PlotOptions pl;
    auto* pl_cmd = app.add_subcommand("plot", "SVG chart of curve CSVs, one panel per temperature");
    pl_cmd->add_option("--in", pl.in, "curve CSVs")->required()->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    pl_cmd->add_option("--cols", pl.cols, "panels per row")->capture_default_str();
    pl_cmd->add_option("--out", pl.out, "SVG file")->required();

    try {
        std::vector<std::string> argv = expand_config(args);
        std::reverse(argv.begin(), argv.end());
        try {
            app.parse(argv);
        } catch (const CLI::CallForHelp& e) {
            app.exit(e, out, err);
            return exit_ok;
        } catch (const CLI::CallForAllHelp& e) {
            app.exit(e, out, err);
            return exit_ok;
        }
        if (gen_cmd->parsed()) {
            run_gen(gen);
        } else if (an_cmd->parsed()) {
            run_analytic(an);
        } else if (idt_cmd->parsed()) {
            run_idt(idt);
        } else if (orc_cmd->parsed()) {
            run_oracle(orc);
        } else if (tr_cmd->parsed()) {
            run_trend(tr);
        } else {
            run_plot(pl);
        }
        return exit_ok;
    } catch (const CLI::ConversionError& e) {
        err << "idtnet: invalid value: " << e.what() << '\n';
        return exit_numeric;
    } catch (const CLI::ValidationError& e) {
        err << "idtnet: invalid value: " << e.what() << '\n';
        return exit_numeric;
    } catch (const CLI::ParseError& e) {
        err << "idtnet: " << e.what() << '\n';
        return exit_usage;
    } catch (const UsageError& e) {
        err << "idtnet: " << e.what() << '\n';
        return exit_usage;
    } catch (const InputError& e) {
        err << "idtnet: " << e.what() << '\n';
        return exit_input;
    } catch (const fs::filesystem_error& e) {
        err << "idtnet: " << e.what() << '\n';
        return exit_input;
    } catch (const std::exception& e) {
        err << "idtnet: " << e.what() << '\n';
        return exit_numeric;
    }
}

} // namespace idtnet::cli
