#include "idtnet/idt_empirical.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace idtnet::empirical {

void EnsembleConfig::validate() const
{
    if (trajectories < 100) {
        throw std::invalid_argument("ensemble needs at least 100 trajectories");
    }
    if (max_lag < 10) {
        throw std::invalid_argument("ensemble needs a max lag of at least 10");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("eps must be in (0, 1)");
    }
    if (equilibration_sweeps < 1 || marginal_sweeps < 1) {
        throw std::invalid_argument("equilibration and marginal runs need at least one sweep");
    }
}

LagHistograms::LagHistograms(std::size_t units, std::size_t max_lag, std::uint64_t trajectories,
                             SpinConfig reference)
    : units_(units), max_lag_(max_lag), trajectories_(trajectories), reference_(std::move(reference)),
      up_((max_lag + 1) * units, 0)
{
    if (reference_.size() != units_) {
        throw std::invalid_argument("reference state length does not match unit count");
    }
}

Dist LagHistograms::conditional(std::size_t unit, std::size_t lag) const
{
    const std::uint64_t counts[2] = {count(unit, lag, -1), count(unit, lag, +1)};
    return empirical_distribution(counts);
}

LagHistograms run_ensemble_from(const Graph& graph, const DynamicsParams& params, const EnsembleConfig& cfg,
                                const SpinConfig& reference)
{
    cfg.validate();
    const std::size_t n = graph.node_count();
    const std::size_t lags = cfg.max_lag;
    LagHistograms hist(n, lags, cfg.trajectories, reference);
    const SpinUpdater updater(graph, params);

    const unsigned workers = std::max(1U, std::min<unsigned>(cfg.workers, static_cast<unsigned>(cfg.trajectories)));
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(lags * n, 0));

    auto work = [&](unsigned w) {
        auto& tally = partial[w];
        SpinConfig config(n);
        for (std::size_t t = w; t < cfg.trajectories; t += workers) {
            Rng rng = derive_stream(cfg.seed, "trajectory", t);
            config = reference;
            for (std::size_t d = 1; d <= lags; ++d) {
                updater.step(config, cfg.step, rng);
                std::uint64_t* row = &tally[(d - 1) * n];
                for (std::size_t u = 0; u < n; ++u) {
                    row[u] += config[u] > 0 ? 1U : 0U;
                }
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }

    auto raw = hist.raw();
    for (std::size_t u = 0; u < n; ++u) {
        raw[u] = reference[u] > 0 ? cfg.trajectories : 0;
    }
    // integer sums: merge order cannot change the result
    for (const auto& tally : partial) {
        for (std::size_t i = 0; i < tally.size(); ++i) {
            raw[n + i] += tally[i];
        }
    }
    return hist;
}

std::vector<SpinConfig> replay_trajectory(const Graph& graph, const DynamicsParams& params,
                                          const EnsembleConfig& cfg, const SpinConfig& reference,
                                          std::size_t index)
{
    const SpinUpdater updater(graph, params);
    Rng rng = derive_stream(cfg.seed, "trajectory", index);
    std::vector<SpinConfig> out{reference};
    out.reserve(cfg.max_lag + 1);
    for (std::size_t d = 1; d <= cfg.max_lag; ++d) {
        out.push_back(out.back());
        updater.step(out.back(), cfg.step, rng);
    }
    return out;
}

LagHistograms run_ensemble(const Graph& graph, const DynamicsParams& params, const EnsembleConfig& cfg)
{
    cfg.validate();
    Rng rng = derive_stream(cfg.seed, "equilibrate");
    const auto eq = equilibrate(graph, params, cfg.equilibration_sweeps, rng);
    return run_ensemble_from(graph, params, cfg, eq.config);
}

std::vector<Dist> stationary_marginals(const Graph& graph, const DynamicsParams& params,
                                       const SpinConfig& start, std::size_t sweeps, std::uint64_t seed)
{
    if (sweeps < 1) {
        throw std::invalid_argument("marginal run needs at least one sweep");
    }
    const std::size_t n = graph.node_count();
    if (start.size() != n) {
        throw std::invalid_argument("start state length does not match graph size");
    }
    const SpinUpdater updater(graph, params);
    Rng rng = derive_stream(seed, "marginals");
    SpinConfig config = start;
    std::vector<double> up(n, 0.0);
    std::vector<double> down(n, 0.0);
    for (std::size_t s = 0; s < sweeps; ++s) {
        updater.sweep(config, rng);
        for (std::size_t u = 0; u < n; ++u) {
            up[u] += updater.conditional_up(config, u);
            down[u] += updater.conditional_down(config, u);
        }
    }
    std::vector<Dist> out;
    out.reserve(n);
    for (std::size_t u = 0; u < n; ++u) {
        const double total = up[u] + down[u];
        out.emplace_back(std::vector<double>{down[u] / total, up[u] / total});
    }
    return out;
}

std::vector<std::vector<double>> decay_curve(const LagHistograms& h, std::span<const Dist> marginals)
{
    if (marginals.size() != h.unit_count()) {
        throw std::invalid_argument("one marginal per unit required");
    }
    std::vector<std::vector<double>> series(h.unit_count(), std::vector<double>(h.max_lag() + 1));
    for (std::size_t u = 0; u < h.unit_count(); ++u) {
        for (std::size_t d = 0; d <= h.max_lag(); ++d) {
            series[u][d] = kl_divergence(h.conditional(u, d), marginals[u]);
        }
    }
    return series;
}

double noise_floor(std::uint64_t trajectories, std::size_t alphabet)
{
    if (trajectories == 0 || alphabet < 2) {
        throw std::invalid_argument("noise floor needs M >= 1 and an alphabet of at least 2");
    }
    return 5.0 * static_cast<double>(alphabet - 1) / (2.0 * static_cast<double>(trajectories) * std::numbers::ln2);
}

FitResult fit_idt(std::span<const double> series, double eps, const FitConfig& cfg)
{
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("eps must be in (0, 1)");
    }
    FitResult fit;
    if (!series.empty() && series[0] <= eps) {
        // never above eps: the crossing is at lag 0, no regression needed
        return fit;
    }
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t d = cfg.first_lag; d < series.size(); ++d) {
        if (series[d] < 0.0) {
            throw std::invalid_argument("decay series must be non-negative");
        }
        if (!(series[d] > cfg.noise_floor) || !(series[d] > 0.0)) {
            break;
        }
        const double x = static_cast<double>(d);
        const double y = std::log2(series[d]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++fit.points;
    }
    if (fit.points < std::max<std::size_t>(cfg.min_points, 2)) {
        fit.censoring = Censoring::too_few_points;
        return fit;
    }
    const double n = static_cast<double>(fit.points);
    const double mean_x = sx / n;
    const double mean_y = sy / n;
    const double cov = sxy / n - mean_x * mean_y;
    const double var = sxx / n - mean_x * mean_x;
    fit.slope = cov / var;
    fit.intercept = mean_y - fit.slope * mean_x;
    if (!(fit.slope < 0.0)) {
        fit.censoring = Censoring::no_decay;
        return fit;
    }
    fit.idt = std::max(0.0, (std::log2(eps) - fit.intercept) / fit.slope);
    return fit;
}

EmpiricalCurve aggregate_by_degree(std::span<const FitResult> fits, std::span<const std::size_t> degrees)
{
    if (fits.size() != degrees.size()) {
        throw std::invalid_argument("one degree per fit required");
    }
    struct Acc {
        std::vector<double> values;
        std::size_t censored = 0;
    };
    std::map<std::size_t, Acc> by_degree;
    EmpiricalCurve curve;
    for (std::size_t i = 0; i < fits.size(); ++i) {
        auto& acc = by_degree[degrees[i]];
        if (fits[i].censored()) {
            ++acc.censored;
            ++curve.censored_count;
        } else {
            acc.values.push_back(fits[i].idt);
        }
    }
    for (const auto& [k, acc] : by_degree) {
        if (acc.values.empty()) {
            continue;
        }
        CurveRow row;
        row.k = static_cast<int>(k);
        row.n_units = acc.values.size();
        row.censored = acc.censored;
        double sum = 0.0;
        for (double v : acc.values) {
            sum += v;
        }
        row.mean_idt = sum / static_cast<double>(row.n_units);
        if (row.n_units > 1) {
            double ss = 0.0;
            for (double v : acc.values) {
                ss += (v - row.mean_idt) * (v - row.mean_idt);
            }
            const double sd = std::sqrt(ss / static_cast<double>(row.n_units - 1));
            row.sem_idt = sd / std::sqrt(static_cast<double>(row.n_units));
        } else {
            row.low_n = true;
        }
        curve.rows.push_back(row);
    }
    return curve;
}

RealizationResult run_realization(const Graph& graph, const DynamicsParams& params, const EnsembleConfig& cfg)
{
    LagHistograms hist = run_ensemble(graph, params, cfg);
    std::vector<Dist> marginals = stationary_marginals(graph, params, hist.reference(), cfg.marginal_sweeps, cfg.seed);
    const auto series = decay_curve(hist, marginals);
    const FitConfig fit_cfg{noise_floor(cfg.trajectories), 1, 5};
    std::vector<FitResult> fits;
    fits.reserve(series.size());
    for (const auto& s : series) {
        fits.push_back(fit_idt(s, cfg.eps, fit_cfg));
    }
    std::vector<std::size_t> degrees = graph.degrees();
    EmpiricalCurve curve = aggregate_by_degree(fits, degrees);
    return {std::move(hist), std::move(marginals), std::move(fits), std::move(degrees), std::move(curve)};
}

} // namespace idtnet::empirical
