#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "idtnet/graph.hpp"
#include "idtnet/infotheory.hpp"
#include "idtnet/spin_dynamics.hpp"

// Trajectory-ensemble estimate of each unit's information dissipation time.
//
// One equilibrated reference state sigma is fixed; M trajectories start from
// sigma and every unit's state is tallied at every lag. Because both update
// rules satisfy detailed balance, forward trajectories out of sigma have the
// law of time-reversed trajectories leading into sigma, so the lag-d tallies
// estimate p(s_u at distance d | S = sigma). The information sigma carries
// about s_u at distance d is then KL(p(. | sigma) || p_u).
namespace idtnet::empirical {

struct EnsembleConfig {
    std::size_t trajectories = 5000;  // M
    std::size_t max_lag = 100;        // L, in units of `step`
    double eps = 1e-3;                // crossing threshold, bits
    std::uint64_t seed = 0;
    std::size_t equilibration_sweeps = 1000;
    std::size_t marginal_sweeps = 10'000;
    StepUnit step = StepUnit::sweep;
    unsigned workers = 1; // scheduling hint only; results do not depend on it

    /// M >= 100, L >= 10, 0 < eps < 1, sweeps >= 1.
    void validate() const;
};

/// counts[unit][lag][state] stored as +1 tallies; the -1 tally is M minus that.
class LagHistograms {
public:
    LagHistograms(std::size_t units, std::size_t max_lag, std::uint64_t trajectories, SpinConfig reference);

    std::size_t unit_count() const { return units_; }
    std::size_t max_lag() const { return max_lag_; }
    std::uint64_t trajectories() const { return trajectories_; }
    const SpinConfig& reference() const { return reference_; }

    std::uint64_t up_count(std::size_t unit, std::size_t lag) const { return up_[lag * units_ + unit]; }
    std::uint64_t count(std::size_t unit, std::size_t lag, Spin state) const
    {
        const auto up = up_count(unit, lag);
        return state > 0 ? up : trajectories_ - up;
    }

    /// Plug-in p(s_unit at lag) as {P(-1), P(+1)}.
    Dist conditional(std::size_t unit, std::size_t lag) const;

    /// Raw +1 tallies in [lag][unit] order.
    std::span<std::uint64_t> raw() { return up_; }
    std::span<const std::uint64_t> raw() const { return up_; }

private:
    std::size_t units_;
    std::size_t max_lag_;
    std::uint64_t trajectories_;
    SpinConfig reference_;
    std::vector<std::uint64_t> up_;
};

/// Equilibrates once from a random start (stream "equilibrate"), fixes the
/// reference state and tallies M trajectories of L steps out of it. Trajectory
/// i draws from stream ("trajectory", i), so the tallies are identical for any
/// worker count.
LagHistograms run_ensemble(const Graph& graph, const DynamicsParams& params, const EnsembleConfig& cfg);

/// Tallies M trajectories out of a given reference state.
LagHistograms run_ensemble_from(const Graph& graph, const DynamicsParams& params, const EnsembleConfig& cfg,
                                const SpinConfig& reference);

/// Replays trajectory `index` of the ensemble: states at lags 0..L.
std::vector<SpinConfig> replay_trajectory(const Graph& graph, const DynamicsParams& params,
                                          const EnsembleConfig& cfg, const SpinConfig& reference,
                                          std::size_t index);

/// Per-unit stationary marginals from an auxiliary run of `sweeps` sweeps
/// continuing from `start` (stream "marginals"). Each sweep contributes the
/// Gibbs conditional P(s_u | neighbours) rather than the raw 0/1 state, which
/// keeps every estimate strictly positive for T > 0.
std::vector<Dist> stationary_marginals(const Graph& graph, const DynamicsParams& params,
                                       const SpinConfig& start, std::size_t sweeps, std::uint64_t seed);

/// i_u(d) = KL(p-hat(s_u at lag d | sigma) || p_u), indexed [unit][lag].
/// Throws SupportError if a marginal has a zero where the conditional has mass.
std::vector<std::vector<double>> decay_curve(const LagHistograms& h, std::span<const Dist> marginals);

/// Plug-in KL bias scale 5 (|alphabet| - 1) / (2 M ln 2).
double noise_floor(std::uint64_t trajectories, std::size_t alphabet = 2);

struct FitConfig {
    double noise_floor = 0.0;
    std::size_t first_lag = 1;
    std::size_t min_points = 5;
};

enum class Censoring { none, too_few_points, no_decay };

struct FitResult {
    double idt = 0.0; // in lag units; meaningful only when not censored
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t points = 0;
    Censoring censoring = Censoring::none;

    bool censored() const { return censoring != Censoring::none; }
};

/// Least squares of log2 i(d) = a d + b over lags first_lag.. up to the first
/// lag whose value is at or below the noise floor; D = (log2 eps - b) / a,
/// floored at 0. Censored with fewer than min_points usable lags or a >= 0.
/// A series that starts at or below eps (series[0] <= eps) has D = 0 with no
/// fit and is not censored.
FitResult fit_idt(std::span<const double> series, double eps, const FitConfig& cfg);

struct CurveRow {
    int k = 0;
    std::size_t n_units = 0;  // uncensored units contributing to the mean
    double mean_idt = 0.0;
    double sem_idt = 0.0;     // sample stddev / sqrt(n); 0 for a single unit
    std::size_t censored = 0;
    bool low_n = false;       // n_units == 1
};

struct EmpiricalCurve {
    std::vector<CurveRow> rows; // ascending k, only degrees with n_units > 0
    std::size_t censored_count = 0; // all censored units, emitted rows or not
};

EmpiricalCurve aggregate_by_degree(std::span<const FitResult> fits, std::span<const std::size_t> degrees);

struct RealizationResult {
    LagHistograms histograms;
    std::vector<Dist> marginals;
    std::vector<FitResult> fits;
    std::vector<std::size_t> degrees;
    EmpiricalCurve curve;
};

/// run_ensemble + stationary_marginals + decay_curve + fit_idt +
/// aggregate_by_degree for one graph.
RealizationResult run_realization(const Graph& graph, const DynamicsParams& params, const EnsembleConfig& cfg);

} // namespace idtnet::empirical
