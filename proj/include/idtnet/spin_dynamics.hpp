#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "idtnet/graph.hpp"
#include "idtnet/rng.hpp"

namespace idtnet {

enum class UpdateRule { glauber, metropolis };

/// Granularity of one time step: a single random-site update, or a sweep of
/// n of them.
enum class StepUnit { site, sweep };

UpdateRule parse_update_rule(std::string_view s);
std::string_view to_string(UpdateRule r);
StepUnit parse_step_unit(std::string_view s);
std::string_view to_string(StepUnit u);

/// Ising coupling and heat-bath temperature. The pair energy is
/// e(r | s_j) = -J r s_j. T may be +infinity.
struct DynamicsParams {
    double coupling = 1.0;
    double temperature = 2.0;
    UpdateRule rule = UpdateRule::glauber;

    /// Throws std::invalid_argument unless J > 0 and T > 0.
    void validate() const;
};

using Spin = std::int8_t;

/// States in {-1, +1}, one per node.
using SpinConfig = std::vector<Spin>;

/// Heat-bath probability of adopting +1 given the neighbour sum:
/// 1 / (1 + exp(-2 J sum / T)).
double glauber_up_probability(int neighbor_sum, const DynamicsParams& params);

/// min(1, exp(-delta_e / T)).
double metropolis_flip_probability(double delta_e, const DynamicsParams& params);

/// Probability that site i flips away from `current` under the selected rule.
double flip_probability(Spin current, int neighbor_sum, const DynamicsParams& params);

/// Single-site update kernel with per-sum tables precomputed for a graph.
/// Copyable and cheap to share across threads (read-only after construction).
class SpinUpdater {
public:
    SpinUpdater(const Graph& graph, const DynamicsParams& params);

    const Graph& graph() const { return *graph_; }
    const DynamicsParams& params() const { return params_; }

    int neighbor_sum(std::span<const Spin> config, std::size_t site) const
    {
        int sum = 0;
        for (NodeId j : graph_->neighbors(site)) {
            sum += config[j];
        }
        return sum;
    }

    /// Update one given site in place.
    void update_site(std::span<Spin> config, std::size_t site, Rng& rng) const
    {
        const int sum = neighbor_sum(config, site);
        const int current_up = config[site] > 0 ? 1 : 0;
        const double p = flip_table_[static_cast<std::size_t>((sum + offset_) * 2 + current_up)];
        if (p >= 1.0 || (p > 0.0 && rng.uniform() < p)) {
            config[site] = static_cast<Spin>(-config[site]);
        }
    }

    /// One update at a uniformly chosen site.
    void random_site_update(std::span<Spin> config, Rng& rng) const
    {
        update_site(config, rng.index(config.size()), rng);
    }

    /// n random-site updates.
    void sweep(std::span<Spin> config, Rng& rng) const
    {
        const std::size_t n = config.size();
        for (std::size_t u = 0; u < n; ++u) {
            random_site_update(config, rng);
        }
    }

    void step(std::span<Spin> config, StepUnit unit, Rng& rng) const
    {
        if (unit == StepUnit::sweep) {
            sweep(config, rng);
        } else {
            random_site_update(config, rng);
        }
    }

    /// Stationary conditional P(s_i = +1 | neighbours), the heat-bath value.
    /// Both rules are reversible w.r.t. the same Gibbs measure, so this holds
    /// for Metropolis as well.
    double conditional_up(std::span<const Spin> config, std::size_t site) const
    {
        return up_table_[static_cast<std::size_t>(neighbor_sum(config, site) + offset_)];
    }
    double conditional_down(std::span<const Spin> config, std::size_t site) const
    {
        return down_table_[static_cast<std::size_t>(neighbor_sum(config, site) + offset_)];
    }

private:
    const Graph* graph_;
    DynamicsParams params_;
    int offset_ = 0;
    std::vector<double> flip_table_; // [(sum + offset) * 2 + (current == +1)]
    std::vector<double> up_table_;
    std::vector<double> down_table_;
};

/// Returns the updated copy after n random-site updates.
SpinConfig sweep(SpinConfig config, const Graph& graph, const DynamicsParams& params, Rng& rng);

SpinConfig random_config(std::size_t n, Rng& rng);

double magnetization(std::span<const Spin> config);

struct EquilibrationResult {
    SpinConfig config;
    std::vector<double> magnetization_trace; // one entry per sweep
};

/// Uniformly random start followed by `sweeps` sweeps (sweeps >= 1).
EquilibrationResult equilibrate(const Graph& graph, const DynamicsParams& params, std::size_t sweeps,
                                Rng& rng);

} // namespace idtnet
