#include "idtnet/spin_dynamics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace idtnet {

UpdateRule parse_update_rule(std::string_view s)
{
    if (s == "glauber") {
        return UpdateRule::glauber;
    }
    if (s == "metropolis") {
        return UpdateRule::metropolis;
    }
    throw std::invalid_argument("unknown update rule '" + std::string(s) + "'");
}

std::string_view to_string(UpdateRule r)
{
    return r == UpdateRule::glauber ? "glauber" : "metropolis";
}

StepUnit parse_step_unit(std::string_view s)
{
    if (s == "site") {
        return StepUnit::site;
    }
    if (s == "sweep") {
        return StepUnit::sweep;
    }
    throw std::invalid_argument("unknown step unit '" + std::string(s) + "'");
}

std::string_view to_string(StepUnit u)
{
    return u == StepUnit::site ? "site" : "sweep";
}

void DynamicsParams::validate() const
{
    if (!(coupling > 0.0) || !std::isfinite(coupling)) {
        throw std::invalid_argument("coupling J must be finite and > 0");
    }
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("temperature T must be > 0");
    }
}

double glauber_up_probability(int neighbor_sum, const DynamicsParams& params)
{
    return 1.0 / (1.0 + std::exp(-2.0 * params.coupling * neighbor_sum / params.temperature));
}

double metropolis_flip_probability(double delta_e, const DynamicsParams& params)
{
    if (delta_e <= 0.0) {
        return 1.0;
    }
    return std::exp(-delta_e / params.temperature);
}

double flip_probability(Spin current, int neighbor_sum, const DynamicsParams& params)
{
    if (params.rule == UpdateRule::glauber) {
        // probability of landing on the opposite state
        return glauber_up_probability(current > 0 ? -neighbor_sum : neighbor_sum, params);
    }
    const double delta_e = 2.0 * params.coupling * current * neighbor_sum;
    return metropolis_flip_probability(delta_e, params);
}

SpinUpdater::SpinUpdater(const Graph& graph, const DynamicsParams& params)
    : graph_(&graph), params_(params)
{
    params_.validate();
    offset_ = static_cast<int>(graph.max_degree());
    const std::size_t width = static_cast<std::size_t>(2 * offset_ + 1);
    flip_table_.resize(width * 2);
    up_table_.resize(width);
    down_table_.resize(width);
    for (int sum = -offset_; sum <= offset_; ++sum) {
        const auto idx = static_cast<std::size_t>(sum + offset_);
        flip_table_[idx * 2 + 0] = flip_probability(-1, sum, params_);
        flip_table_[idx * 2 + 1] = flip_probability(+1, sum, params_);
        up_table_[idx] = glauber_up_probability(sum, params_);
        down_table_[idx] = glauber_up_probability(-sum, params_);
    }
}

SpinConfig sweep(SpinConfig config, const Graph& graph, const DynamicsParams& params, Rng& rng)
{
    if (config.size() != graph.node_count()) {
        throw std::invalid_argument("configuration length does not match graph size");
    }
    SpinUpdater(graph, params).sweep(config, rng);
    return config;
}

SpinConfig random_config(std::size_t n, Rng& rng)
{
    SpinConfig c(n);
    for (auto& s : c) {
        s = (rng.bits() >> 63) ? Spin{1} : Spin{-1};
    }
    return c;
}

double magnetization(std::span<const Spin> config)
{
    if (config.empty()) {
        return 0.0;
    }
    long long total = 0;
    for (Spin s : config) {
        total += s;
    }
    return static_cast<double>(total) / static_cast<double>(config.size());
}

EquilibrationResult equilibrate(const Graph& graph, const DynamicsParams& params, std::size_t sweeps,
                                Rng& rng)
{
    if (sweeps < 1) {
        throw std::invalid_argument("equilibration needs at least one sweep");
    }
    const SpinUpdater updater(graph, params);
    EquilibrationResult out;
    out.config = random_config(graph.node_count(), rng);
    out.magnetization_trace.reserve(sweeps);
    for (std::size_t s = 0; s < sweeps; ++s) {
        updater.sweep(out.config, rng);
        out.magnetization_trace.push_back(magnetization(out.config));
    }
    return out;
}

} // namespace idtnet
