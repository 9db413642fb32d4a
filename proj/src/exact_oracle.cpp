#include "idtnet/exact_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace idtnet::exact {

StateIndex encode(std::span<const Spin> config)
{
    StateIndex x = 0;
    for (std::size_t i = 0; i < config.size(); ++i) {
        if (config[i] > 0) {
            x |= StateIndex{1} << i;
        }
    }
    return x;
}

SpinConfig decode(StateIndex x, std::size_t n)
{
    SpinConfig c(n);
    for (std::size_t i = 0; i < n; ++i) {
        c[i] = unit_state(x, i);
    }
    return c;
}

Kernel::Kernel(std::size_t n, std::vector<double> flips) : n_(n), flips_(std::move(flips))
{
    if (n_ == 0 || n_ > kMaxUnits) {
        throw std::invalid_argument("exact kernel supports 1.." + std::to_string(kMaxUnits) + " units");
    }
    if (flips_.size() != state_count() * n_) {
        throw std::invalid_argument("flip table size mismatch");
    }
}

double Kernel::entry(StateIndex x, StateIndex y) const
{
    const double inv_n = 1.0 / static_cast<double>(n_);
    if (x == y) {
        double stay = 1.0;
        for (std::size_t i = 0; i < n_; ++i) {
            stay -= flip(x, i) * inv_n;
        }
        return stay;
    }
    const StateIndex diff = x ^ y;
    if ((diff & (diff - 1)) != 0) {
        return 0.0;
    }
    const auto site = static_cast<std::size_t>(std::countr_zero(diff));
    return flip(x, site) * inv_n;
}

void Kernel::apply(std::span<const double> in, std::span<double> out) const
{
    const std::size_t dim = state_count();
    const double inv_n = 1.0 / static_cast<double>(n_);
    for (StateIndex y = 0; y < dim; ++y) {
        double leave = 0.0;
        double arrive = 0.0;
        const double* fy = &flips_[y * n_];
        for (std::size_t i = 0; i < n_; ++i) {
            leave += fy[i];
            const StateIndex x = y ^ (StateIndex{1} << i);
            arrive += in[x] * flips_[x * n_ + i];
        }
        out[y] = in[y] * (1.0 - leave * inv_n) + arrive * inv_n;
    }
}

std::vector<double> Kernel::apply(std::span<const double> in) const
{
    std::vector<double> out(state_count());
    apply(in, out);
    return out;
}

std::vector<double> Kernel::dense() const
{
    const std::size_t dim = state_count();
    std::vector<double> m(dim * dim, 0.0);
    for (StateIndex x = 0; x < dim; ++x) {
        for (StateIndex y = 0; y < dim; ++y) {
            m[x * dim + y] = entry(x, y);
        }
    }
    return m;
}

Kernel build_kernel(const Graph& graph, const DynamicsParams& params)
{
    params.validate();
    const std::size_t n = graph.node_count();
    if (n == 0 || n > kMaxUnits) {
        throw std::invalid_argument("exact kernel needs 1 <= n <= " + std::to_string(kMaxUnits) +
                                    ", got n = " + std::to_string(n));
    }
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> flips(dim * n);
    for (StateIndex x = 0; x < dim; ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            int sum = 0;
            for (NodeId j : graph.neighbors(i)) {
                sum += unit_state(x, j);
            }
            flips[x * n + i] = flip_probability(unit_state(x, i), sum, params);
        }
    }
    return Kernel(n, std::move(flips));
}

std::vector<double> boltzmann_distribution(const Graph& graph, const DynamicsParams& params)
{
    params.validate();
    const std::size_t n = graph.node_count();
    if (n == 0 || n > kMaxUnits) {
        throw std::invalid_argument("boltzmann distribution limited to n <= " + std::to_string(kMaxUnits));
    }
    const auto edges = graph.edges();
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> log_w(dim);
    for (StateIndex x = 0; x < dim; ++x) {
        int bond_sum = 0;
        for (const auto& [u, v] : edges) {
            bond_sum += unit_state(x, u) * unit_state(x, v);
        }
        log_w[x] = params.coupling * bond_sum / params.temperature;
    }
    const double top = *std::max_element(log_w.begin(), log_w.end());
    double z = 0.0;
    for (auto& w : log_w) {
        w = std::exp(w - top);
        z += w;
    }
    for (auto& w : log_w) {
        w /= z;
    }
    return log_w;
}

Dist stationary_distribution(const Kernel& kernel, StationaryOptions opts)
{
    const std::size_t dim = kernel.state_count();
    std::vector<double> pi(dim, 1.0 / static_cast<double>(dim));
    std::vector<double> next(dim);
    for (std::size_t it = 0; it < opts.max_iterations; ++it) {
        kernel.apply(pi, next);
        double residual = 0.0;
        double total = 0.0;
        for (std::size_t x = 0; x < dim; ++x) {
            residual += std::abs(next[x] - pi[x]);
            next[x] = 0.5 * (next[x] + pi[x]);
            total += next[x];
        }
        if (residual < opts.tolerance) {
            double s = 0.0;
            for (double p : pi) {
                s += p;
            }
            for (auto& p : pi) {
                p /= s;
            }
            return Dist(std::move(pi));
        }
        for (std::size_t x = 0; x < dim; ++x) {
            pi[x] = next[x] / total;
        }
    }
    throw ConvergenceError("stationary distribution did not converge in " +
                           std::to_string(opts.max_iterations) + " iterations");
}

double detailed_balance_residual(const Kernel& kernel, std::span<const double> pi)
{
    double worst = 0.0;
    for (StateIndex x = 0; x < kernel.state_count(); ++x) {
        for (std::size_t i = 0; i < kernel.unit_count(); ++i) {
            const StateIndex y = x ^ (StateIndex{1} << i);
            worst = std::max(worst, std::abs(pi[x] * kernel.entry(x, y) - pi[y] * kernel.entry(y, x)));
        }
    }
    return worst;
}

namespace {

/// MI between the reference bit (two rows) and the configuration columns.
double two_row_mi(std::span<const double> down, std::span<const double> up)
{
    double p_down = 0.0;
    double p_up = 0.0;
    for (std::size_t y = 0; y < down.size(); ++y) {
        p_down += down[y];
        p_up += up[y];
    }
    double mi = 0.0;
    for (std::size_t y = 0; y < down.size(); ++y) {
        const double col = down[y] + up[y];
        if (down[y] > 0.0) {
            mi += down[y] * std::log2(down[y] / (p_down * col));
        }
        if (up[y] > 0.0) {
            mi += up[y] * std::log2(up[y] / (p_up * col));
        }
    }
    return std::max(mi, 0.0);
}

} // namespace

std::vector<double> lagged_unit_joint(const Kernel& kernel, const Dist& pi, std::size_t unit,
                                      std::size_t lag)
{
    const std::size_t dim = kernel.state_count();
    if (unit >= kernel.unit_count()) {
        throw std::invalid_argument("unit index out of range");
    }
    std::vector<double> rows(2 * dim, 0.0);
    std::span<double> down(rows.data(), dim);
    std::span<double> up(rows.data() + dim, dim);
    for (StateIndex x = 0; x < dim; ++x) {
        (unit_state(x, unit) > 0 ? up : down)[x] = pi[x];
    }
    std::vector<double> scratch(dim);
    for (std::size_t d = 0; d < lag; ++d) {
        kernel.apply(down, scratch);
        std::copy(scratch.begin(), scratch.end(), down.begin());
        kernel.apply(up, scratch);
        std::copy(scratch.begin(), scratch.end(), up.begin());
    }
    return rows;
}

std::vector<double> lagged_unit_mi_series(const Kernel& kernel, const Dist& pi, std::size_t unit,
                                          std::span<const std::size_t> lags)
{
    if (!std::is_sorted(lags.begin(), lags.end())) {
        throw std::invalid_argument("lags must be ascending");
    }
    const std::size_t dim = kernel.state_count();
    std::vector<double> rows = lagged_unit_joint(kernel, pi, unit, 0);
    std::span<double> down(rows.data(), dim);
    std::span<double> up(rows.data() + dim, dim);
    std::vector<double> scratch(dim);
    std::vector<double> out;
    out.reserve(lags.size());
    std::size_t at = 0;
    for (std::size_t lag : lags) {
        for (; at < lag; ++at) {
            kernel.apply(down, scratch);
            std::copy(scratch.begin(), scratch.end(), down.begin());
            kernel.apply(up, scratch);
            std::copy(scratch.begin(), scratch.end(), up.begin());
        }
        out.push_back(two_row_mi(down, up));
    }
    return out;
}

double lagged_unit_mi(const Kernel& kernel, const Dist& pi, std::size_t unit, std::size_t lag)
{
    const std::size_t lags[] = {lag};
    return lagged_unit_mi_series(kernel, pi, unit, lags).front();
}

std::vector<double> unit_up_marginals(std::span<const double> pi, std::size_t n)
{
    std::vector<double> up(n, 0.0);
    for (StateIndex x = 0; x < pi.size(); ++x) {
        for (std::size_t i = 0; i < n; ++i) {
            if ((x >> i) & 1U) {
                up[i] += pi[x];
            }
        }
    }
    return up;
}

std::vector<std::vector<double>> point_mass_up_series(const Kernel& kernel, StateIndex start,
                                                      std::size_t count, std::size_t stride)
{
    const std::size_t dim = kernel.state_count();
    if (start >= dim) {
        throw std::invalid_argument("start state out of range");
    }
    std::vector<double> p(dim, 0.0);
    std::vector<double> scratch(dim);
    p[start] = 1.0;
    std::vector<std::vector<double>> out;
    out.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
        if (r > 0) {
            for (std::size_t s = 0; s < stride; ++s) {
                kernel.apply(p, scratch);
                p.swap(scratch);
            }
        }
        out.push_back(unit_up_marginals(p, kernel.unit_count()));
    }
    return out;
}

NeighborInformation neighbor_information(const Graph& graph, const Kernel& kernel, const Dist& pi,
                                         std::size_t unit, std::size_t lag)
{
    const std::size_t dim = kernel.state_count();
    const auto rows = lagged_unit_joint(kernel, pi, unit, lag);
    const auto nbrs = graph.neighbors(unit);
    const std::size_t sub = std::size_t{1} << nbrs.size();

    // joint over (s^t, neighbour pattern at t+lag)
    std::vector<double> packed(2 * sub, 0.0);
    std::vector<double> single(nbrs.size() * 4, 0.0);
    for (std::size_t a = 0; a < 2; ++a) {
        for (StateIndex y = 0; y < dim; ++y) {
            const double p = rows[a * dim + y];
            std::size_t pattern = 0;
            for (std::size_t j = 0; j < nbrs.size(); ++j) {
                const std::size_t bit = (y >> nbrs[j]) & 1U;
                pattern |= bit << j;
                single[j * 4 + a * 2 + bit] += p;
            }
            packed[a * sub + pattern] += p;
        }
    }
    NeighborInformation info;
    info.joint = two_row_mi(std::span<const double>(packed.data(), sub),
                            std::span<const double>(packed.data() + sub, sub));
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
        const double* cell = &single[j * 4];
        info.sum_of_individual += two_row_mi(std::span<const double>(cell, 2), std::span<const double>(cell + 2, 2));
    }
    return info;
}

double backflow_conditional_mi(std::size_t center_degree, const DynamicsParams& params,
                               std::size_t lag_steps)
{
    if (center_degree < 1 || center_degree > 10) {
        throw std::invalid_argument("backflow star center degree must be in 1..10");
    }
    const Graph star = Graph::star(center_degree);
    const std::size_t n = star.node_count();
    const Kernel kernel = build_kernel(star, params);
    const Dist pi(boltzmann_distribution(star, params));
    const std::size_t lag = lag_steps == 0 ? 2 * n : lag_steps;
    const auto rows = lagged_unit_joint(kernel, pi, 0, lag);
    const std::size_t dim = kernel.state_count();

    // I(A; C | L) = sum p(a,c,l) log p(a,c,l) p(l) / (p(a,l) p(c,l)), where the
    // center bit C is bit 0 of y and L is the remaining leaf pattern.
    const std::size_t leaves = dim >> 1;
    std::vector<double> p_l(leaves, 0.0);
    std::vector<double> p_al(2 * leaves, 0.0);
    std::vector<double> p_cl(2 * leaves, 0.0);
    for (std::size_t a = 0; a < 2; ++a) {
        for (StateIndex y = 0; y < dim; ++y) {
            const double p = rows[a * dim + y];
            const std::size_t c = y & 1U;
            const std::size_t l = y >> 1;
            p_l[l] += p;
            p_al[a * leaves + l] += p;
            p_cl[c * leaves + l] += p;
        }
    }
    double cmi = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
        for (StateIndex y = 0; y < dim; ++y) {
            const double p = rows[a * dim + y];
            if (p <= 0.0) {
                continue;
            }
            const std::size_t c = y & 1U;
            const std::size_t l = y >> 1;
            cmi += p * std::log2(p * p_l[l] / (p_al[a * leaves + l] * p_cl[c * leaves + l]));
        }
    }
    return std::max(cmi, 0.0);
}

} // namespace idtnet::exact
