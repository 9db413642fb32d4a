#include "idtnet/idt_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace idtnet::analytic {

double binary_entropy(const BinaryMarginal& m)
{
    const double small = std::min(m.down, m.up);
    const double big = std::max(m.down, m.up);
    if (!(small > 0.0)) {
        return 0.0;
    }
    // big == 1 - small up to rounding; log1p keeps the big-mass term exact
    // when small is below machine epsilon.
    const double h = -small * std::log2(small) - big * std::log1p(-small) / std::numbers::ln2;
    return std::max(h, 0.0);
}

double channel_mutual_information(const BinaryMarginal& prior, const BinaryChannel& channel)
{
    const double pa[2] = {prior.down, prior.up};
    const BinaryMarginal* cond[2] = {&channel.given_down, &channel.given_up};
    double mi = 0.0;
    for (int a = 0; a < 2; ++a) {
        if (!(pa[a] > 0.0)) {
            continue;
        }
        const double p_other = pa[1 - a];
        const double own[2] = {cond[a]->down, cond[a]->up};
        const double other[2] = {cond[1 - a]->down, cond[1 - a]->up};
        for (int b = 0; b < 2; ++b) {
            if (!(own[b] > 0.0)) {
                continue;
            }
            const double pb = pa[a] * own[b] + p_other * other[b];
            // p(b|a) / p(b) - 1 == p(not a) (p(b|a) - p(b|not a)) / p(b)
            const double excess = p_other * (own[b] - other[b]) / pb;
            mi += pa[a] * own[b] * std::log1p(excess);
        }
    }
    return std::max(mi / std::numbers::ln2, 0.0);
}

std::vector<double> binomial_pmf(int n, double rho)
{
    if (n < 0) {
        throw std::invalid_argument("binomial_pmf needs n >= 0");
    }
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("binomial_pmf needs rho in [0, 1]");
    }
    std::vector<double> pmf(static_cast<std::size_t>(n) + 1, 0.0);
    if (rho == 0.0) {
        pmf.front() = 1.0;
        return pmf;
    }
    if (rho == 1.0) {
        pmf.back() = 1.0;
        return pmf;
    }
    const double log_rho = std::log(rho);
    const double log_rest = std::log1p(-rho);
    const double log_nf = std::lgamma(n + 1.0);
    for (int j = 0; j <= n; ++j) {
        const double log_c = log_nf - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0);
        pmf[static_cast<std::size_t>(j)] = std::exp(log_c + j * log_rho + (n - j) * log_rest);
    }
    return pmf;
}

double cavity_map(const DegreeDistribution& excess, const DynamicsParams& params, double rho)
{
    double f = 0.0;
    for (const auto& [m, q] : excess.support()) {
        const auto pmf = binomial_pmf(m, rho);
        double up = 0.0;
        for (int j = 0; j <= m; ++j) {
            up += pmf[static_cast<std::size_t>(j)] * glauber_up_probability(2 * j - m, params);
        }
        f += q * up;
    }
    return f;
}

CavitySolution cavity_iterate(const DegreeDistribution& dist, const DynamicsParams& params, double rho0,
                              const CavityOptions& opts)
{
    params.validate();
    if (!(opts.tolerance > 0.0)) {
        throw std::invalid_argument("cavity tolerance must be > 0");
    }
    if (!(rho0 >= 0.0 && rho0 <= 1.0)) {
        throw std::invalid_argument("cavity start must be in [0, 1]");
    }
    const DegreeDistribution excess = excess_degree_distribution(dist);
    CavitySolution sol;
    sol.rho = rho0;
    for (sol.iterations = 1; sol.iterations <= opts.max_iterations; ++sol.iterations) {
        const double next = opts.damping * sol.rho + (1.0 - opts.damping) * cavity_map(excess, params, sol.rho);
        sol.residual = std::abs(next - sol.rho);
        sol.rho = std::clamp(next, 0.0, 1.0);
        if (sol.residual < opts.tolerance) {
            sol.converged = true;
            return sol;
        }
    }
    sol.iterations = opts.max_iterations;
    return sol;
}

CavitySolution cavity_fixed_point(const DegreeDistribution& dist, const DynamicsParams& params,
                                  const CavityOptions& opts)
{
    const CavitySolution broken = cavity_iterate(dist, params, 0.99, opts);
    if (std::abs(broken.rho - 0.5) > 1e-6) {
        return broken;
    }
    CavitySolution symmetric = cavity_iterate(dist, params, 0.5, opts);
    symmetric.rho = 0.5;
    return symmetric;
}

BinaryMarginal unit_marginal(int k, double rho, const DynamicsParams& params)
{
    if (k < 1) {
        throw std::invalid_argument("unit_marginal needs k >= 1");
    }
    const auto pmf = binomial_pmf(k, rho);
    BinaryMarginal m{0.0, 0.0};
    for (int j = 0; j <= k; ++j) {
        const double w = pmf[static_cast<std::size_t>(j)];
        m.up += w * glauber_up_probability(2 * j - k, params);
        m.down += w * glauber_up_probability(k - 2 * j, params);
    }
    return m;
}

namespace {

/// Distribution of a neighbour's next state when the source unit is `a` and
/// the neighbour's m other neighbours are independently +1 with prob rho.
BinaryMarginal neighbour_response(int a, int m, std::span<const double> pmf, const DynamicsParams& params)
{
    BinaryMarginal r{0.0, 0.0};
    for (int l = 0; l <= m; ++l) {
        const double w = pmf[static_cast<std::size_t>(l)];
        const int field = a + 2 * l - m;
        r.up += w * glauber_up_probability(field, params);
        r.down += w * glauber_up_probability(-field, params);
    }
    return r;
}

} // namespace

AnalyticModel::AnalyticModel(const DegreeDistribution& dist, const DynamicsParams& params, double rho)
    : params_(params), rho_(rho), excess_(excess_degree_distribution(dist))
{
    params_.validate();
    if (!(rho >= 0.0 && rho <= 1.0)) {
        throw std::invalid_argument("rho must be in [0, 1]");
    }
    for (const auto& [m, q] : excess_.support()) {
        const auto pmf = binomial_pmf(m, rho_);
        channels_.push_back({q, {neighbour_response(-1, m, pmf, params_), neighbour_response(+1, m, pmf, params_)}});
    }
}

BinaryMarginal AnalyticModel::unit_marginal(int k) const
{
    return analytic::unit_marginal(k, rho_, params_);
}

double AnalyticModel::i0(int k) const
{
    return binary_entropy(unit_marginal(k));
}

double AnalyticModel::transmission(int k) const
{
    const BinaryMarginal prior = unit_marginal(k);
    double t = 0.0;
    for (const auto& c : channels_) {
        t += c.weight * channel_mutual_information(prior, c.channel);
    }
    return t;
}

double AnalyticModel::i1_upper(int k) const
{
    return std::min(k * transmission(k), i0(k));
}

DissipationRatio AnalyticModel::dissipation_ratio() const
{
    DissipationRatio r;
    for (const auto& [m, q] : excess_.support()) {
        const double h = i0(m + 1);
        if (!(h > 0.0)) {
            r.degenerate = true;
            r.value += q;
            continue;
        }
        r.value += q * std::min(1.0, i1_upper(m + 1) / h);
    }
    return r;
}

double transmission_T(int k, const DegreeDistribution& dist, double rho, const DynamicsParams& params)
{
    return AnalyticModel(dist, params, rho).transmission(k);
}

DissipationRatio avg_dissipation_ratio(const DegreeDistribution& dist, double rho,
                                       const DynamicsParams& params)
{
    return AnalyticModel(dist, params, rho).dissipation_ratio();
}

double idt_value(double eps, double c_eff, double i_hat, double i1_upper)
{
    if (!(eps > 0.0 && eps < 1.0)) {
        throw std::invalid_argument("eps must be in (0, 1)");
    }
    if (!(c_eff > 0.0) || !(i_hat > 0.0)) {
        throw std::invalid_argument("c_eff and I_hat must be > 0");
    }
    if (c_eff * i_hat >= 1.0) {
        throw NumericError("no dissipation: c_eff * I_hat = " + std::to_string(c_eff * i_hat) + " >= 1");
    }
    if (!(i1_upper > eps)) {
        return 0.0;
    }
    return (std::log2(eps) - std::log2(i1_upper)) / (std::log2(c_eff) + std::log2(i_hat));
}

Branch parse_branch(std::string_view s)
{
    if (s == "auto") {
        return Branch::automatic;
    }
    if (s == "symmetric") {
        return Branch::symmetric;
    }
    throw std::invalid_argument("unknown branch '" + std::string(s) + "'");
}

std::string_view to_string(Branch b)
{
    return b == Branch::automatic ? "auto" : "symmetric";
}

AnalyticCurve analytic_curve(const DegreeDistribution& dist, const DynamicsParams& params,
                             const CurveOptions& opts)
{
    params.validate();
    const int k_to = opts.k_to == 0 ? dist.max_k() : opts.k_to;
    if (opts.k_from < 1 || k_to < opts.k_from) {
        throw std::invalid_argument("k range must satisfy 1 <= from <= to");
    }

    AnalyticCurve curve;
    curve.eps = opts.eps;
    curve.c_eff = opts.c_eff;
    if (opts.branch == Branch::symmetric) {
        curve.cavity = {0.5, true, 0, 0.0};
    } else {
        curve.cavity = cavity_fixed_point(dist, params, opts.cavity);
        if (!curve.cavity.converged) {
            throw NumericError("cavity iteration did not converge (residual " +
                               std::to_string(curve.cavity.residual) + ")");
        }
    }
    curve.rho = curve.cavity.rho;
    curve.symmetric_phase = curve.rho == 0.5;

    const AnalyticModel model(dist, params, curve.rho);
    const DissipationRatio ratio = model.dissipation_ratio();
    curve.i_hat = ratio.value;
    curve.degenerate_ratio = ratio.degenerate;

    for (int k = opts.k_from; k <= k_to; ++k) {
        CurveRow row;
        row.k = k;
        row.i0 = model.i0(k);
        row.t_k = model.transmission(k);
        row.i1_upper = std::min(k * row.t_k, row.i0);
        row.d = idt_value(opts.eps, opts.c_eff, curve.i_hat, row.i1_upper);
        curve.rows.push_back(row);
    }
    return curve;
}

} // namespace idtnet::analytic
