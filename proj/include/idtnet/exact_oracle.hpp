#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "idtnet/errors.hpp"
#include "idtnet/graph.hpp"
#include "idtnet/infotheory.hpp"
#include "idtnet/spin_dynamics.hpp"

namespace idtnet::exact {

constexpr std::size_t kMaxUnits = 14;

/// Thrown by iterative solvers that hit their iteration cap.
class ConvergenceError : public NumericError {
public:
    using NumericError::NumericError;
};

/// Configuration index: bit i set <=> unit i is +1.
using StateIndex = std::size_t;

inline Spin unit_state(StateIndex x, std::size_t unit)
{
    return ((x >> unit) & 1U) ? Spin{1} : Spin{-1};
}
StateIndex encode(std::span<const Spin> config);
SpinConfig decode(StateIndex x, std::size_t n);

/// Random-scan single-site kernel P = (1/n) sum_i P_i over all 2^n
/// configurations. Only the n off-diagonal entries of each row can be
/// non-zero, so the kernel is stored as per-(state, site) flip probabilities
/// and applied without materializing the dense matrix.
class Kernel {
public:
    Kernel(std::size_t n, std::vector<double> flips);

    std::size_t unit_count() const { return n_; }
    std::size_t state_count() const { return std::size_t{1} << n_; }

    /// Probability that site i flips when it is the site chosen, in state x.
    double flip(StateIndex x, std::size_t i) const { return flips_[x * n_ + i]; }

    double entry(StateIndex x, StateIndex y) const;

    /// out = in * P for a row vector over configurations.
    void apply(std::span<const double> in, std::span<double> out) const;
    std::vector<double> apply(std::span<const double> in) const;

    /// Row-major dense copy; only sensible for small n.
    std::vector<double> dense() const;

private:
    std::size_t n_;
    std::vector<double> flips_;
};

/// Throws std::invalid_argument when graph.node_count() > kMaxUnits.
Kernel build_kernel(const Graph& graph, const DynamicsParams& params);

/// pi(x) proportional to exp(J sum_{(i,j)} s_i s_j / T).
std::vector<double> boltzmann_distribution(const Graph& graph, const DynamicsParams& params);

struct StationaryOptions {
    double tolerance = 1e-13; // L1 norm of pi P - pi
    std::size_t max_iterations = 5'000'000;
};

/// Power iteration from the uniform distribution. Iterates the lazy kernel
/// (I + P) / 2, which has the same fixed point and is aperiodic even when P
/// is not (e.g. Metropolis on an isolated site).
Dist stationary_distribution(const Kernel& kernel, StationaryOptions opts = {});

/// max |pi(x) P(x,y) - pi(y) P(y,x)| over single-flip pairs.
double detailed_balance_residual(const Kernel& kernel, std::span<const double> pi);

/// Exact I(S^{t+d}; s_unit^t) at stationarity for each lag in `lags` (steps,
/// ascending). Lag 0 gives H(s_unit).
std::vector<double> lagged_unit_mi_series(const Kernel& kernel, const Dist& pi, std::size_t unit,
                                          std::span<const std::size_t> lags);
double lagged_unit_mi(const Kernel& kernel, const Dist& pi, std::size_t unit, std::size_t lag);

/// The two rows p(s_unit^t = a, S^{t+lag} = y) for a = -1 (row 0), +1 (row 1).
std::vector<double> lagged_unit_joint(const Kernel& kernel, const Dist& pi, std::size_t unit,
                                      std::size_t lag);

/// Start from the point mass at `start` and record, every `stride` steps up to
/// `count` records, each unit's probability of being +1. Result is
/// [record][unit]; record 0 is the start itself.
std::vector<std::vector<double>> point_mass_up_series(const Kernel& kernel, StateIndex start,
                                                      std::size_t count, std::size_t stride);

/// Per-unit marginal P(s_u = +1) under a configuration distribution.
std::vector<double> unit_up_marginals(std::span<const double> pi, std::size_t n);

struct NeighborInformation {
    double joint = 0.0;            // I(h^{t+d}; s^t) for the whole neighbour set
    double sum_of_individual = 0.0; // sum_j I(s_j^{t+d}; s^t)
};

/// Information the neighbour states at t+lag hold about the unit's state at t.
NeighborInformation neighbor_information(const Graph& graph, const Kernel& kernel, const Dist& pi,
                                         std::size_t unit, std::size_t lag);

/// I(s_c^t ; s_c^{t+lag} | leaves^{t+lag}) on a star whose center has
/// `center_degree` leaves (<= 10). lag_steps == 0 means two sweeps (2n steps).
double backflow_conditional_mi(std::size_t center_degree, const DynamicsParams& params,
                               std::size_t lag_steps = 0);

} // namespace idtnet::exact
