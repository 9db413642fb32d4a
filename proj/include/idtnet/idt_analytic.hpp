#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "idtnet/errors.hpp"
#include "idtnet/graph.hpp"
#include "idtnet/infotheory.hpp"
#include "idtnet/spin_dynamics.hpp"

// Analytic information dissipation time on locally tree-like networks with
// heat-bath (Glauber) units. Neighbour statistics come from a cavity fixed
// point for rho, the probability that a neighbour reached along an edge is +1.
namespace idtnet::analytic {

/// Binary state mass with both entries evaluated directly, so the smaller one
/// keeps full relative precision even when the larger rounds to 1.
struct BinaryMarginal {
    double down = 0.5;
    double up = 0.5;

    Dist dist() const { return Dist({down, up}); }
};

/// Entropy of a binary mass, accurate when one entry is far below 1e-16.
double binary_entropy(const BinaryMarginal& m);

/// I(A; B) for a binary input A ~ prior and a binary channel given by
/// P(B = +1 | A = -1) and P(B = +1 | A = +1) (with their complements passed
/// explicitly). Free of the H + H - H cancellation.
struct BinaryChannel {
    BinaryMarginal given_down; // distribution of B when A = -1
    BinaryMarginal given_up;   // distribution of B when A = +1
};
double channel_mutual_information(const BinaryMarginal& prior, const BinaryChannel& channel);

/// Binom(j; n, rho) for j = 0..n.
std::vector<double> binomial_pmf(int n, double rho);

struct CavityOptions {
    double damping = 0.5; // rho <- damping * rho + (1 - damping) * f(rho)
    double tolerance = 1e-12;
    std::size_t max_iterations = 100'000;
};

struct CavitySolution {
    double rho = 0.5;
    bool converged = false;
    std::size_t iterations = 0;
    double residual = 0.0;
};

/// f(rho) = sum_m q(m) sum_j Binom(j; m, rho) glauber_up(2j - m).
double cavity_map(const DegreeDistribution& excess, const DynamicsParams& params, double rho);

/// Damped iteration from a single start.
CavitySolution cavity_iterate(const DegreeDistribution& dist, const DynamicsParams& params, double rho0,
                              const CavityOptions& opts = {});

/// Runs from rho0 = 0.5 and rho0 = 0.99 and reports the symmetry-broken root
/// when one exists (|rho - 1/2| > 1e-6), else the symmetric one.
CavitySolution cavity_fixed_point(const DegreeDistribution& dist, const DynamicsParams& params,
                                  const CavityOptions& opts = {});

/// Stationary state of a degree-k unit whose neighbours are independently +1
/// with probability rho.
BinaryMarginal unit_marginal(int k, double rho, const DynamicsParams& params);

/// T(k): excess-degree-weighted MI between a degree-k unit's state and a
/// neighbour's heat-bath update.
double transmission_T(int k, const DegreeDistribution& dist, double rho, const DynamicsParams& params);

struct DissipationRatio {
    double value = 0.0;        // I-hat
    bool degenerate = false;   // some term had I0 = 0 and was taken as ratio 1
};

DissipationRatio avg_dissipation_ratio(const DegreeDistribution& dist, double rho,
                                       const DynamicsParams& params);

/// D = (log eps - log I1) / (log c_eff + log I_hat). Returns 0 when
/// i1_upper <= eps. Throws NumericError when c_eff * I_hat >= 1.
double idt_value(double eps, double c_eff, double i_hat, double i1_upper);

/// Per-degree quantities for fixed (dist, params, rho); caches the neighbour
/// channels so a whole k range costs O(k_max^2) instead of O(k_max^3).
class AnalyticModel {
public:
    AnalyticModel(const DegreeDistribution& dist, const DynamicsParams& params, double rho);

    double rho() const { return rho_; }
    BinaryMarginal unit_marginal(int k) const;
    double i0(int k) const;
    double transmission(int k) const;
    /// min(k T(k), I0(k)): the uniqueness factor is taken as 1 and the result
    /// capped at the unit's own entropy.
    double i1_upper(int k) const;
    DissipationRatio dissipation_ratio() const;

private:
    struct NeighbourChannel {
        double weight; // q(m)
        BinaryChannel channel;
    };

    DynamicsParams params_;
    double rho_;
    DegreeDistribution excess_;
    std::vector<NeighbourChannel> channels_;
};

enum class Branch { automatic, symmetric };
Branch parse_branch(std::string_view s);
std::string_view to_string(Branch b);

struct CurveOptions {
    double eps = 1e-3;
    double c_eff = 1.0;
    int k_from = 1;
    int k_to = 0; // 0: the distribution's largest degree
    Branch branch = Branch::automatic;
    CavityOptions cavity{};
};

struct CurveRow {
    int k = 0;
    double i0 = 0.0;
    double t_k = 0.0;
    double i1_upper = 0.0;
    double d = 0.0;
};

struct AnalyticCurve {
    std::vector<CurveRow> rows;
    double eps = 0.0;
    double c_eff = 0.0;
    double i_hat = 0.0;
    double rho = 0.5;
    bool symmetric_phase = true; // rho == 1/2, either found or forced
    bool degenerate_ratio = false;
    CavitySolution cavity;
};

AnalyticCurve analytic_curve(const DegreeDistribution& dist, const DynamicsParams& params,
                             const CurveOptions& opts);

} // namespace idtnet::analytic
