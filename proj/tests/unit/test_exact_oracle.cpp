#include <cmath>
#include <vector>

#include "doctest.h"
#include "golden.hpp"
#include "idtnet/exact_oracle.hpp"

using namespace idtnet;
using namespace idtnet::exact;

namespace {

std::vector<Graph> small_graphs()
{
    const std::vector<Edge> tri{{0, 1}, {1, 2}, {0, 2}};
    const std::vector<Edge> square{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}};
    return {Graph::path(2), Graph::path(3), Graph::star(3), Graph(3, tri), Graph(4, square)};
}

} // namespace

TEST_SUITE("exact_oracle") {

TEST_CASE("state encoding")
{
    const SpinConfig c{1, -1, -1, 1, 1};
    CHECK(encode(c) == 0b11001);
    CHECK(decode(0b11001, 5) == c);
    CHECK(unit_state(0b10, 1) == 1);
    CHECK(unit_state(0b10, 0) == -1);
}

TEST_CASE("kernel rows are stochastic and the Boltzmann law is stationary")
{
    for (const auto& g : small_graphs()) {
        for (auto rule : {UpdateRule::glauber, UpdateRule::metropolis}) {
            const DynamicsParams p{1.0, 2.0, rule};
            const Kernel k = build_kernel(g, p);
            const std::size_t s = k.state_count();
            const auto dense = k.dense();
            for (std::size_t x = 0; x < s; ++x) {
                double row = 0.0;
                for (std::size_t y = 0; y < s; ++y) {
                    CHECK(dense[x * s + y] >= 0.0);
                    row += dense[x * s + y];
                }
                CHECK(row == doctest::Approx(1.0).epsilon(1e-14));
            }
            const auto boltz = boltzmann_distribution(g, p);
            CHECK(detailed_balance_residual(k, boltz) < 1e-15);
            const Dist pi = stationary_distribution(k);
            for (std::size_t x = 0; x < s; ++x) {
                CHECK(pi[x] == doctest::Approx(boltz[x]).epsilon(1e-10));
            }
            const auto moved = k.apply(boltz);
            for (std::size_t x = 0; x < s; ++x) {
                CHECK(moved[x] == doctest::Approx(boltz[x]).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("lagged information on a 3-unit path")
{
    const Graph g = Graph::path(3);
    struct Case {
        UpdateRule rule;
        double center;
        double leaf;
    };
    for (const Case c : {Case{UpdateRule::glauber, golden::path3_glauber_center, golden::path3_glauber_leaf},
                         Case{UpdateRule::metropolis, golden::path3_metropolis_center,
                              golden::path3_metropolis_leaf}}) {
        const Kernel k = build_kernel(g, {1.0, 2.0, c.rule});
        const Dist pi = stationary_distribution(k);
        CHECK(lagged_unit_mi(k, pi, 1, 0) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(lagged_unit_mi(k, pi, 1, 3) == doctest::Approx(c.center).epsilon(1e-10));
        CHECK(lagged_unit_mi(k, pi, 0, 3) == doctest::Approx(c.leaf).epsilon(1e-10));
        const std::vector<std::size_t> lags{0, 3};
        const auto series = lagged_unit_mi_series(k, pi, 1, lags);
        CHECK(series[1] == doctest::Approx(c.center).epsilon(1e-10));
    }
}

TEST_CASE("lagged information never increases")
{
    const Graph g = Graph::star(4);
    const Kernel k = build_kernel(g, {1.0, 2.0, UpdateRule::metropolis});
    const Dist pi = stationary_distribution(k);
    std::vector<std::size_t> lags(60);
    for (std::size_t d = 0; d < lags.size(); ++d) {
        lags[d] = d;
    }
    for (std::size_t u = 0; u < g.node_count(); ++u) {
        const auto s = lagged_unit_mi_series(k, pi, u, lags);
        for (std::size_t d = 1; d < s.size(); ++d) {
            CHECK(s[d] <= s[d - 1] + 1e-12);
        }
    }
}

TEST_CASE("point-mass propagation")
{
    const Graph g = Graph::star(2);
    const Kernel k = build_kernel(g, {1.0, 2.0});
    const auto series = point_mass_up_series(k, 0b101, 50, 3);
    REQUIRE(series.size() == 50);
    CHECK(series[0] == std::vector<double>{1.0, 0.0, 1.0});
    // after many steps the series forgets the start
    const auto pi = boltzmann_distribution(g, {1.0, 2.0});
    const auto m = unit_up_marginals(pi, 3);
    const auto far = point_mass_up_series(k, 0b101, 2, 2000);
    for (std::size_t u = 0; u < 3; ++u) {
        CHECK(far[1][u] == doctest::Approx(m[u]).epsilon(1e-9));
        CHECK(m[u] == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("neighbour information is subadditive on stars")
{
    for (std::size_t leaves = 2; leaves <= 5; ++leaves) {
        const Graph g = Graph::star(leaves);
        const Kernel k = build_kernel(g, {1.0, 2.0});
        const Dist pi = stationary_distribution(k);
        for (std::size_t lag : {std::size_t{1}, g.node_count()}) {
            const auto info = neighbor_information(g, k, pi, 0, lag);
            CHECK(info.joint >= 0.0);
            CHECK(info.joint <= info.sum_of_individual + 1e-10);
        }
    }
}

TEST_CASE("back-flow falls off at large center degree")
{
    // at T=2 the value still rises up to about k=7, so the ordering is checked past the peak
    const DynamicsParams warm{1.0, 2.0};
    CHECK(backflow_conditional_mi(2, warm) > 0.0);
    CHECK(backflow_conditional_mi(10, warm) < backflow_conditional_mi(8, warm));
    CHECK(backflow_conditional_mi(8, warm) < backflow_conditional_mi(7, warm));

    const DynamicsParams cold{1.0, 1.0};
    CHECK(backflow_conditional_mi(8, cold) < backflow_conditional_mi(2, cold));
}

TEST_CASE("back-flow vanishes in the cold limit")
{
    const DynamicsParams p{1.0, 0.1};
    CHECK(backflow_conditional_mi(4, p) < 1e-6);
}

TEST_CASE("size limit")
{
    CHECK_THROWS_AS(build_kernel(Graph::path(kMaxUnits + 1), {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(backflow_conditional_mi(11, {1.0, 2.0}), std::invalid_argument);
}

} // TEST_SUITE
