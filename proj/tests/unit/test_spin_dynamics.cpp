#include <cmath>
#include <limits>

#include "doctest.h"
#include "golden.hpp"
#include "idtnet/spin_dynamics.hpp"

using namespace idtnet;

TEST_SUITE("spin_dynamics") {

TEST_CASE("update probabilities")
{
    const DynamicsParams g{1.0, 2.0, UpdateRule::glauber};
    const DynamicsParams m{1.0, 2.0, UpdateRule::metropolis};
    CHECK(glauber_up_probability(2, g) == doctest::Approx(golden::glauber_up_sum2_T2).epsilon(1e-15));
    CHECK(glauber_up_probability(0, g) == 0.5);
    CHECK(glauber_up_probability(-2, g) == doctest::Approx(1.0 - golden::glauber_up_sum2_T2).epsilon(1e-14));

    // aligned with a neighbour sum of 2: delta E = 2 J s sum = 4
    CHECK(metropolis_flip_probability(4.0, m) == doctest::Approx(golden::metropolis_flip_dE4_T2).epsilon(1e-15));
    CHECK(metropolis_flip_probability(-4.0, m) == 1.0);
    CHECK(flip_probability(1, 2, m) == doctest::Approx(golden::metropolis_flip_dE4_T2).epsilon(1e-15));
    CHECK(flip_probability(-1, 2, m) == 1.0);
    CHECK(flip_probability(1, 2, g) == doctest::Approx(1.0 - golden::glauber_up_sum2_T2).epsilon(1e-14));
    CHECK(flip_probability(-1, 2, g) == doctest::Approx(golden::glauber_up_sum2_T2).epsilon(1e-15));

    const DynamicsParams hot{1.0, std::numeric_limits<double>::infinity(), UpdateRule::glauber};
    CHECK(glauber_up_probability(5, hot) == 0.5);
}

TEST_CASE("parameter validation and parsing")
{
    CHECK_THROWS_AS((DynamicsParams{0.0, 2.0, UpdateRule::glauber}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DynamicsParams{1.0, 0.0, UpdateRule::glauber}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((DynamicsParams{1.0, std::nan(""), UpdateRule::glauber}.validate()), std::invalid_argument);
    CHECK_NOTHROW((DynamicsParams{1.0, std::numeric_limits<double>::infinity(), UpdateRule::glauber}.validate()));
    CHECK(parse_update_rule(to_string(UpdateRule::metropolis)) == UpdateRule::metropolis);
    CHECK(parse_update_rule("glauber") == UpdateRule::glauber);
    CHECK(parse_step_unit(to_string(StepUnit::site)) == StepUnit::site);
    CHECK_THROWS_AS(parse_update_rule("heatbath2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_step_unit("epoch"), std::invalid_argument);
}

TEST_CASE("a sweep is n random-site updates")
{
    const Graph g = Graph::path(6);
    const DynamicsParams p{1.0, 2.0, UpdateRule::metropolis};
    const SpinUpdater up(g, p);
    Rng a(3);
    Rng b(3);
    SpinConfig x = random_config(6, a);
    SpinConfig y = x;
    (void)random_config(6, b);
    up.sweep(x, a);
    for (int i = 0; i < 6; ++i) {
        up.random_site_update(y, b);
    }
    CHECK(x == y);
}

TEST_CASE("conditionals match the heat-bath rule for both rules")
{
    const Graph g = Graph::star(3);
    const SpinConfig x{1, 1, -1, 1};
    for (auto rule : {UpdateRule::glauber, UpdateRule::metropolis}) {
        const SpinUpdater up(g, {1.0, 2.0, rule});
        CHECK(up.conditional_up(x, 0) == doctest::Approx(glauber_up_probability(1, {1.0, 2.0})));
        CHECK(up.conditional_up(x, 0) + up.conditional_down(x, 0) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("equilibration orders a 4-regular network only when cold")
{
    Rng rng(17);
    const std::vector<int> degrees(1000, 4);
    const Graph g = build_configuration_graph(degrees, rng);
    for (auto rule : {UpdateRule::glauber, UpdateRule::metropolis}) {
        Rng cold(1);
        const auto c = equilibrate(g, {1.0, 2.0, rule}, 500, cold);
        CHECK(c.magnetization_trace.size() == 500);
        CHECK(std::abs(magnetization(c.config)) > 0.3);
        Rng hot(1);
        const auto h = equilibrate(g, {1.0, 100.0, rule}, 200, hot);
        CHECK(std::abs(magnetization(h.config)) < 0.1);
    }
    Rng r(1);
    CHECK_THROWS_AS(equilibrate(g, {1.0, 2.0}, 0, r), std::invalid_argument);
}

} // TEST_SUITE
