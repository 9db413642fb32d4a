#include <cmath>
#include <vector>

#include "doctest.h"
#include "golden.hpp"
#include "idtnet/infotheory.hpp"
#include "idtnet/rng.hpp"

using namespace idtnet;

namespace {

std::vector<double> random_simplex(Rng& rng, std::size_t n)
{
    std::vector<double> p(n);
    double total = 0.0;
    for (auto& v : p) {
        v = -std::log(1.0 - rng.uniform());
        total += v;
    }
    for (auto& v : p) {
        v /= total;
    }
    return p;
}

} // namespace

TEST_SUITE("infotheory") {

TEST_CASE("reference values")
{
    CHECK(entropy(Dist({0.25, 0.75})) == doctest::Approx(golden::entropy_quarter).epsilon(1e-15));
    CHECK(entropy(Dist({1.0, 0.0})) == 0.0);
    CHECK(entropy(Dist({0.25, 0.25, 0.25, 0.25})) == doctest::Approx(2.0));
    const Joint2 j(2, 2, {0.4, 0.1, 0.1, 0.4});
    CHECK(mutual_information(j) == doctest::Approx(golden::mi_symmetric_04_01).epsilon(1e-14));
}

TEST_CASE("validation")
{
    CHECK_THROWS_AS(Dist({0.5, 0.6}), std::invalid_argument);
    CHECK_THROWS_AS(Dist({-0.1, 1.1}), std::invalid_argument);
    CHECK_THROWS_AS(Joint2(2, 2, {0.5, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(kl_divergence(Dist({0.5, 0.5}), Dist({1.0, 0.0})), SupportError);
    CHECK_THROWS_AS(kl_divergence(Dist({0.5, 0.5}), Dist({0.2, 0.3, 0.5})), std::invalid_argument);
    CHECK(kl_divergence(Dist({1.0, 0.0}), Dist({0.5, 0.5})) == doctest::Approx(1.0));
}

TEST_CASE("empirical distribution")
{
    const std::vector<std::uint64_t> counts{1, 3};
    const Dist d = empirical_distribution(counts);
    CHECK(d[0] == 0.25);
    CHECK(d[1] == 0.75);
    const std::vector<std::uint64_t> empty{0, 0};
    CHECK_THROWS_AS(empirical_distribution(empty), std::invalid_argument);
}

TEST_CASE("Gibbs inequality and entropy bounds")
{
    Rng rng(5);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 2 + rng.index(6);
        const Dist p(random_simplex(rng, n));
        const Dist q(random_simplex(rng, n));
        CHECK(kl_divergence(p, q) >= 0.0);
        CHECK(kl_divergence(p, p) == doctest::Approx(0.0));
        CHECK(entropy(p) <= std::log2(static_cast<double>(n)) + 1e-12);
    }
}

TEST_CASE("entropy is concave")
{
    Rng rng(6);
    for (int t = 0; t < 500; ++t) {
        const auto p = random_simplex(rng, 4);
        const auto q = random_simplex(rng, 4);
        const double lambda = rng.uniform();
        std::vector<double> mix(4);
        for (int i = 0; i < 4; ++i) {
            mix[i] = lambda * p[i] + (1.0 - lambda) * q[i];
        }
        CHECK(entropy_bits(mix) >= lambda * entropy_bits(p) + (1.0 - lambda) * entropy_bits(q) - 1e-12);
    }
}

TEST_CASE("mutual information bounds and data processing")
{
    Rng rng(7);
    for (int t = 0; t < 300; ++t) {
        // X -> Y -> Z with random channels
        const auto px = random_simplex(rng, 3);
        std::vector<std::vector<double>> a(3), b(4);
        for (auto& row : a) {
            row = random_simplex(rng, 4);
        }
        for (auto& row : b) {
            row = random_simplex(rng, 3);
        }
        std::vector<double> xy(12, 0.0), xz(9, 0.0);
        for (int x = 0; x < 3; ++x) {
            for (int y = 0; y < 4; ++y) {
                xy[x * 4 + y] = px[x] * a[x][y];
                for (int z = 0; z < 3; ++z) {
                    xz[x * 3 + z] += px[x] * a[x][y] * b[y][z];
                }
            }
        }
        const Joint2 jxy(3, 4, xy);
        const Joint2 jxz(3, 3, xz);
        const double ixy = mutual_information(jxy);
        CHECK(ixy >= 0.0);
        CHECK(ixy <= std::min(entropy(jxy.marginal_x()), entropy(jxy.marginal_y())) + 1e-12);
        CHECK(mutual_information(jxz) <= ixy + 1e-12);
    }

    // independence gives zero
    const Joint2 prod(2, 2, {0.06, 0.14, 0.24, 0.56});
    CHECK(mutual_information(prod) == doctest::Approx(0.0).epsilon(1e-12));
}

} // TEST_SUITE
