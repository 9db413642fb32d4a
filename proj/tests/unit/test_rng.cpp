#include <set>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "doctest.h"
#include "idtnet/rng.hpp"

using idtnet::Rng;

TEST_SUITE("rng") {

TEST_CASE("same seed gives the same stream")
{
    Rng a(42);
    Rng b(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.bits() == b.bits());
    }
}

TEST_CASE("derived seeds are stable and distinct")
{
    CHECK(idtnet::derive_seed(7, "trajectory", 3) == idtnet::derive_seed(7, "trajectory", 3));
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 1000; ++i) {
        seen.insert(idtnet::derive_seed(7, "trajectory", i));
    }
    seen.insert(idtnet::derive_seed(7, "marginals"));
    seen.insert(idtnet::derive_seed(7, "equilibrate"));
    seen.insert(idtnet::derive_seed(8, "trajectory", 0));
    CHECK(seen.size() == 1003);
}

TEST_CASE("uniform stays in [0, 1)")
{
    Rng r(1);
    double sum = 0.0;
    const int n = 200'000;
    for (int i = 0; i < n; ++i) {
        const double u = r.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    // mean of U(0,1): sd of the average is 1/sqrt(12 n)
    CHECK(std::abs(sum / n - 0.5) < 5.0 / std::sqrt(12.0 * n));
}

TEST_CASE("index is in range and uniform")
{
    Rng r(99);
    const std::uint64_t k = 7;
    const int draws = 70'000;
    std::vector<double> counts(k, 0.0);
    for (int i = 0; i < draws; ++i) {
        const auto v = r.index(k);
        REQUIRE(v < k);
        counts[v] += 1.0;
    }
    double chi2 = 0.0;
    const double expected = static_cast<double>(draws) / k;
    for (double c : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    const boost::math::chi_squared dist(static_cast<double>(k - 1));
    CHECK(chi2 < boost::math::quantile(dist, 0.999));
    CHECK(r.index(1) == 0);
}

} // TEST_SUITE
