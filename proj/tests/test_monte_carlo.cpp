#include <doctest.h>

#include <cmath>

#include "cyclekit/monte_carlo.hpp"
#include "cyclekit/rng.hpp"

using namespace cyclekit;

TEST_SUITE("monte_carlo") {

TEST_CASE("scalar estimate of a known mean with honest standard error") {
    const auto est = run_monte_carlo_scalar(
        100000, 12, 1, [](std::uint64_t, std::uint64_t rep_seed) {
            Rng rng(rep_seed);
            return rng.uniform01();
        });
    CHECK(est.replications == 100000);
    CHECK(std::abs(est.mean - 0.5) < 4.0 * est.std_error);
    // SE of a uniform mean is sqrt(1/12/n).
    CHECK(est.std_error ==
          doctest::Approx(std::sqrt(1.0 / 12.0 / 100000.0)).epsilon(0.05));
}

TEST_CASE("thread count never changes a single bit") {
    auto kernel = [](std::uint64_t, std::uint64_t rep_seed, std::vector<double>& out) {
        Rng rng(rep_seed);
        const double z = rng.normal();
        out[0] = z;
        out[1] = z * z;
        out[2] = rng.uniform01();
    };
    const auto one = run_monte_carlo(50000, 99, 1, 3, kernel);
    const auto eight = run_monte_carlo(50000, 99, 8, 3, kernel);
    REQUIRE(one.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(one[i].mean == eight[i].mean);          // bitwise
        CHECK(one[i].std_error == eight[i].std_error);  // bitwise
    }
    // An odd replication count exercises the ragged final block.
    const auto ragged1 = run_monte_carlo(4097, 99, 1, 3, kernel);
    const auto ragged5 = run_monte_carlo(4097, 99, 5, 3, kernel);
    CHECK(ragged1[0].mean == ragged5[0].mean);
    CHECK(ragged1[2].std_error == ragged5[2].std_error);
}

TEST_CASE("replication seeds are the documented substreams") {
    std::vector<double> seen;
    const auto est = run_monte_carlo_scalar(
        3, 7, 1, [&](std::uint64_t rep, std::uint64_t rep_seed) {
            CHECK(rep_seed == substream_seed(7, rep));
            return static_cast<double>(rep);
        });
    CHECK(est.mean == doctest::Approx(1.0));
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(run_monte_carlo(0, 1, 1, 1, nullptr), std::invalid_argument);
    CHECK_THROWS_AS(run_monte_carlo(
                        10, 1, 0, 1,
                        [](std::uint64_t, std::uint64_t, std::vector<double>&) {}),
                    std::invalid_argument);
}

}  // TEST_SUITE
