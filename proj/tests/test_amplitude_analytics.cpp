#include <doctest.h>

#include <cmath>
#include <vector>

#include "cyclekit/amplitude_analytics.hpp"
#include "cyclekit/quadrature.hpp"

using namespace cyclekit;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kGaussIcv = 1.9130583802711008;  // sqrt(pi / (4 - pi))
}  // namespace

TEST_SUITE("amplitude_analytics") {

TEST_CASE("gaussian amplitude is Rayleigh") {
    const SphericalFamily gauss{GaussianIso{1.0}};
    CHECK(amplitude_pdf(gauss, 1.0) ==
          doctest::Approx(0.60653065971263342).epsilon(1e-13));
    CHECK(amplitude_pdf(gauss, 0.0) == 0.0);
    const double mass = integrate([&](double xi) { return amplitude_pdf(gauss, xi); },
                                  0.0, 12.0);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("closed-form icv against frozen references") {
    CHECK(icv(SphericalFamily{GaussianIso{1.0}}) ==
          doctest::Approx(kGaussIcv).epsilon(1e-14));
    CHECK(icv(SphericalFamily{GaussianIso{17.0}}) ==
          doctest::Approx(kGaussIcv).epsilon(1e-14));  // scale free

    CHECK(icv(SphericalFamily{StudentT{3.0, 1.0}}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(icv(SphericalFamily{StudentT{5.0, 2.0}}) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
    CHECK(icv(SphericalFamily{StudentT{12.0, 1.0}}) ==
          doctest::Approx(1.7190107903488978).epsilon(1e-13));

    CHECK(icv(SphericalFamily{KotzType{1.0, 1.0, 0.5}}) ==
          doctest::Approx(kGaussIcv).epsilon(1e-13));
    CHECK(icv(SphericalFamily{KotzType{1.0, 1.0, 3.0}}) ==
          doctest::Approx(kGaussIcv).epsilon(1e-13));  // rate is pure scale
    CHECK(icv(SphericalFamily{KotzType{2.0, 1.5, 0.8}}) ==
          doctest::Approx(3.2317159634199132).epsilon(1e-13));
    CHECK(icv(SphericalFamily{KotzType{3.0, 0.75, 1.0}}) ==
          doctest::Approx(2.981396809260706).epsilon(1e-13));

    CHECK(icv(SphericalFamily{CircleMixture{1, 2.0, 1.0}}) ==
          doctest::Approx(2.4848915052446154).epsilon(1e-13));
    CHECK(icv(SphericalFamily{CircleMixture{3, 2.0, 1.0}}) ==
          doctest::Approx(2.4848915052446154).epsilon(1e-13));  // m drops out
    CHECK(icv(SphericalFamily{CircleMixture{0, 0.5, 1.5}}) ==
          doctest::Approx(1.9146591883539377).epsilon(1e-13));

    CHECK(icv(SphericalFamily{PolarAmplitude{GaussianAmplitude{0.0, 1.0}}}) ==
          doctest::Approx(1.3236080967885126).epsilon(1e-13));
    CHECK(icv(SphericalFamily{PolarAmplitude{GaussianAmplitude{0.5, 1.0}}}) ==
          doctest::Approx(1.338178123183171).epsilon(1e-13));
    CHECK(icv(SphericalFamily{PolarAmplitude{GaussianAmplitude{4.0, 0.5}}}) ==
          doctest::Approx(8.0000000000000098).epsilon(1e-12));

    CHECK(icv(SphericalFamily{PolarAmplitude{LogNormalAmplitude{0.0, std::sqrt(std::log(2.0))}}}) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(icv(SphericalFamily{PolarAmplitude{LogNormalAmplitude{2.0, 0.5}}}) ==
          doctest::Approx(1.8763826006941651).epsilon(1e-13));

    CHECK(icv(SphericalFamily{PolarAmplitude{GammaAmplitude{2.25, 3.0}}}) ==
          doctest::Approx(1.5).epsilon(1e-13));
    CHECK(icv(SphericalFamily{PolarAmplitude{InverseGammaAmplitude{6.0, 1.0}}}) ==
          doctest::Approx(2.0).epsilon(1e-13));
    CHECK_THROWS_AS((void)icv(SphericalFamily{PolarAmplitude{InverseGammaAmplitude{2.0, 1.0}}}),
                    std::invalid_argument);

    CHECK(icv(SphericalFamily{PolarAmplitude{NakagamiAmplitude{0.5, 1.0}}}) ==
          doctest::Approx(1.3236080967885126).epsilon(1e-13));
    CHECK(icv(SphericalFamily{PolarAmplitude{NakagamiAmplitude{1.0, 2.0}}}) ==
          doctest::Approx(kGaussIcv).epsilon(1e-13));
    CHECK(icv(SphericalFamily{PolarAmplitude{NakagamiAmplitude{3.5, 1.0}}}) ==
          doctest::Approx(3.6813863116146045).epsilon(1e-13));
}

TEST_CASE("quadrature icv agrees with every closed form") {
    const std::vector<SphericalFamily> families = {
        SphericalFamily{GaussianIso{1.0}},
        SphericalFamily{StudentT{5.0, 1.0}},
        SphericalFamily{KotzType{2.0, 1.5, 0.8}},
        SphericalFamily{CircleMixture{1, 2.0, 1.0}},
        SphericalFamily{PolarAmplitude{GaussianAmplitude{4.0, 0.5}}},
        SphericalFamily{PolarAmplitude{NakagamiAmplitude{3.5, 1.0}}},
    };
    for (std::size_t i = 0; i < families.size(); ++i) {
        CAPTURE(i);
        CHECK(icv_numeric(families[i]) ==
              doctest::Approx(icv(families[i])).epsilon(1e-8));
    }
}

TEST_CASE("gumbel icv: frozen value, scale freedom, limits") {
    CHECK(icv(SphericalFamily{GumbelType{1.0, 2.0}}) ==
          doctest::Approx(2.4075422600246744).epsilon(1e-8));
    // The rate parameter only rescales the amplitude.
    CHECK(icv(SphericalFamily{GumbelType{3.0, 2.0}}) ==
          doctest::Approx(icv(SphericalFamily{GumbelType{1.0, 2.0}})).epsilon(1e-8));
    // Flexibility grows with b ...
    CHECK(icv(SphericalFamily{GumbelType{1.0, 4.0}}) >
          icv(SphericalFamily{GumbelType{1.0, 2.0}}));
    // ... and collapses to the Rayleigh/Gaussian value as b -> 0.
    CHECK(icv(SphericalFamily{GumbelType{1.0, 1e-6}}) ==
          doctest::Approx(kGaussIcv).epsilon(1e-5));
}

TEST_CASE("icv orders families by tail weight") {
    // Student-t icv increases with nu toward the Gaussian value.
    double prev = 0.0;
    for (double nu : {3.0, 5.0, 12.0, 60.0}) {
        const double v = icv(SphericalFamily{StudentT{nu, 1.0}});
        CHECK(v > prev);
        CHECK(v < kGaussIcv);
        prev = v;
    }
    // Polar Gaussian icv grows with the concentration k = mu / sigma.
    prev = 0.0;
    for (double mu : {0.0, 0.5, 2.0, 8.0}) {
        const double v = icv(SphericalFamily{PolarAmplitude{GaussianAmplitude{mu, 1.0}}});
        CHECK(v > prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("empirical icv recovers the analytic value with honest errors") {
    const std::vector<SphericalFamily> families = {
        SphericalFamily{GaussianIso{1.0}},
        SphericalFamily{StudentT{5.0, 1.0}},
        SphericalFamily{CircleMixture{1, 2.0, 1.0}},
        SphericalFamily{PolarAmplitude{GammaAmplitude{2.0, 0.7}}},
    };
    for (std::size_t i = 0; i < families.size(); ++i) {
        CAPTURE(i);
        const auto amps = sample_amplitudes(families[i], 200000, 90 + i);
        const EmpiricalIcv est = empirical_icv(amps);
        CHECK(est.n == amps.size());
        CHECK(est.std_error > 0.0);
        CHECK(est.std_error < 0.1);
        CHECK(std::abs(est.value - icv(families[i])) < 4.0 * est.std_error);
    }
    CHECK_THROWS_AS((void)empirical_icv({1.0}), std::invalid_argument);
    CHECK_THROWS_AS((void)empirical_icv({2.0, 2.0, 2.0}), std::invalid_argument);
}

TEST_CASE("delta-method standard error is calibrated") {
    // Repeated small samples: the spread of the estimator should match the
    // reported SE within Monte Carlo slack.
    const SphericalFamily gauss{GaussianIso{1.0}};
    const int reps = 200;
    const std::size_t n = 4000;
    double mean_est = 0.0, mean_se = 0.0, var_est = 0.0;
    std::vector<double> values;
    values.reserve(reps);
    for (int r = 0; r < reps; ++r) {
        const auto amps = sample_amplitudes(gauss, n, 5000 + static_cast<std::uint64_t>(r));
        const EmpiricalIcv est = empirical_icv(amps);
        values.push_back(est.value);
        mean_est += est.value;
        mean_se += est.std_error;
    }
    mean_est /= reps;
    mean_se /= reps;
    for (double v : values) var_est += (v - mean_est) * (v - mean_est);
    const double sd_obs = std::sqrt(var_est / (reps - 1));
    CHECK(sd_obs == doctest::Approx(mean_se).epsilon(0.25));
}

TEST_CASE("joint densities are normalized") {
    const std::vector<SphericalFamily> families = {
        SphericalFamily{GaussianIso{1.0}},
        SphericalFamily{KotzType{2.0, 1.5, 0.8}},
        SphericalFamily{CircleMixture{1, 2.0, 1.0}},
    };
    for (std::size_t i = 0; i < families.size(); ++i) {
        CAPTURE(i);
        CHECK(density_normalization(families[i]) == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("coordinate variance closed forms") {
    CHECK(coordinate_variance(SphericalFamily{GaussianIso{2.0}}) ==
          doctest::Approx(4.0).epsilon(1e-14));
    CHECK(coordinate_variance(SphericalFamily{StudentT{5.0, 2.0}}) ==
          doctest::Approx(4.0).epsilon(1e-14));
    CHECK(coordinate_variance(SphericalFamily{KotzType{1.0, 1.0, 0.5}}) ==
          doctest::Approx(1.0).epsilon(1e-13));
    CHECK(coordinate_variance(SphericalFamily{KotzType{2.0, 1.5, 0.8}}) ==
          doctest::Approx(1.2994667776464518 / 2.0).epsilon(1e-13));
    CHECK(coordinate_variance(SphericalFamily{CircleMixture{1, 2.0, 1.0}}) ==
          doctest::Approx(3.0).epsilon(1e-14));  // sigma^2 + mu^2 / 2
    CHECK_THROWS_AS(
        (void)coordinate_variance(SphericalFamily{CircleMixture{0, 2.0, 1.0}}),
        std::invalid_argument);
    CHECK(coordinate_variance(SphericalFamily{PolarAmplitude{GammaAmplitude{2.0, 0.7}}}) ==
          doctest::Approx(2.0 * 3.0 * 0.49 / 2.0).epsilon(1e-13));
    CHECK(coordinate_variance(SphericalFamily{ScaleMixture{TwoPointRadius{0.5, 1.5, 0.5}}}) ==
          doctest::Approx(0.5 * 0.25 + 0.5 * 2.25).epsilon(1e-14));
    CHECK(coordinate_variance(SphericalFamily{GumbelType{1.0, 2.0}}) ==
          doctest::Approx(1.5257513468432082 / 2.0).epsilon(1e-9));
}

TEST_CASE("scale mixture amplitude pdf integrates to one") {
    const SphericalFamily sm{ScaleMixture{UniformRadius{0.5, 1.5}}};
    QuadratureOptions opts;
    opts.abs_tol = 1e-8;
    opts.rel_tol = 1e-8;
    const double mass =
        integrate([&](double xi) { return amplitude_pdf(sm, xi); }, 0.0, 14.0, opts);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
}

}  // TEST_SUITE
