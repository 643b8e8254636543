#include <doctest.h>

#include <cmath>
#include <vector>

#include "cyclekit/amplitude_analytics.hpp"
#include "cyclekit/innovations.hpp"
#include "cyclekit/quadrature.hpp"
#include "cyclekit/rng.hpp"

using namespace cyclekit;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

struct PairMoments {
    double mx = 0.0, my = 0.0, vx = 0.0, vy = 0.0, cxy = 0.0, x2y2 = 0.0;
};

PairMoments sample_moments(const SphericalFamily& family, int n, std::uint64_t seed) {
    Rng rng(seed);
    PairMoments m;
    for (int i = 0; i < n; ++i) {
        const InnovationPair p = sample_pair(family, rng);
        m.mx += p.x;
        m.my += p.y;
        m.vx += p.x * p.x;
        m.vy += p.y * p.y;
        m.cxy += p.x * p.y;
        m.x2y2 += p.x * p.x * p.y * p.y;
    }
    const double inv = 1.0 / n;
    m.mx *= inv;
    m.my *= inv;
    m.vx *= inv;
    m.vy *= inv;
    m.cxy *= inv;
    m.x2y2 *= inv;
    return m;
}
}  // namespace

TEST_SUITE("innovations") {

TEST_CASE("validation guards family parameters") {
    CHECK_NOTHROW(validate(SphericalFamily{GaussianIso{1.0}}));
    CHECK_THROWS_AS(validate(SphericalFamily{GaussianIso{0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SphericalFamily{StudentT{2.0, 1.0}}), std::invalid_argument);
    CHECK_NOTHROW(validate(SphericalFamily{StudentT{2.5, 1.0}}));
    CHECK_THROWS_AS(validate(SphericalFamily{KotzType{0.0, 1.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SphericalFamily{GumbelType{1.0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(validate(SphericalFamily{CircleMixture{-1, 1.0, 1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate(SphericalFamily{CircleMixture{21, 1.0, 1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        validate(SphericalFamily{PolarAmplitude{NakagamiAmplitude{0.3, 1.0}}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        validate(SphericalFamily{ScaleMixture{UniformRadius{1.5, 0.5}}}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        validate(SphericalFamily{ScaleMixture{TwoPointRadius{0.5, 1.5, 1.5}}}),
        std::invalid_argument);
}

TEST_CASE("joint density frozen references") {
    const SphericalFamily gauss{GaussianIso{1.0}};
    CHECK(density(gauss, 0.0, 0.0) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
    CHECK(density(gauss, 1.0, 1.0) ==
          doctest::Approx(0.058549831524319161).epsilon(1e-14));

    const SphericalFamily t5{StudentT{5.0, 1.0}};
    CHECK(density(t5, 0.0, 0.0) == doctest::Approx(0.26525823848649223).epsilon(1e-13));
    CHECK(density(t5, 1.0, 1.0) == doctest::Approx(0.044381119972427986).epsilon(1e-13));

    // Kotz with shape_n = shape_s = 1 and rate 1/(2 sigma^2) is the Gaussian.
    const SphericalFamily kotz_gauss{KotzType{1.0, 1.0, 0.5}};
    for (double r : {0.0, 0.7, 2.2}) {
        CHECK(density(kotz_gauss, r, 0.3) ==
              doctest::Approx(density(gauss, r, 0.3)).epsilon(1e-12));
    }
}

TEST_CASE("rotation invariance holds exactly where claimed") {
    std::vector<SphericalFamily> invariant = {
        SphericalFamily{GaussianIso{1.3}},
        SphericalFamily{StudentT{4.5, 0.8}},
        SphericalFamily{KotzType{2.0, 1.5, 0.8}},
        SphericalFamily{GumbelType{1.0, 2.0}},
        SphericalFamily{PolarAmplitude{GammaAmplitude{2.0, 0.7}}},
    };
    Rng rng(31);
    for (const auto& family : invariant) {
        CHECK(rotation_invariant(family));
        for (int i = 0; i < 25; ++i) {
            const double x = rng.uniform(-2.0, 2.0);
            const double y = rng.uniform(-2.0, 2.0);
            const double angle = rng.uniform(0.0, 2.0 * kPi);
            const double xr = x * std::cos(angle) - y * std::sin(angle);
            const double yr = x * std::sin(angle) + y * std::cos(angle);
            CHECK(density(family, x, y) ==
                  doctest::Approx(density(family, xr, yr)).epsilon(1e-10));
        }
    }
    CHECK_FALSE(rotation_invariant(SphericalFamily{CircleMixture{1, 2.0, 1.0}}));
    CHECK_FALSE(rotation_invariant(SphericalFamily{ScaleMixture{UniformRadius{0.5, 1.5}}}));

    // The scale mixture is uncorrelated yet not rotation invariant: its
    // density at a point on the axis differs from the 45-degree rotation.
    const SphericalFamily sm{ScaleMixture{TwoPointRadius{0.5, 1.5, 0.5}}};
    const double r = 1.2;
    const double on_axis = density(sm, r, 0.0);
    const double diagonal = density(sm, r / std::sqrt(2.0), r / std::sqrt(2.0));
    CHECK(std::abs(on_axis - diagonal) > 1e-3);
}

TEST_CASE("sampled coordinate moments match coordinate_variance") {
    struct Case {
        SphericalFamily family;
        const char* name;
    };
    const Case cases[] = {
        {SphericalFamily{GaussianIso{1.0}}, "gaussian"},
        {SphericalFamily{StudentT{5.0, 1.0}}, "student_t"},
        {SphericalFamily{KotzType{2.0, 1.5, 0.8}}, "kotz"},
        {SphericalFamily{GumbelType{1.0, 2.0}}, "gumbel"},
        {SphericalFamily{CircleMixture{1, 2.0, 1.0}}, "circle_mixture"},
        {SphericalFamily{PolarAmplitude{GaussianAmplitude{4.0, 0.5}}}, "polar"},
        {SphericalFamily{ScaleMixture{TwoPointRadius{0.5, 1.5, 0.5}}}, "scale_mixture"},
    };
    const int n = 300000;
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const double v = coordinate_variance(c.family);
        const PairMoments m = sample_moments(c.family, n, 7001);
        const double se_mean = std::sqrt(v / n);
        CHECK(std::abs(m.mx) < 5.0 * se_mean);
        CHECK(std::abs(m.my) < 5.0 * se_mean);
        CHECK(m.vx == doctest::Approx(v).epsilon(0.05));
        CHECK(m.vy == doctest::Approx(v).epsilon(0.05));
        CHECK(std::abs(m.cxy) < 5.0 * v / std::sqrt(static_cast<double>(n)));
    }
}

TEST_CASE("coordinates are independent only in the gaussian case") {
    // E(x^2 y^2) / (E x^2 E y^2) equals 1 under independence; the bivariate t
    // shares its mixing weight across coordinates, pushing the ratio to
    // (nu - 2) / (nu - 4).
    const int n = 400000;
    const PairMoments g = sample_moments(SphericalFamily{GaussianIso{1.0}}, n, 881);
    const double gauss_ratio = g.x2y2 / (g.vx * g.vy);
    CHECK(gauss_ratio == doctest::Approx(1.0).epsilon(0.05));

    const PairMoments t = sample_moments(SphericalFamily{StudentT{12.0, 1.0}}, n, 882);
    const double t_ratio = t.x2y2 / (t.vx * t.vy);
    CHECK(t_ratio == doctest::Approx(1.25).epsilon(0.08));
}

TEST_CASE("sampler matches its own density through amplitude thresholds") {
    const std::vector<SphericalFamily> families = {
        SphericalFamily{GaussianIso{1.0}},
        SphericalFamily{StudentT{5.0, 1.0}},
        SphericalFamily{KotzType{2.0, 1.5, 0.8}},
        SphericalFamily{GumbelType{1.0, 2.0}},
        SphericalFamily{CircleMixture{1, 2.0, 1.0}},
        SphericalFamily{PolarAmplitude{GaussianAmplitude{4.0, 0.5}}},
        SphericalFamily{ScaleMixture{TwoPointRadius{0.5, 1.5, 0.5}}},
    };
    const std::size_t n = 200000;
    int family_index = 0;
    for (const auto& family : families) {
        CAPTURE(family_index);
        const auto amps = sample_amplitudes(family, n, 4242);
        double scale = 0.0;
        for (double a : amps) scale += a;
        scale /= static_cast<double>(n);
        for (double q : {0.5, 1.0, 1.8}) {
            const double threshold = q * scale;
            const double expected =
                integrate([&](double xi) { return amplitude_pdf(family, xi); }, 0.0,
                          threshold);
            double count = 0.0;
            for (double a : amps) count += (a <= threshold) ? 1.0 : 0.0;
            const double frac = count / static_cast<double>(n);
            const double se =
                std::sqrt(std::max(expected * (1.0 - expected), 1e-6) / static_cast<double>(n));
            CHECK(std::abs(frac - expected) < 5.0 * se);
        }
        ++family_index;
    }
}

TEST_CASE("circle mixture amplitude is Rice for every component count") {
    const CircleMixture base{1, 2.0, 1.0};
    CHECK(circle_mixture_amplitude_pdf(base, 1.5) ==
          doctest::Approx(0.32167058981215592).epsilon(1e-12));
    // Component count m changes the angular layout, never the amplitude law.
    for (double xi : {0.2, 0.9, 1.7, 3.4}) {
        const double m1 = circle_mixture_amplitude_pdf(CircleMixture{1, 2.0, 1.0}, xi);
        const double m3 = circle_mixture_amplitude_pdf(CircleMixture{3, 2.0, 1.0}, xi);
        CHECK(m1 == doctest::Approx(m3).epsilon(1e-14));
        // And the general integrate-the-joint-density route agrees.
        CHECK(amplitude_pdf(SphericalFamily{CircleMixture{2, 2.0, 1.0}}, xi) ==
              doctest::Approx(m1).epsilon(1e-8));
    }
}

TEST_CASE("radius moments and amplitude law pdfs") {
    CHECK(radius_moment(RadiusLaw{UniformRadius{0.5, 1.5}}, 2) ==
          doctest::Approx((std::pow(1.5, 3.0) - std::pow(0.5, 3.0)) / 3.0).epsilon(1e-14));
    CHECK(radius_moment(RadiusLaw{TwoPointRadius{0.5, 1.5, 0.25}}, 4) ==
          doctest::Approx(0.25 * std::pow(0.5, 4.0) + 0.75 * std::pow(1.5, 4.0))
              .epsilon(1e-14));

    // |N(0,1)| amplitude pdf is the half normal.
    const AmplitudeLaw folded{GaussianAmplitude{0.0, 1.0}};
    CHECK(amplitude_law_pdf(folded, 0.8) ==
          doctest::Approx(std::sqrt(2.0 / kPi) * std::exp(-0.32)).epsilon(1e-13));
    // Nakagami with shape 1/2 is also the half normal (unit spread).
    const AmplitudeLaw naka{NakagamiAmplitude{0.5, 1.0}};
    CHECK(amplitude_law_pdf(naka, 0.8) ==
          doctest::Approx(amplitude_law_pdf(folded, 0.8)).epsilon(1e-12));
    // Densities vanish for negative arguments.
    CHECK(amplitude_law_pdf(folded, -0.5) == 0.0);
}

}  // TEST_SUITE
