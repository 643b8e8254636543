#include <doctest.h>

#include <cmath>
#include <vector>

#include "cyclekit/quadrature.hpp"
#include "cyclekit/spectral.hpp"

using namespace cyclekit;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

HannanSpec one_component(double lambda, double rho) {
    HannanSpec spec;
    spec.components.push_back(
        HannanComponent{Frequency(lambda), {rho}, {}, SphericalFamily{GaussianIso{1.0}}});
    return spec;
}

double psd_at(const CycleSpec& spec, double omega) {
    const auto curve = theoretical_psd(psd_components(spec), {omega});
    return curve.value.front();
}
}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("frequency folding uses evenness and periodicity") {
    CHECK(fold_frequency(0.3) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(fold_frequency(-0.3) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(fold_frequency(kPi + 0.5) == doctest::Approx(kPi - 0.5).epsilon(1e-12));
    CHECK(fold_frequency(2.0 * kPi + 0.3) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(fold_frequency(3.5 * kPi) == doctest::Approx(0.5 * kPi).epsilon(1e-12));
    CHECK(fold_frequency(0.0) == 0.0);
    CHECK(fold_frequency(kPi) == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("composed spectrum is the folded average of shifted components") {
    const double lambda = kPi / 6.0;
    const double rho = 0.9;
    const CycleSpec spec{one_component(lambda, rho)};
    const auto comps = psd_components(spec);
    const auto base = comps[0].base_psd;
    for (double w : {0.05, lambda, 1.1, 2.9, kPi}) {
        const double expected =
            0.5 * (base(fold_frequency(w - lambda)) + base(fold_frequency(w + lambda)));
        CHECK(psd_at(spec, w) == doctest::Approx(expected).epsilon(1e-12));
    }
    // Even symmetry and positivity on a sweep.
    for (int i = 0; i <= 40; ++i) {
        const double w = kPi * i / 40.0;
        const double v = psd_at(spec, w);
        CHECK(v >= 0.0);
        const auto neg = theoretical_psd(comps, {-w});
        CHECK(neg.value.front() == doctest::Approx(v).epsilon(1e-12));
    }
}

TEST_CASE("composition is additive across components") {
    HannanSpec two = one_component(kPi / 6.0, 0.9);
    two.components.push_back(HannanComponent{Frequency(kPi / 2.0), {0.5}, {},
                                             SphericalFamily{GaussianIso{1.0}}});
    const CycleSpec both{two};
    const CycleSpec first{one_component(kPi / 6.0, 0.9)};
    const CycleSpec second{one_component(kPi / 2.0, 0.5)};
    for (double w : {0.2, 1.0, 2.5})
        CHECK(psd_at(both, w) ==
              doctest::Approx(psd_at(first, w) + psd_at(second, w)).epsilon(1e-12));
}

TEST_CASE("integrated spectrum returns the lag-zero autocovariance") {
    const std::vector<CycleSpec> specs = {
        CycleSpec{one_component(kPi / 6.0, 0.9)},
        CycleSpec{NthOrderSpec{2, 0.6, Frequency(1.1), 1.0}},
        CycleSpec{StochasticCycleSpec{0.5, Frequency(2.0), SphericalFamily{GaussianIso{1.0}}}},
    };
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CAPTURE(i);
        const auto comps = psd_components(specs[i]);
        const double integral =
            integrate([&](double w) { return theoretical_psd(comps, {w}).value.front(); },
                      -kPi, kPi, QuadratureOptions{1e-9, 1e-9, 8000});
        CHECK(integral / (2.0 * kPi) ==
              doctest::Approx(theoretical_acf(specs[i], 0)).epsilon(1e-6));
    }
}

TEST_CASE("sharper filtering concentrates spectral mass at the carrier") {
    const double lambda = 1.1;
    const CycleSpec n1{NthOrderSpec{1, 0.6, Frequency(lambda), 1.0}};
    const CycleSpec n3{NthOrderSpec{3, 0.6, Frequency(lambda), 1.0}};
    CHECK(psd_at(n3, lambda) > psd_at(n1, lambda));

    // With unit innovation variance the repeated filter's spectrum is the
    // literal cube of the first-order spectrum; the order field of
    // PsdComponent expresses exactly that composition.
    const auto first = psd_components(n1);
    PsdComponent cubed{first[0].base_psd, first[0].lambda, 3};
    const auto direct = psd_components(n3);
    for (double w : {0.2, lambda, 2.8}) {
        const double via_order = theoretical_psd({cubed}, {w}).value.front();
        const double via_model = theoretical_psd(direct, {w}).value.front();
        CHECK(via_order == doctest::Approx(via_model).epsilon(1e-12));
    }
}

TEST_CASE("sample autocovariance of a tiny hand-checked path") {
    SeriesPath path;
    path.values = {1.0, 2.0, 3.0, 4.0};
    const auto acf = empirical_acf(path, 3);
    REQUIRE(acf.size() == 4);
    CHECK(acf[0] == doctest::Approx(1.25).epsilon(1e-14));
    CHECK(acf[1] == doctest::Approx(0.3125).epsilon(1e-14));
    CHECK(acf[3] == doctest::Approx(-0.5625).epsilon(1e-14));

    SeriesPath zeros;
    zeros.values.assign(50, 0.0);
    for (double v : empirical_acf(zeros, 5)) CHECK(v == 0.0);

    CHECK_THROWS_AS((void)empirical_acf(path, 4), std::invalid_argument);
}

TEST_CASE("sample autocovariance of a pure sinusoid") {
    const double lambda = 2.0 * kPi / 25.0;
    SeriesPath path;
    const int n = 20000;
    path.values.reserve(n);
    for (int t = 0; t < n; ++t) path.values.push_back(std::sin(lambda * t));
    const auto acf = empirical_acf(path, 10);
    for (int tau = 0; tau <= 10; ++tau)
        CHECK(acf[static_cast<std::size_t>(tau)] ==
              doctest::Approx(0.5 * std::cos(lambda * tau)).epsilon(2e-3));
}

TEST_CASE("periodogram peaks at the tone and is flat for white noise") {
    const int n = 256;
    const double w0 = 2.0 * kPi * 32.0 / n;
    SeriesPath tone;
    tone.values.reserve(n);
    for (int t = 0; t < n; ++t) tone.values.push_back(std::cos(w0 * t));
    std::vector<double> grid;
    for (int k = 1; k < n / 2; ++k) grid.push_back(2.0 * kPi * k / n);
    const SpectralCurve curve = periodogram(tone, grid);
    std::size_t best = 0;
    for (std::size_t i = 1; i < curve.value.size(); ++i)
        if (curve.value[i] > curve.value[best]) best = i;
    CHECK(curve.omega[best] == doctest::Approx(w0).epsilon(1e-12));
    CHECK(curve.value[best] == doctest::Approx(n / 4.0).epsilon(1e-6));

    // White noise: E I(w) = sigma^2 = 1 under the adopted convention.
    Rng rng(6);
    const int paths = 60;
    double mean = 0.0;
    int count = 0;
    for (int p = 0; p < paths; ++p) {
        SeriesPath noise;
        noise.values.reserve(512);
        for (int t = 0; t < 512; ++t) noise.values.push_back(rng.normal());
        std::vector<double> g;
        for (int k = 16; k < 256; k += 16) g.push_back(2.0 * kPi * k / 512.0);
        const SpectralCurve c = periodogram(noise, g);
        for (double v : c.value) {
            mean += v;
            ++count;
        }
    }
    mean /= count;
    CHECK(mean == doctest::Approx(1.0).epsilon(0.08));
}

}  // TEST_SUITE
