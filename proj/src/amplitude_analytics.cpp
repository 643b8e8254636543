#include "cyclekit/amplitude_analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "cyclekit/quadrature.hpp"
#include "cyclekit/special_functions.hpp"

namespace cyclekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

double sq(double x) { return x * x; }

// First two moments of the amplitude via quadrature of amplitude_pdf.
void amplitude_moments_numeric(const SphericalFamily& family, double* m1, double* m2) {
    QuadratureOptions opts;
    opts.abs_tol = 1e-11;
    opts.rel_tol = 1e-10;
    *m1 = integrate_upper(
        [&family](double xi) { return xi * amplitude_pdf(family, xi); }, 0.0, opts);
    *m2 = integrate_upper(
        [&family](double xi) { return xi * xi * amplitude_pdf(family, xi); }, 0.0, opts);
}

double icv_from_moments(double m1, double m2) {
    const double var = m2 - m1 * m1;
    if (!(var > 0.0))
        throw std::invalid_argument("icv: amplitude variance is not positive");
    return m1 / std::sqrt(var);
}

double rice_mean(double mu, double sigma) {
    // E(AMP) for Rice(mu, sigma), written with scaled Bessels so large
    // mu/sigma cannot overflow.
    const double k = mu / sigma;
    const double x = 0.25 * k * k;
    return sigma * std::sqrt(0.5 * kPi) *
           ((1.0 + 2.0 * x) * bessel_i0_scaled(x) + 2.0 * x * bessel_i1_scaled(x));
}

struct ClosedFormIcv {
    double operator()(const GaussianIso&) const { return std::sqrt(kPi / (4.0 - kPi)); }

    double operator()(const StudentT& t) const {
        // ratio = E(AMP^2) / E(AMP)^2 = 2 (nu-2) Gamma((nu-2)/2)^2 / (pi Gamma((nu-1)/2)^2)
        const double log_g = 2.0 * (std::lgamma(0.5 * (t.nu - 2.0)) -
                                    std::lgamma(0.5 * (t.nu - 1.0)));
        const double ratio = 2.0 * (t.nu - 2.0) * std::exp(log_g) / kPi;
        return 1.0 / std::sqrt(ratio - 1.0);
    }

    double operator()(const KotzType& k) const {
        const double a = k.shape_n / k.shape_s;
        const double h = 0.5 / k.shape_s;
        // E(AMP^2) E(AMP)^{-2} = Gamma(a+2h) Gamma(a) / Gamma(a+h)^2
        const double ratio = std::exp(std::lgamma(a + 2.0 * h) + std::lgamma(a) -
                                      2.0 * std::lgamma(a + h));
        return 1.0 / std::sqrt(ratio - 1.0);
    }

    double operator()(const GumbelType&) const {
        throw std::logic_error("GumbelType has no closed-form icv");
    }

    double operator()(const CircleMixture& c) const {
        // Amplitude is Rice(mu, sigma) for every component count.
        const double m1 = rice_mean(c.mu, c.sigma);
        const double m2 = c.sigma * c.sigma * (2.0 + sq(c.mu / c.sigma));
        return icv_from_moments(m1, m2);
    }

    double operator()(const PolarAmplitude& p) const {
        struct LawIcv {
            double operator()(const GaussianAmplitude& g) const {
                const double k = g.mu / g.sigma;
                const double c = k * std::erf(k / std::sqrt(2.0)) +
                                 std::sqrt(2.0 / kPi) * std::exp(-0.5 * k * k);
                return c / std::sqrt(k * k + 1.0 - c * c);
            }
            double operator()(const LogNormalAmplitude& l) const {
                return 1.0 / std::sqrt(std::expm1(l.sigma * l.sigma));
            }
            double operator()(const GammaAmplitude& g) const { return std::sqrt(g.shape); }
            double operator()(const InverseGammaAmplitude& g) const {
                if (!(g.shape > 2.0))
                    throw std::invalid_argument(
                        "icv: inverse-gamma amplitude needs shape > 2 for a finite variance");
                return std::sqrt(g.shape - 2.0);
            }
            double operator()(const NakagamiAmplitude& n) const {
                const double ratio =
                    n.shape * std::exp(2.0 * (std::lgamma(n.shape) -
                                              std::lgamma(n.shape + 0.5)));
                return 1.0 / std::sqrt(ratio - 1.0);
            }
        };
        return std::visit(LawIcv{}, p.law);
    }

    double operator()(const ScaleMixture&) const {
        throw std::logic_error("ScaleMixture has no closed-form icv");
    }
};

}  // namespace

double amplitude_pdf(const SphericalFamily& family, double xi) {
    validate(family);
    if (xi < 0.0) return 0.0;

    if (const auto* polar = std::get_if<PolarAmplitude>(&family))
        return amplitude_law_pdf(polar->law, xi);
    if (const auto* circle = std::get_if<CircleMixture>(&family))
        return circle_mixture_amplitude_pdf(*circle, xi);
    if (rotation_invariant(family))
        return kTwoPi * xi * density(family, xi, 0.0);

    if (xi == 0.0) return 0.0;
    QuadratureOptions opts;
    opts.abs_tol = 1e-12;
    opts.rel_tol = 1e-9;
    const double angular = integrate(
        [&family, xi](double theta) {
            return density(family, xi * std::cos(theta), xi * std::sin(theta));
        },
        0.0, kTwoPi, opts);
    return xi * angular;
}

double icv(const SphericalFamily& family) {
    validate(family);
    if (std::holds_alternative<GumbelType>(family) ||
        std::holds_alternative<ScaleMixture>(family))
        return icv_numeric(family);
    return std::visit(ClosedFormIcv{}, family);
}

double icv_numeric(const SphericalFamily& family) {
    validate(family);
    double m1 = 0.0;
    double m2 = 0.0;
    amplitude_moments_numeric(family, &m1, &m2);
    return icv_from_moments(m1, m2);
}

EmpiricalIcv empirical_icv(const std::vector<double>& amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n < 2) throw std::invalid_argument("empirical_icv: need at least two observations");

    double mean = 0.0;
    for (double x : amplitudes) mean += x;
    mean /= static_cast<double>(n);

    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : amplitudes) {
        const double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    if (!(m2 > 0.0))
        throw std::invalid_argument("empirical_icv: sample variance is zero");

    const double var_unbiased = m2 * static_cast<double>(n) / static_cast<double>(n - 1);
    const double sd = std::sqrt(var_unbiased);

    EmpiricalIcv out;
    out.n = n;
    out.value = mean / sd;
    // Delta method for mean/sd in terms of central moments.
    const double var_theta =
        (1.0 + mean * mean * (m4 - m2 * m2) / (4.0 * m2 * m2 * m2) -
         mean * m3 / (m2 * m2)) /
        static_cast<double>(n);
    out.std_error = std::sqrt(std::max(var_theta, 0.0));
    return out;
}

std::vector<double> sample_amplitudes(const SphericalFamily& family, std::size_t n,
                                      std::uint64_t seed) {
    validate(family);
    Rng rng(seed);
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const InnovationPair pair = sample_pair(family, rng);
        out.push_back(std::hypot(pair.x, pair.y));
    }
    return out;
}

double coordinate_variance(const SphericalFamily& family) {
    validate(family);
    struct Visitor {
        const SphericalFamily& family;
        double operator()(const GaussianIso& g) const { return g.sigma * g.sigma; }
        double operator()(const StudentT& t) const { return t.sigma * t.sigma; }
        double operator()(const KotzType& k) const {
            // E(AMP^2) = r^{-1/s} Gamma(a + 1/s) / Gamma(a), a = N/s.
            const double a = k.shape_n / k.shape_s;
            const double second = std::pow(k.rate_r, -1.0 / k.shape_s) *
                                  std::exp(std::lgamma(a + 1.0 / k.shape_s) - std::lgamma(a));
            return 0.5 * second;
        }
        double operator()(const GumbelType&) const {
            QuadratureOptions opts;
            opts.abs_tol = 1e-11;
            opts.rel_tol = 1e-10;
            const double second = integrate_upper(
                [this](double xi) { return xi * xi * amplitude_pdf(family, xi); }, 0.0,
                opts);
            return 0.5 * second;
        }
        double operator()(const CircleMixture& c) const {
            if (c.m < 1)
                throw std::invalid_argument(
                    "coordinate_variance: CircleMixture needs m >= 1 for isotropic "
                    "second moments");
            return c.sigma * c.sigma + 0.5 * c.mu * c.mu;
        }
        double operator()(const PolarAmplitude& p) const {
            struct SecondMoment {
                double operator()(const GaussianAmplitude& g) const {
                    return g.mu * g.mu + g.sigma * g.sigma;
                }
                double operator()(const LogNormalAmplitude& l) const {
                    return std::exp(2.0 * l.mu + 2.0 * l.sigma * l.sigma);
                }
                double operator()(const GammaAmplitude& g) const {
                    return g.scale * g.scale * g.shape * (g.shape + 1.0);
                }
                double operator()(const InverseGammaAmplitude& g) const {
                    if (!(g.shape > 2.0))
                        throw std::invalid_argument(
                            "coordinate_variance: inverse-gamma amplitude needs shape > 2");
                    return g.scale * g.scale / ((g.shape - 1.0) * (g.shape - 2.0));
                }
                double operator()(const NakagamiAmplitude& n) const { return n.spread; }
            };
            return 0.5 * std::visit(SecondMoment{}, p.law);
        }
        double operator()(const ScaleMixture& s) const { return radius_moment(s.law, 2); }
    };
    return std::visit(Visitor{family}, family);
}

double density_normalization(const SphericalFamily& family) {
    validate(family);
    // Genuine nested polar quadrature of the joint density; no family is
    // allowed to shortcut through its known angular structure here.
    QuadratureOptions inner_opts;
    inner_opts.abs_tol = 1e-12;
    inner_opts.rel_tol = 1e-9;
    QuadratureOptions outer_opts;
    outer_opts.abs_tol = 1e-10;
    outer_opts.rel_tol = 1e-8;
    return integrate_upper(
        [&family, &inner_opts](double xi) {
            if (xi == 0.0) return 0.0;
            const double angular = integrate(
                [&family, xi](double theta) {
                    return density(family, xi * std::cos(theta), xi * std::sin(theta));
                },
                0.0, kTwoPi, inner_opts);
            return xi * angular;
        },
        0.0, outer_opts);
}

}  // namespace cyclekit
