#include "cyclekit/innovations.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "cyclekit/quadrature.hpp"
#include "cyclekit/special_functions.hpp"

namespace cyclekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

double sq(double x) { return x * x; }

double gaussian2d(double dx, double dy, double sigma) {
    return std::exp(-0.5 * (dx * dx + dy * dy) / (sigma * sigma)) /
           (kTwoPi * sigma * sigma);
}

}  // namespace

double amplitude_law_pdf(const AmplitudeLaw& law, double r) {
    if (r < 0.0) return 0.0;
    struct Visitor {
        double r;
        double operator()(const GaussianAmplitude& g) const {
            const double c = 1.0 / (g.sigma * std::sqrt(kTwoPi));
            return c * (std::exp(-0.5 * sq((r - g.mu) / g.sigma)) +
                        std::exp(-0.5 * sq((r + g.mu) / g.sigma)));
        }
        double operator()(const LogNormalAmplitude& l) const {
            if (r <= 0.0) return 0.0;
            const double z = (std::log(r) - l.mu) / l.sigma;
            return std::exp(-0.5 * z * z) / (r * l.sigma * std::sqrt(kTwoPi));
        }
        double operator()(const GammaAmplitude& g) const {
            if (r <= 0.0) return 0.0;
            return std::exp((g.shape - 1.0) * std::log(r / g.scale) - r / g.scale -
                            std::lgamma(g.shape)) /
                   g.scale;
        }
        double operator()(const InverseGammaAmplitude& g) const {
            if (r <= 0.0) return 0.0;
            return std::exp(g.shape * std::log(g.scale) -
                            (g.shape + 1.0) * std::log(r) - g.scale / r -
                            std::lgamma(g.shape));
        }
        double operator()(const NakagamiAmplitude& n) const {
            if (r <= 0.0) return 0.0;
            return 2.0 * std::exp(n.shape * std::log(n.shape / n.spread) +
                                  (2.0 * n.shape - 1.0) * std::log(r) -
                                  n.shape * r * r / n.spread - std::lgamma(n.shape));
        }
    };
    return std::visit(Visitor{r}, law);
}

namespace {

double sample_amplitude(const AmplitudeLaw& law, Rng& rng) {
    struct Visitor {
        Rng& rng;
        double operator()(const GaussianAmplitude& g) const {
            return std::abs(g.mu + g.sigma * rng.normal());
        }
        double operator()(const LogNormalAmplitude& l) const {
            return std::exp(l.mu + l.sigma * rng.normal());
        }
        double operator()(const GammaAmplitude& g) const {
            return g.scale * rng.gamma(g.shape);
        }
        double operator()(const InverseGammaAmplitude& g) const {
            return g.scale / rng.gamma(g.shape);
        }
        double operator()(const NakagamiAmplitude& n) const {
            return std::sqrt(rng.gamma(n.shape) * n.spread / n.shape);
        }
    };
    return std::visit(Visitor{rng}, law);
}

// Marginal density of one coordinate of a scale mixture, E_R[phi(x / R) / R].
double scale_mixture_marginal(const RadiusLaw& law, double x) {
    auto normal_pdf = [](double v, double s) {
        return std::exp(-0.5 * sq(v / s)) / (s * std::sqrt(kTwoPi));
    };
    if (const auto* two = std::get_if<TwoPointRadius>(&law)) {
        return two->prob_r1 * normal_pdf(x, two->r1) +
               (1.0 - two->prob_r1) * normal_pdf(x, two->r2);
    }
    const auto& uni = std::get<UniformRadius>(law);
    QuadratureOptions opts;
    opts.abs_tol = 1e-13;
    opts.rel_tol = 1e-11;
    const double value = integrate(
        [&normal_pdf, x](double r) { return normal_pdf(x, r); }, uni.lo, uni.hi, opts);
    return value / (uni.hi - uni.lo);
}

}  // namespace

void validate(const SphericalFamily& family) {
    struct Visitor {
        void operator()(const GaussianIso& g) const {
            if (!(g.sigma > 0.0)) throw std::invalid_argument("GaussianIso: sigma must be positive");
        }
        void operator()(const StudentT& t) const {
            if (!(t.nu > 2.0))
                throw std::invalid_argument(
                    "StudentT: nu must exceed 2 so the coordinate variance is finite");
            if (!(t.sigma > 0.0)) throw std::invalid_argument("StudentT: sigma must be positive");
        }
        void operator()(const KotzType& k) const {
            if (!(k.shape_n > 0.0) || !(k.shape_s > 0.0) || !(k.rate_r > 0.0))
                throw std::invalid_argument("KotzType: parameters must be positive");
        }
        void operator()(const GumbelType& g) const {
            if (!(g.a > 0.0) || !(g.b > 0.0))
                throw std::invalid_argument("GumbelType: parameters must be positive");
        }
        void operator()(const CircleMixture& c) const {
            if (c.m < 0) throw std::invalid_argument("CircleMixture: m must be >= 0");
            if (c.m > 20) throw std::invalid_argument("CircleMixture: m too large");
            if (!(c.mu >= 0.0) || !(c.sigma > 0.0))
                throw std::invalid_argument("CircleMixture: mu >= 0 and sigma > 0 required");
        }
        void operator()(const PolarAmplitude& p) const {
            struct LawVisitor {
                void operator()(const GaussianAmplitude& g) const {
                    if (!(g.sigma > 0.0) || !(g.mu >= 0.0))
                        throw std::invalid_argument("GaussianAmplitude: mu >= 0, sigma > 0 required");
                }
                void operator()(const LogNormalAmplitude& l) const {
                    if (!(l.sigma > 0.0)) throw std::invalid_argument("LogNormalAmplitude: sigma must be positive");
                }
                void operator()(const GammaAmplitude& g) const {
                    if (!(g.shape > 0.0) || !(g.scale > 0.0))
                        throw std::invalid_argument("GammaAmplitude: parameters must be positive");
                }
                void operator()(const InverseGammaAmplitude& g) const {
                    if (!(g.shape > 0.0) || !(g.scale > 0.0))
                        throw std::invalid_argument("InverseGammaAmplitude: parameters must be positive");
                }
                void operator()(const NakagamiAmplitude& n) const {
                    if (!(n.shape >= 0.5) || !(n.spread > 0.0))
                        throw std::invalid_argument("NakagamiAmplitude: shape >= 1/2 and spread > 0 required");
                }
            };
            std::visit(LawVisitor{}, p.law);
        }
        void operator()(const ScaleMixture& s) const {
            if (const auto* two = std::get_if<TwoPointRadius>(&s.law)) {
                if (!(two->r1 > 0.0) || !(two->r2 > 0.0) || two->prob_r1 < 0.0 ||
                    two->prob_r1 > 1.0)
                    throw std::invalid_argument("TwoPointRadius: radii > 0 and prob in [0,1] required");
            } else {
                const auto& uni = std::get<UniformRadius>(s.law);
                if (!(uni.lo >= 0.0) || !(uni.hi > uni.lo) || !std::isfinite(uni.hi))
                    throw std::invalid_argument("UniformRadius: need 0 <= lo < hi < infinity");
            }
        }
    };
    std::visit(Visitor{}, family);
}

InnovationPair sample_pair(const SphericalFamily& family, Rng& rng) {
    struct Visitor {
        Rng& rng;
        InnovationPair operator()(const GaussianIso& g) const {
            return {g.sigma * rng.normal(), g.sigma * rng.normal()};
        }
        InnovationPair operator()(const StudentT& t) const {
            const double z1 = rng.normal();
            const double z2 = rng.normal();
            const double w = rng.chi_square(t.nu) / t.nu;
            const double scale = t.sigma * std::sqrt((t.nu - 2.0) / t.nu) / std::sqrt(w);
            return {scale * z1, scale * z2};
        }
        InnovationPair operator()(const KotzType& k) const {
            const double g = rng.gamma(k.shape_n / k.shape_s);
            const double amp = std::pow(g / k.rate_r, 1.0 / (2.0 * k.shape_s));
            const double phi = kTwoPi * rng.uniform01();
            return {amp * std::cos(phi), amp * std::sin(phi)};
        }
        InnovationPair operator()(const GumbelType& g) const {
            const double u = rng.uniform01();
            // Inverse of F(xi) = (exp(-b e^{-a xi^2}) - e^{-b}) / (1 - e^{-b});
            // expm1/log1p keep the b -> 0 Rayleigh limit stable.
            const double v = (1.0 - u) * (-std::expm1(-g.b));
            const double t = -std::log1p(-v) / g.b;
            const double amp = std::sqrt(-std::log(t) / g.a);
            const double phi = kTwoPi * rng.uniform01();
            return {amp * std::cos(phi), amp * std::sin(phi)};
        }
        InnovationPair operator()(const CircleMixture& c) const {
            const int count = 1 << (c.m + 1);
            int j = static_cast<int>(rng.uniform01() * count);
            if (j >= count) j = count - 1;
            const double angle = 0.5 * kPi - kTwoPi * j / count;
            return {c.mu * std::cos(angle) + c.sigma * rng.normal(),
                    c.mu * std::sin(angle) + c.sigma * rng.normal()};
        }
        InnovationPair operator()(const PolarAmplitude& p) const {
            const double amp = sample_amplitude(p.law, rng);
            const double phi = kTwoPi * rng.uniform01();
            return {amp * std::cos(phi), amp * std::sin(phi)};
        }
        InnovationPair operator()(const ScaleMixture& s) const {
            auto draw_radius = [this](const RadiusLaw& law) {
                if (const auto* two = std::get_if<TwoPointRadius>(&law))
                    return rng.uniform01() < two->prob_r1 ? two->r1 : two->r2;
                const auto& uni = std::get<UniformRadius>(law);
                return rng.uniform(uni.lo, uni.hi);
            };
            const double x = draw_radius(s.law) * rng.normal();
            const double y = draw_radius(s.law) * rng.normal();
            return {x, y};
        }
    };
    return std::visit(Visitor{rng}, family);
}

double density(const SphericalFamily& family, double x, double y) {
    struct Visitor {
        double x;
        double y;
        double operator()(const GaussianIso& g) const { return gaussian2d(x, y, g.sigma); }
        double operator()(const StudentT& t) const {
            const double c = t.sigma * t.sigma * (t.nu - 2.0);
            return (t.nu / (kTwoPi * c)) *
                   std::pow(1.0 + (x * x + y * y) / c, -0.5 * (t.nu + 2.0));
        }
        double operator()(const KotzType& k) const {
            const double r_sq = x * x + y * y;
            const double log_norm = std::log(k.shape_s) +
                                    (k.shape_n / k.shape_s) * std::log(k.rate_r) -
                                    std::log(kPi) - std::lgamma(k.shape_n / k.shape_s);
            if (r_sq == 0.0) {
                if (k.shape_n < 1.0) return std::numeric_limits<double>::infinity();
                return k.shape_n == 1.0 ? std::exp(log_norm) : 0.0;
            }
            return std::exp(log_norm + (k.shape_n - 1.0) * std::log(r_sq) -
                            k.rate_r * std::pow(r_sq, k.shape_s));
        }
        double operator()(const GumbelType& g) const {
            const double r_sq = x * x + y * y;
            const double e = std::exp(-g.a * r_sq);
            return g.a * g.b * e * std::exp(-g.b * e) / (kPi * (-std::expm1(-g.b)));
        }
        double operator()(const CircleMixture& c) const {
            const int count = 1 << (c.m + 1);
            double acc = 0.0;
            for (int j = 0; j < count; ++j) {
                const double angle = 0.5 * kPi - kTwoPi * j / count;
                acc += gaussian2d(x - c.mu * std::cos(angle), y - c.mu * std::sin(angle),
                                  c.sigma);
            }
            return acc / count;
        }
        double operator()(const PolarAmplitude& p) const {
            const double r = std::hypot(x, y);
            if (r == 0.0) return std::numeric_limits<double>::infinity();
            return amplitude_law_pdf(p.law, r) / (kTwoPi * r);
        }
        double operator()(const ScaleMixture& s) const {
            return scale_mixture_marginal(s.law, x) * scale_mixture_marginal(s.law, y);
        }
    };
    return std::visit(Visitor{x, y}, family);
}

bool rotation_invariant(const SphericalFamily& family) {
    return !std::holds_alternative<CircleMixture>(family) &&
           !std::holds_alternative<ScaleMixture>(family);
}

double radius_moment(const RadiusLaw& law, int k) {
    if (k < 0) throw std::invalid_argument("radius_moment: k must be >= 0");
    if (const auto* two = std::get_if<TwoPointRadius>(&law))
        return two->prob_r1 * std::pow(two->r1, k) +
               (1.0 - two->prob_r1) * std::pow(two->r2, k);
    const auto& uni = std::get<UniformRadius>(law);
    // (hi^{k+1} - lo^{k+1}) / ((k+1)(hi - lo))
    return (std::pow(uni.hi, k + 1) - std::pow(uni.lo, k + 1)) /
           ((k + 1.0) * (uni.hi - uni.lo));
}

double circle_mixture_amplitude_pdf(const CircleMixture& family, double xi) {
    if (xi < 0.0) return 0.0;
    // Every mixture component sits at distance mu from the origin, so the
    // amplitude is Rice(mu, sigma) regardless of the component count.
    const double s2 = family.sigma * family.sigma;
    const double z = xi * family.mu / s2;
    return (xi / s2) *
           std::exp(-0.5 * (xi * xi + family.mu * family.mu) / s2 + z) *
           bessel_i0_scaled(z);
}

}  // namespace cyclekit
