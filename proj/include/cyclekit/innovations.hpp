#pragma once

#include <variant>

#include "cyclekit/rng.hpp"

namespace cyclekit {

// Bivariate innovation families for the cosine/sine coordinate pair of a
// cyclical process.  All but CircleMixture and ScaleMixture have densities
// that are invariant under rotation of the pair, which is what makes the
// resulting cycle stationary at every moment order; the last two exist to
// exercise weaker forms of invariance.

struct GaussianIso {
    double sigma = 1.0;
};

// Bivariate t with nu > 2 degrees of freedom, scaled so each coordinate has
// variance sigma^2.
struct StudentT {
    double nu = 5.0;
    double sigma = 1.0;
};

// Density proportional to (x^2 + y^2)^{shape_n - 1} exp(-rate_r (x^2+y^2)^{shape_s}).
// shape_n = shape_s = 1, rate_r = 1/(2 sigma^2) recovers the isotropic Gaussian.
struct KotzType {
    double shape_n = 1.0;
    double shape_s = 1.0;
    double rate_r = 0.5;
};

// Squared amplitude with a truncated-Gumbel law: the amplitude pdf is
// 2 a b xi exp(-a xi^2) exp(-b exp(-a xi^2)) / (1 - e^{-b}).
struct GumbelType {
    double a = 1.0;
    double b = 1.0;
};

// Equal-weight mixture of 2^{m+1} isotropic Gaussians whose means sit evenly
// spaced on the circle of radius mu, starting at angle pi/2 and proceeding
// clockwise.  Rotation invariance holds only up to moment order 2m + 1.
struct CircleMixture {
    int m = 1;
    double mu = 1.0;
    double sigma = 1.0;
};

struct GaussianAmplitude {
    double mu = 0.0;
    double sigma = 1.0;
};  // amplitude = |N(mu, sigma^2)|
struct LogNormalAmplitude {
    double mu = 0.0;
    double sigma = 1.0;
};
struct GammaAmplitude {
    double shape = 1.0;
    double scale = 1.0;
};
struct InverseGammaAmplitude {
    double shape = 3.0;
    double scale = 1.0;
};
struct NakagamiAmplitude {
    double shape = 1.0;
    double spread = 1.0;
};

using AmplitudeLaw = std::variant<GaussianAmplitude, LogNormalAmplitude, GammaAmplitude,
                                  InverseGammaAmplitude, NakagamiAmplitude>;

// Pair = amplitude times a uniformly random direction.
struct PolarAmplitude {
    AmplitudeLaw law;
};

struct UniformRadius {
    double lo = 0.5;
    double hi = 1.5;
};
struct TwoPointRadius {
    double r1 = 0.5;
    double r2 = 1.5;
    double prob_r1 = 0.5;
};

using RadiusLaw = std::variant<UniformRadius, TwoPointRadius>;

// Each coordinate independently is R * N(0,1) with its own mixing radius R.
// The coordinates are uncorrelated but dependent through the common law, and
// the joint density is a product, not a rotation invariant.
struct ScaleMixture {
    RadiusLaw law;
};

using SphericalFamily = std::variant<GaussianIso, StudentT, KotzType, GumbelType,
                                     CircleMixture, PolarAmplitude, ScaleMixture>;

struct InnovationPair {
    double x = 0.0;
    double y = 0.0;
};

void validate(const SphericalFamily& family);

// One draw of the coordinate pair.  Draw order within a family is fixed, so a
// given (family, seed) always yields the same stream.
InnovationPair sample_pair(const SphericalFamily& family, Rng& rng);

// Joint density at (x, y).  PolarAmplitude diverges at the origin; the
// function returns +infinity there.
double density(const SphericalFamily& family, double x, double y);

bool rotation_invariant(const SphericalFamily& family);

// Moments of the mixing radius, E R^k; used by closed-form moment displays.
double radius_moment(const RadiusLaw& law, int k);

// pdf of the positive amplitude drawn by PolarAmplitude (the direction is
// uniform, so this is the full amplitude law of the pair).
double amplitude_law_pdf(const AmplitudeLaw& law, double r);

// Density of the positive amplitude of a single draw, marginalized over
// direction, where a closed form exists at the family level (CircleMixture's
// amplitude is Rice(mu, sigma) for every m).  General families go through
// amplitude_analytics instead.
double circle_mixture_amplitude_pdf(const CircleMixture& family, double xi);

}  // namespace cyclekit
