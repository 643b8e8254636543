#pragma once

#include <cstdint>
#include <vector>

#include "cyclekit/innovations.hpp"

namespace cyclekit {

// Analytics for the amplitude AMP = sqrt(x^2 + y^2) of an innovation pair.
// The inverse coefficient of variation E(AMP) / sd(AMP) is the headline
// statistic: it is scale-free, so it separates families by shape alone.

// pdf of the amplitude, obtained by integrating the joint density over the
// direction.  Rotation-invariant families reduce to 2 pi xi g(xi^2);
// CircleMixture has a Rice closed form; ScaleMixture goes through adaptive
// quadrature over the angle.
double amplitude_pdf(const SphericalFamily& family, double xi);

// Inverse coefficient of variation, closed form where one exists
// (GaussianIso, StudentT, KotzType, CircleMixture, every PolarAmplitude law)
// and moment quadrature otherwise (GumbelType, ScaleMixture).  Throws
// std::invalid_argument when the amplitude lacks two finite moments.
double icv(const SphericalFamily& family);

// Quadrature route for any family; used to cross-check the closed forms.
double icv_numeric(const SphericalFamily& family);

struct EmpiricalIcv {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t n = 0;
};

// Sample inverse coefficient of variation with a delta-method standard error
// built from the first four sample moments.  Throws std::invalid_argument for
// fewer than two observations or a degenerate (zero variance) sample.
EmpiricalIcv empirical_icv(const std::vector<double>& amplitudes);

// n amplitude draws |sample_pair| from a fresh stream.
std::vector<double> sample_amplitudes(const SphericalFamily& family, std::size_t n,
                                      std::uint64_t seed);

// Total mass of the joint density, integrated in polar coordinates.  Equals 1
// for a correctly normalized family; exposed so the verification suite can
// assert it.
double density_normalization(const SphericalFamily& family);

// Variance of a single coordinate of the pair, E(AMP^2) / 2.  Closed form for
// every family except GumbelType, which goes through moment quadrature.
// CircleMixture requires m >= 1: with only two mixture components the
// coordinate variances differ and no single value applies.
double coordinate_variance(const SphericalFamily& family);

}  // namespace cyclekit
