#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "cyclekit/core_types.hpp"
#include "cyclekit/innovations.hpp"
#include "cyclekit/linear_filters.hpp"

namespace cyclekit {

// Classical stationary cycle constructions.  All of them produce
//   y_t = alpha_t cos(lambda t) + beta_t sin(lambda t)
// from a coordinate pair (alpha, beta) that is stationary and exchangeable
// enough for y itself to be stationary; they differ in how the pair is built.

// Sum of independently modulated components: per component, the two
// coordinates follow the same ARMA recursion driven by the coordinates of a
// bivariate innovation pair.  The innovation family fixes the noise scale, so
// the ARMA polynomial is given without a sigma.
struct HannanComponent {
    Frequency lambda;
    std::vector<double> ar;
    std::vector<double> ma;
    SphericalFamily innovations;
};

struct HannanSpec {
    std::vector<HannanComponent> components;
};

// Damped rotation recursion
//   [z, z*]_t = rho R(lambda) [z, z*]_{t-1} + R(lambda t) [eps, eps*]_t'
// with y = z.  Path-identical to the one-component AR(1) construction above
// when both start from the zero state and share the innovation stream.
struct StochasticCycleSpec {
    double rho = 0.9;
    Frequency lambda;
    SphericalFamily innovations;
};

// Coordinates filtered n times through (1 - rho L)^{-1}, Gaussian noise.
struct NthOrderSpec {
    int order = 2;
    double rho = 0.9;
    Frequency lambda;
    double sigma = 1.0;
};

// Coordinates are fractional noise (1-L)^{-d} kappa; the cycle has a
// hyperbolically decaying, pseudo-cyclical autocovariance.
struct FswpSpec {
    double d = 0.25;
    Frequency lambda;
    double sigma = 1.0;
    int truncation = 10000;
};

using CycleSpec = std::variant<HannanSpec, StochasticCycleSpec, NthOrderSpec, FswpSpec>;

void validate(const CycleSpec& spec);

// The series together with its quadrature companion
// y*_t = -alpha_t sin(lambda t) + beta_t cos(lambda t) (summed over components).
struct CyclePathPair {
    SeriesPath y;
    SeriesPath y_star;
};

// Deterministic simulation: component j consumes substream_seed(seed, j), one
// innovation pair per time step, burn-in from the zero state.  Identical
// seeds give identical paths for model pairs that are algebraically
// equivalent (one-component AR(1) Hannan vs. the rotation recursion).
CyclePathPair simulate(const CycleSpec& spec, std::uint64_t seed, int n,
                       std::int64_t start_time = 0);

// Stationary autocovariance E(y_t y_{t+tau}) = sum_j gamma_j(tau) cos(lambda_j tau).
double theoretical_acf(const CycleSpec& spec, int tau);

// Demodulation: recover (alpha, beta) from (y, y*) by the inverse rotation.
std::pair<SeriesPath, SeriesPath> rotation_representation(const SeriesPath& y,
                                                          const SeriesPath& y_star,
                                                          double lambda);

// Spectral building block: per component, the coordinate spectral density
// f(omega) = sum_tau gamma(tau) cos(omega tau) as a callable, plus the carrier
// frequency.  `order` is carried for constructions whose component density is
// a literal power of a base density (unit innovation variance assumed when
// order > 1 is used that way).
struct PsdComponent {
    std::function<double(double)> base_psd;
    double lambda = 0.0;
    int order = 1;
};

std::vector<PsdComponent> psd_components(const CycleSpec& spec);

}  // namespace cyclekit
