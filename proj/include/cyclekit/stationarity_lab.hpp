#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "cyclekit/core_types.hpp"
#include "cyclekit/innovations.hpp"
#include "cyclekit/monte_carlo.hpp"

namespace cyclekit {

// Diagnostics separating "stationary up to order m" from mere weak
// stationarity, plus the classical counterexamples: harmonic processes with
// iid non-spherical coordinate pairs are weakly stationary yet leak the time
// index into their higher moments.

// Marginal laws for the iid coordinate pair (alpha_t, beta_t), each
// coordinate drawn independently across time and from its twin.
struct SkewedLaw {
    double zeta = 1.0;  // two-point law with mean 0, variance 1, skewness zeta
};
struct LogisticLaw {
    double nu = 1.0;  // logistic scale
};
struct IrwinHallLaw {
    double a = 1.0;  // sum of n uniforms on (-a, a)
    int n = 2;
};
struct ScaleMixtureLaw {
    RadiusLaw radius;  // coordinate = R * N(0,1), R drawn per coordinate
};

using CounterexampleLaw = std::variant<SkewedLaw, LogisticLaw, IrwinHallLaw, ScaleMixtureLaw>;

struct HarmonicIidSpec {
    CounterexampleLaw law;
    Frequency lambda;
};

void validate(const HarmonicIidSpec& spec);

SeriesPath simulate(const HarmonicIidSpec& spec, std::uint64_t seed, int n,
                    std::int64_t start_time = 0);

// Closed-form E(y_t^order) where the time dependence is explicit:
//   Skewed, order 3:       zeta (cos^3 + sin^3)(lambda t)
//   Logistic, order 4:     pi^4 nu^4 (13 + cos 4 lambda t) / 30
//   IrwinHall, order 4:    a^4 n (10 n - 3 - cos 4 lambda t) / 30
//   ScaleMixture, order 4: [9 E R^4 + 3 (E R^2)^2]/4 + [3 E R^4 - 3 (E R^2)^2]/4 cos 4 lambda t
// Any other (law, order) combination throws std::invalid_argument.
double counterexample_moment(const HarmonicIidSpec& spec, int order, std::int64_t t);

// A path kernel simulates y over [t_lo, t_hi] for one replication seed,
// writing (t_hi - t_lo + 1) values.
using PathKernel = std::function<void(std::uint64_t rep_seed, std::int64_t t_lo,
                                      std::int64_t t_hi, std::vector<double>& out)>;

PathKernel make_path_kernel(const HarmonicIidSpec& spec);

struct DriftScanConfig {
    std::vector<std::int64_t> t_grid;
    std::vector<int> lags;  // product moment prod_j y_{t + lags[j]}
    std::uint64_t replications = 100000;
    std::uint64_t seed = 0;
    int threads = 1;
    double threshold = 4.0;
};

struct DriftPoint {
    std::int64_t t = 0;
    double estimate = 0.0;
    double std_error = 0.0;
};

struct DriftScanResult {
    std::vector<DriftPoint> points;
    double pooled_mean = 0.0;
    double pooled_std_error = 0.0;  // sqrt of the mean squared per-point SE
    double drift_statistic = 0.0;   // max_t |estimate(t) - pooled| / pooled SE
    double threshold = 4.0;
    std::string verdict;  // "stationary-consistent" or "drifting"
};

// Estimate the product moment on a grid of base times from common replication
// paths and measure how far the per-t estimates scatter around their pooled
// mean.  For genuinely stationary targets the statistic stays below the
// threshold for all but a vanishing fraction of seeds (Gaussian tail with a
// Bonferroni margin across the grid).
DriftScanResult moment_drift_scan(const PathKernel& kernel, const DriftScanConfig& config);

// Coefficient pair (a_tau, b_tau) for one frequency of a Definition-style
// cyclical autocovariance sum_j [a_{j,tau} cos(lambda_j tau) + b_{j,tau} sin(lambda_j tau)].
struct CyclicalCoefficients {
    double lambda = 0.0;
    std::vector<double> cos_coeff;
    std::vector<double> sin_coeff;
};

struct PseudocyclicalReport {
    bool pseudocyclical = false;
    std::vector<int> onset;  // per frequency: first lag after which decay is monotone
};

// True when every coefficient sequence (i) dies out, judged by the largest
// magnitude in the final decile staying below decay_tolerance * the overall
// peak, and (ii) is non-increasing in magnitude from some onset no later than
// half the available range, detected with slack monotone_tolerance.
PseudocyclicalReport pseudocyclical_check(const std::vector<CyclicalCoefficients>& freqs,
                                          double decay_tolerance,
                                          double monotone_tolerance = 1e-12);

// Split gamma(tau) cos(w1 tau) cos(w2 tau) into two Definition-style frequency
// terms via the product identity; frequencies above pi are aliased onto
// [0, pi] exactly (integer lags), coefficients gamma(tau)/2 each.
std::vector<CyclicalCoefficients> two_frequency_decomposition(
    const std::function<double(int)>& gamma, double w1, double w2, int tau_max);

}  // namespace cyclekit
