#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "cyclekit/core_types.hpp"
#include "cyclekit/linear_filters.hpp"
#include "cyclekit/monte_carlo.hpp"

namespace cyclekit {

// Amplitude- and phase-modulated sinusoid
//   y_t = (a + A_t) sin(lambda (t + P_t)),
// A a zero-mean stationary Gaussian linear process (or identically zero) and
// P a Gaussian phase, either stationary or once-integrated.  With a
// stationary phase the process is almost periodically correlated: its moments
// are deterministic almost periodic functions of t.  With an integrated phase
// every joint moment up to the pairing cap becomes time-invariant, because a
// moment term either involves a zero-sum lag combination of P (whose variance
// is finite and t-free) or carries the unit root and vanishes.

struct StationaryPhase {
    ArmaSpec process;
};

struct IntegratedPhase {
    ArimaSpec process;
};

using PhaseSpec = std::variant<StationaryPhase, IntegratedPhase>;

struct ModulatedCycleSpec {
    double base_amplitude = 1.0;           // a
    Frequency lambda;
    std::optional<ArmaSpec> amplitude;     // A_t; std::nullopt means A == 0
    PhaseSpec phase;
};

void validate(const ModulatedCycleSpec& spec);

// Amplitude and phase own independent substreams of `seed`.  A unit-root
// phase pins the level only modulo a full cycle, so the simulator draws the
// initial angle uniformly over one period: that is the stationary law, under
// which non-zero-sum moment terms average to zero around the circle and
// zero-sum terms never see the level.  Pinning P_{t0} = 0 instead would make
// short windows visibly non-stationary.
SeriesPath simulate(const ModulatedCycleSpec& spec, std::uint64_t seed, int n,
                    std::int64_t start_time = 0);

// E prod_j (base + A_{lags_j}) for jointly Gaussian zero-mean A: sum over
// perfect matchings of each subset (pairing sums), with base filling the
// unmatched slots.  acf(delta) must return E(A_t A_{t+delta}).
double wick_product_moment(double base, const std::function<double(int)>& acf,
                           const std::vector<int>& lags);

// E prod_j y_{t + tau_j} with a *stationary* Gaussian phase: an explicit
// almost periodic function of t.  Valid for any order s <= 16, odd included.
double apc_moment(const ModulatedCycleSpec& spec, const LagPattern& lags, std::int64_t t);

// E prod_j y_{t + tau_j} with a *once-integrated* Gaussian phase: free of t.
// Odd orders vanish; even orders sum over zero-sum sign vectors with
// lincomb_variance supplying each combination's phase variance.
double stationary_moment(const ModulatedCycleSpec& spec, const LagPattern& lags);

// Closed-form lag-tau autocovariance for the pure random-walk phase:
//   (a^2 + gamma_A(tau)) / 2 * exp(-lambda^2 |tau| sigma^2 / 2) * cos(lambda tau).
// The leading 1/2 is forced by the second-moment engine (E sin^2 = 1/2 at
// tau = 0) and is confirmed against simulation by the verification suite.
double acf_random_walk_phase(double base_amplitude, double gamma_a_tau, double lambda,
                             double sigma_sq, int tau);

struct EvenMoments {
    double second = 0.0;
    double fourth = 0.0;
    double kurtosis = 0.0;
};

// Marginal even moments and kurtosis of the integrated-phase process.  For
// A == 0 the kurtosis is 3/2, the arcsine value; amplitude randomness moves
// it upward toward (and past) the Gaussian 3.
EvenMoments even_moment_and_kurtosis(const ModulatedCycleSpec& spec);

// Monte Carlo estimate of E prod_j y_{t + tau_j} from `replications`
// independent windows; deterministic in (seed), invariant to threads.
MomentEstimate mc_product_moment(const ModulatedCycleSpec& spec, const LagPattern& lags,
                                 std::int64_t t, std::uint64_t replications,
                                 std::uint64_t seed, int threads = 1);

}  // namespace cyclekit
