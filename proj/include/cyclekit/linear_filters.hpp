#pragma once

#include <cstdint>
#include <vector>

#include "cyclekit/core_types.hpp"
#include "cyclekit/rng.hpp"

namespace cyclekit {

// Causal ARMA(p, q) driven by zero-mean innovations with standard deviation
// sigma, in the convention
//   x_t = ar[0] x_{t-1} + ... + ar[p-1] x_{t-p}
//         + eps_t + ma[0] eps_{t-1} + ... + ma[q-1] eps_{t-q}.
struct ArmaSpec {
    std::vector<double> ar;
    std::vector<double> ma;
    double sigma = 1.0;

    int p() const { return static_cast<int>(ar.size()); }
    int q() const { return static_cast<int>(ma.size()); }
};

// Throws std::invalid_argument unless sigma > 0 and every root of the AR
// polynomial lies outside the unit circle.
void validate(const ArmaSpec& spec);

// Largest modulus among the inverse AR roots; 0 for a pure moving average.
// Controls geometric decay of the MA(infinity) weights.
double ar_decay_rate(const ArmaSpec& spec);

// Once-integrated ARMA: (1 - L) x_t follows `base`.  Only a single unit root
// is supported.
struct ArimaSpec {
    ArmaSpec base;
    int difference_order = 1;
};

void validate(const ArimaSpec& spec);

// Fractional noise (1 - L)^{-d} applied to white noise, 0 < d < 1/2.
struct FracDiffSpec {
    double d = 0.25;
    double sigma = 1.0;
};

void validate(const FracDiffSpec& spec);

// MA(infinity) weights psi_0..psi_n plus a bound on the discarded tail
// sum_{k>n} psi_k^2.
struct PsiWeights {
    std::vector<double> weights;
    double tail_bound_sq = 0.0;
};

PsiWeights psi_weights(const ArmaSpec& spec, int n_max);
PsiWeights psi_weights(const FracDiffSpec& spec, int n_max);

// Stationary autocovariance at integer lag tau.  AR(1) goes through the
// closed form; general ARMA solves the Yule-Walker system.
double arma_acf(const ArmaSpec& spec, int tau);
double arma_acf(const FracDiffSpec& spec, int tau);

// Gaussian-innovation sample paths.  The ARMA version draws an exact
// stationary start for AR(1) and otherwise burns in from the zero state until
// the transient is below 1e-10; the fractional version truncates the
// MA(infinity) transfer function at `truncation` weights.
SeriesPath simulate_linear(const ArmaSpec& spec, Rng& rng, int n,
                           std::int64_t start_time = 0);
SeriesPath simulate_linear(const FracDiffSpec& spec, Rng& rng, int n,
                           std::int64_t start_time = 0, int truncation = 10000);

// Number of pre-sample steps after which the zero-state transient of the ARMA
// recursion is below 1e-10.
int burnin_length(const ArmaSpec& spec);

// Variance of sum_k coeffs[k] * P_{t + lags[k]} where P is the once-integrated
// process of `phase`.  When the coefficients sum to zero the difference
// operator cancels and the combination is a stationary ARMA functional whose
// variance is sigma^2 times a sum of squared filter weights; otherwise the
// combination carries the unit root and the function returns +infinity.
// Throws PrecisionError if the filter tail cannot be truncated below 1e-10
// relative accuracy.
double lincomb_variance(const ArimaSpec& phase, const std::vector<int>& lags,
                        const std::vector<double>& coeffs);

}  // namespace cyclekit
