#pragma once

#include <vector>

#include "cyclekit/classic_cycles.hpp"
#include "cyclekit/core_types.hpp"

namespace cyclekit {

// Frequency-domain views.  The spectral density convention throughout is
//   f(omega) = sum_tau gamma(tau) cos(omega tau),
// an even, 2 pi periodic function with integral identity
//   (1 / 2 pi) int_{-pi}^{pi} f(omega) d omega = gamma(0).

struct SpectralCurve {
    std::vector<double> omega;
    std::vector<double> value;
};

// Reduce any real frequency to its alias in [0, pi] using evenness and
// 2 pi periodicity.
double fold_frequency(double omega);

// Spectral density of a cycle sum: each component contributes
// (base^order(w - lambda) + base^order(w + lambda)) / 2 with folded
// arguments.  order > 1 is the literal-power form for components built from
// unit-variance bases.
SpectralCurve theoretical_psd(const std::vector<PsdComponent>& components,
                              const std::vector<double>& grid);

// Biased (1/n), mean-removed sample autocovariances for lags 0..max_lag.
std::vector<double> empirical_acf(const SeriesPath& path, int max_lag);

// I(omega) = |sum_t (y_t - mean) e^{-i omega t}|^2 / n on an arbitrary grid.
SpectralCurve periodogram(const SeriesPath& path, const std::vector<double>& grid);

}  // namespace cyclekit
