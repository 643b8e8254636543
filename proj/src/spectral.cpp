#include "cyclekit/spectral.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace cyclekit {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

double fold_frequency(double omega) {
    double w = std::fmod(std::abs(omega), kTwoPi);
    if (w > kPi) w = kTwoPi - w;
    return w;
}

SpectralCurve theoretical_psd(const std::vector<PsdComponent>& components,
                              const std::vector<double>& grid) {
    if (components.empty())
        throw std::invalid_argument("theoretical_psd: no components");
    for (const auto& comp : components) {
        if (!comp.base_psd) throw std::invalid_argument("theoretical_psd: null base density");
        if (comp.order < 1) throw std::invalid_argument("theoretical_psd: order must be >= 1");
    }

    SpectralCurve curve;
    curve.omega = grid;
    curve.value.reserve(grid.size());
    for (double w : grid) {
        double acc = 0.0;
        for (const auto& comp : components) {
            const double lo = comp.base_psd(fold_frequency(w - comp.lambda));
            const double hi = comp.base_psd(fold_frequency(w + comp.lambda));
            acc += 0.5 * (std::pow(lo, comp.order) + std::pow(hi, comp.order));
        }
        curve.value.push_back(acc);
    }
    return curve;
}

std::vector<double> empirical_acf(const SeriesPath& path, int max_lag) {
    const int n = path.size();
    if (n == 0) throw std::invalid_argument("empirical_acf: empty path");
    if (max_lag < 0 || max_lag >= n)
        throw std::invalid_argument("empirical_acf: max_lag must lie in [0, n)");

    double mean = 0.0;
    for (double v : path.values) mean += v;
    mean /= static_cast<double>(n);

    std::vector<double> acf(static_cast<std::size_t>(max_lag) + 1, 0.0);
    for (int tau = 0; tau <= max_lag; ++tau) {
        double acc = 0.0;
        for (int t = 0; t + tau < n; ++t)
            acc += (path.values[static_cast<std::size_t>(t)] - mean) *
                   (path.values[static_cast<std::size_t>(t + tau)] - mean);
        acf[static_cast<std::size_t>(tau)] = acc / static_cast<double>(n);
    }
    return acf;
}

SpectralCurve periodogram(const SeriesPath& path, const std::vector<double>& grid) {
    const int n = path.size();
    if (n == 0) throw std::invalid_argument("periodogram: empty path");

    double mean = 0.0;
    for (double v : path.values) mean += v;
    mean /= static_cast<double>(n);

    SpectralCurve curve;
    curve.omega = grid;
    curve.value.reserve(grid.size());
    for (double w : grid) {
        // Recurrence for e^{-i w t} keeps the per-frequency cost at one
        // complex multiply per sample.
        const std::complex<double> step(std::cos(w), -std::sin(w));
        std::complex<double> phase(1.0, 0.0);
        std::complex<double> acc(0.0, 0.0);
        for (int t = 0; t < n; ++t) {
            acc += (path.values[static_cast<std::size_t>(t)] - mean) * phase;
            phase *= step;
        }
        curve.value.push_back(std::norm(acc) / static_cast<double>(n));
    }
    return curve;
}

}  // namespace cyclekit
