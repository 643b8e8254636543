#include "cyclekit/modulated_cycle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace cyclekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

int popcount16(unsigned mask) { return __builtin_popcount(mask); }

// Variance of lambda * sum_j e_j P_{t + tau_j} for a stationary Gaussian
// phase: a plain quadratic form in the phase autocovariances.
double stationary_phase_combination_variance(const ArmaSpec& phase, double lambda,
                                             const std::vector<int>& lags,
                                             const SignVector& signs) {
    double acc = 0.0;
    for (std::size_t j = 0; j < lags.size(); ++j)
        for (std::size_t k = 0; k < lags.size(); ++k)
            acc += signs[j] * signs[k] * arma_acf(phase, lags[j] - lags[k]);
    return lambda * lambda * acc;
}

double amplitude_acf(const ModulatedCycleSpec& spec, int delta) {
    if (!spec.amplitude) return 0.0;
    return arma_acf(*spec.amplitude, delta);
}

}  // namespace

void validate(const ModulatedCycleSpec& spec) {
    if (!(spec.base_amplitude >= 0.0))
        throw std::invalid_argument("ModulatedCycleSpec: base amplitude must be >= 0");
    if (spec.amplitude) validate(*spec.amplitude);
    if (const auto* st = std::get_if<StationaryPhase>(&spec.phase))
        validate(st->process);
    else
        validate(std::get<IntegratedPhase>(spec.phase).process);
}

SeriesPath simulate(const ModulatedCycleSpec& spec, std::uint64_t seed, int n,
                    std::int64_t start_time) {
    validate(spec);
    if (n <= 0) throw std::invalid_argument("simulate: n must be positive");

    // Substream 1: amplitude; substream 2: phase.  Independent by
    // construction whether or not the amplitude is present.
    std::vector<double> amp(static_cast<std::size_t>(n), 0.0);
    if (spec.amplitude) {
        Rng rng(substream_seed(seed, 1));
        amp = simulate_linear(*spec.amplitude, rng, n, start_time).values;
    }

    const double lambda = spec.lambda.radians();
    std::vector<double> phase(static_cast<std::size_t>(n), 0.0);
    {
        Rng rng(substream_seed(seed, 2));
        if (const auto* st = std::get_if<StationaryPhase>(&spec.phase)) {
            phase = simulate_linear(st->process, rng, n, start_time).values;
        } else {
            // The unit root leaves the level free modulo one period; a uniform
            // initial angle is the stationary choice and the one the moment
            // engine describes.  Drawn first so the step stream is unchanged.
            const double offset = rng.uniform01() * 2.0 * kPi / lambda;
            phase.assign(static_cast<std::size_t>(n), offset);
            if (n > 1) {
                const auto& integ = std::get<IntegratedPhase>(spec.phase);
                const SeriesPath steps =
                    simulate_linear(integ.process.base, rng, n - 1, start_time);
                for (int i = 1; i < n; ++i)
                    phase[static_cast<std::size_t>(i)] =
                        phase[static_cast<std::size_t>(i - 1)] +
                        steps.values[static_cast<std::size_t>(i - 1)];
            }
        }
    }

    SeriesPath path;
    path.start_time = start_time;
    path.seed = seed;
    path.values.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(start_time + i);
        path.values[static_cast<std::size_t>(i)] =
            (spec.base_amplitude + amp[static_cast<std::size_t>(i)]) *
            std::sin(lambda * (t + phase[static_cast<std::size_t>(i)]));
    }
    return path;
}

double wick_product_moment(double base, const std::function<double(int)>& acf,
                           const std::vector<int>& lags) {
    const int s = static_cast<int>(lags.size());
    if (s == 0) return 1.0;
    if (s > LagPattern::max_size)
        throw std::length_error("wick_product_moment: more than 16 factors");

    // pairings[mask] = sum over perfect matchings of the indices in mask of
    // the product of pairwise autocovariances; 0 for odd masks.
    const unsigned full = (1u << s) - 1u;
    std::vector<double> pairings(full + 1u, 0.0);
    pairings[0] = 1.0;
    for (unsigned mask = 1; mask <= full; ++mask) {
        if (popcount16(mask) % 2 != 0) continue;
        const int first = __builtin_ctz(mask);
        const unsigned rest = mask & ~(1u << first);
        double acc = 0.0;
        for (unsigned m = rest; m != 0; m &= m - 1) {
            const int other = __builtin_ctz(m);
            acc += acf(lags[static_cast<std::size_t>(first)] -
                       lags[static_cast<std::size_t>(other)]) *
                   pairings[rest & ~(1u << other)];
        }
        pairings[mask] = acc;
    }

    double total = 0.0;
    for (unsigned mask = 0; mask <= full; ++mask) {
        if (popcount16(mask) % 2 != 0) continue;
        total += std::pow(base, s - popcount16(mask)) * pairings[mask];
    }
    return total;
}

double apc_moment(const ModulatedCycleSpec& spec, const LagPattern& lags, std::int64_t t) {
    validate(spec);
    const auto* stationary = std::get_if<StationaryPhase>(&spec.phase);
    if (!stationary)
        throw std::invalid_argument("apc_moment: requires a stationary phase");

    const int s = lags.size();
    const double lambda = spec.lambda.radians();
    const auto acf = [&spec](int delta) { return amplitude_acf(spec, delta); };
    const double amp_moment = wick_product_moment(spec.base_amplitude, acf, lags.values());

    double total = 0.0;
    for (const SignVector& e : enumerate_sign_vectors(s, /*zero_sum=*/false)) {
        double angle = 0.0;
        double parity = 1.0;
        for (int j = 0; j < s; ++j) {
            angle += e[static_cast<std::size_t>(j)] *
                     (static_cast<double>(t) + lags[j]);
            parity *= e[static_cast<std::size_t>(j)];
        }
        angle *= lambda;
        const double var = stationary_phase_combination_variance(
            stationary->process, lambda, lags.values(), e);
        const double wave = (s % 2 == 1) ? std::sin(angle) : std::cos(angle);
        total += parity * std::exp(-0.5 * var) * wave;
    }

    const double sign = (s / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::ldexp(1.0, -s) * amp_moment * total;
}

double stationary_moment(const ModulatedCycleSpec& spec, const LagPattern& lags) {
    validate(spec);
    const auto* integrated = std::get_if<IntegratedPhase>(&spec.phase);
    if (!integrated)
        throw std::invalid_argument("stationary_moment: requires an integrated phase");

    const int s = lags.size();
    if (s % 2 == 1) return 0.0;  // odd moments vanish with the unit root

    const double lambda = spec.lambda.radians();
    const auto acf = [&spec](int delta) { return amplitude_acf(spec, delta); };
    const double amp_moment = wick_product_moment(spec.base_amplitude, acf, lags.values());

    double total = 0.0;
    std::vector<double> coeffs(static_cast<std::size_t>(s), 0.0);
    for (const SignVector& e : enumerate_sign_vectors(s, /*zero_sum=*/true)) {
        double angle = 0.0;
        double parity = 1.0;
        for (int j = 0; j < s; ++j) {
            angle += e[static_cast<std::size_t>(j)] * lags[j];
            parity *= e[static_cast<std::size_t>(j)];
            coeffs[static_cast<std::size_t>(j)] = lambda * e[static_cast<std::size_t>(j)];
        }
        angle *= lambda;
        const double var = lincomb_variance(integrated->process, lags.values(), coeffs);
        total += parity * std::exp(-0.5 * var) * std::cos(angle);
    }

    const double sign = (s / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign * std::ldexp(1.0, -s) * amp_moment * total;
}

double acf_random_walk_phase(double base_amplitude, double gamma_a_tau, double lambda,
                             double sigma_sq, int tau) {
    if (!(sigma_sq >= 0.0))
        throw std::invalid_argument("acf_random_walk_phase: sigma_sq must be >= 0");
    const double damp = std::exp(-0.5 * lambda * lambda * std::abs(tau) * sigma_sq);
    return 0.5 * (base_amplitude * base_amplitude + gamma_a_tau) * damp *
           std::cos(lambda * tau);
}

EvenMoments even_moment_and_kurtosis(const ModulatedCycleSpec& spec) {
    EvenMoments out;
    out.second = stationary_moment(spec, LagPattern({0, 0}));
    out.fourth = stationary_moment(spec, LagPattern({0, 0, 0, 0}));
    out.kurtosis = out.fourth / (out.second * out.second);
    return out;
}

MomentEstimate mc_product_moment(const ModulatedCycleSpec& spec, const LagPattern& lags,
                                 std::int64_t t, std::uint64_t replications,
                                 std::uint64_t seed, int threads) {
    validate(spec);
    const std::int64_t window_start = t + lags.min();
    const int window = static_cast<int>(lags.max() - lags.min()) + 1;

    return run_monte_carlo_scalar(
        replications, seed, threads,
        [&spec, &lags, t, window_start, window](std::uint64_t, std::uint64_t rep_seed) {
            const SeriesPath path = simulate(spec, rep_seed, window, window_start);
            double prod = 1.0;
            for (int j = 0; j < lags.size(); ++j) prod *= path.at_time(t + lags[j]);
            return prod;
        });
}

}  // namespace cyclekit
