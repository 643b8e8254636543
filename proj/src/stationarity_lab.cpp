#include "cyclekit/stationarity_lab.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cyclekit/spectral.hpp"

namespace cyclekit {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Two-point law with mean 0, variance 1, skewness zeta: support
// {(zeta - root)/2, (zeta + root)/2}, root = sqrt(zeta^2 + 4), the negative
// point carrying probability b / (b - a).
struct TwoPointSkew {
    double lo, hi, prob_lo;
    explicit TwoPointSkew(double zeta) {
        const double root = std::sqrt(zeta * zeta + 4.0);
        lo = 0.5 * (zeta - root);
        hi = 0.5 * (zeta + root);
        prob_lo = hi / (hi - lo);
    }
};

double draw_coordinate(const CounterexampleLaw& law, Rng& rng) {
    struct Visitor {
        Rng& rng;
        double operator()(const SkewedLaw& s) const {
            const TwoPointSkew pts(s.zeta);
            return rng.uniform01() < pts.prob_lo ? pts.lo : pts.hi;
        }
        double operator()(const LogisticLaw& l) const {
            const double u = rng.uniform_open01();
            return l.nu * std::log(u / (1.0 - u));
        }
        double operator()(const IrwinHallLaw& ih) const {
            double acc = 0.0;
            for (int i = 0; i < ih.n; ++i) acc += rng.uniform(-ih.a, ih.a);
            return acc;
        }
        double operator()(const ScaleMixtureLaw& sm) const {
            double radius;
            if (const auto* two = std::get_if<TwoPointRadius>(&sm.radius))
                radius = rng.uniform01() < two->prob_r1 ? two->r1 : two->r2;
            else {
                const auto& uni = std::get<UniformRadius>(sm.radius);
                radius = rng.uniform(uni.lo, uni.hi);
            }
            return radius * rng.normal();
        }
    };
    return std::visit(Visitor{rng}, law);
}

}  // namespace

void validate(const HarmonicIidSpec& spec) {
    struct Visitor {
        void operator()(const SkewedLaw&) const {}
        void operator()(const LogisticLaw& l) const {
            if (!(l.nu > 0.0)) throw std::invalid_argument("LogisticLaw: nu must be positive");
        }
        void operator()(const IrwinHallLaw& ih) const {
            if (!(ih.a > 0.0) || ih.n < 1)
                throw std::invalid_argument("IrwinHallLaw: need a > 0 and n >= 1");
        }
        void operator()(const ScaleMixtureLaw& sm) const {
            validate(SphericalFamily{ScaleMixture{sm.radius}});
        }
    };
    std::visit(Visitor{}, spec.law);
}

SeriesPath simulate(const HarmonicIidSpec& spec, std::uint64_t seed, int n,
                    std::int64_t start_time) {
    validate(spec);
    if (n <= 0) throw std::invalid_argument("simulate: n must be positive");
    Rng rng(seed);
    SeriesPath path;
    path.start_time = start_time;
    path.seed = seed;
    path.values.resize(static_cast<std::size_t>(n));
    const double lambda = spec.lambda.radians();
    for (int i = 0; i < n; ++i) {
        const double alpha = draw_coordinate(spec.law, rng);
        const double beta = draw_coordinate(spec.law, rng);
        const double angle = lambda * static_cast<double>(start_time + i);
        path.values[static_cast<std::size_t>(i)] =
            alpha * std::cos(angle) + beta * std::sin(angle);
    }
    return path;
}

double counterexample_moment(const HarmonicIidSpec& spec, int order, std::int64_t t) {
    validate(spec);
    const double angle = spec.lambda.radians() * static_cast<double>(t);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double cos4 = std::cos(4.0 * angle);

    if (const auto* skew = std::get_if<SkewedLaw>(&spec.law)) {
        if (order != 3)
            throw std::invalid_argument("counterexample_moment: SkewedLaw supports order 3");
        return skew->zeta * (c * c * c + s * s * s);
    }
    if (const auto* logi = std::get_if<LogisticLaw>(&spec.law)) {
        if (order != 4)
            throw std::invalid_argument("counterexample_moment: LogisticLaw supports order 4");
        const double nu4 = std::pow(logi->nu, 4);
        return kPi * kPi * kPi * kPi * nu4 * (13.0 + cos4) / 30.0;
    }
    if (const auto* ih = std::get_if<IrwinHallLaw>(&spec.law)) {
        if (order != 4)
            throw std::invalid_argument("counterexample_moment: IrwinHallLaw supports order 4");
        return std::pow(ih->a, 4) * ih->n * (10.0 * ih->n - 3.0 - cos4) / 30.0;
    }
    const auto& sm = std::get<ScaleMixtureLaw>(spec.law);
    if (order != 4)
        throw std::invalid_argument("counterexample_moment: ScaleMixtureLaw supports order 4");
    const double r2 = radius_moment(sm.radius, 2);
    const double r4 = radius_moment(sm.radius, 4);
    // E y^4 = 3 E R^4 (cos^4 + sin^4) + 6 (E R^2)^2 cos^2 sin^2, collected in
    // the cos(4 lambda t) basis.
    return 0.25 * (9.0 * r4 + 3.0 * r2 * r2) + 0.25 * (3.0 * r4 - 3.0 * r2 * r2) * cos4;
}

PathKernel make_path_kernel(const HarmonicIidSpec& spec) {
    validate(spec);
    return [spec](std::uint64_t rep_seed, std::int64_t t_lo, std::int64_t t_hi,
                  std::vector<double>& out) {
        const int n = static_cast<int>(t_hi - t_lo) + 1;
        const SeriesPath path = simulate(spec, rep_seed, n, t_lo);
        out.assign(path.values.begin(), path.values.end());
    };
}

DriftScanResult moment_drift_scan(const PathKernel& kernel, const DriftScanConfig& config) {
    if (config.t_grid.empty())
        throw std::invalid_argument("moment_drift_scan: empty t grid");
    if (config.lags.empty())
        throw std::invalid_argument("moment_drift_scan: empty lag set");
    if (config.replications < 2)
        throw std::invalid_argument("moment_drift_scan: need at least 2 replications");

    const int lag_min = *std::min_element(config.lags.begin(), config.lags.end());
    const int lag_max = *std::max_element(config.lags.begin(), config.lags.end());
    const std::int64_t t_lo =
        *std::min_element(config.t_grid.begin(), config.t_grid.end()) + lag_min;
    const std::int64_t t_hi =
        *std::max_element(config.t_grid.begin(), config.t_grid.end()) + lag_max;

    const std::size_t dim = config.t_grid.size();
    const auto estimates = run_monte_carlo(
        config.replications, config.seed, config.threads, dim,
        [&kernel, &config, t_lo, t_hi](std::uint64_t, std::uint64_t rep_seed,
                                       std::vector<double>& out) {
            thread_local std::vector<double> window;
            kernel(rep_seed, t_lo, t_hi, window);
            for (std::size_t i = 0; i < config.t_grid.size(); ++i) {
                double prod = 1.0;
                for (int lag : config.lags) {
                    const std::int64_t t = config.t_grid[i] + lag;
                    prod *= window[static_cast<std::size_t>(t - t_lo)];
                }
                out[i] = prod;
            }
        });

    DriftScanResult result;
    result.threshold = config.threshold;
    result.points.reserve(dim);
    double pooled = 0.0;
    double pooled_var = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        result.points.push_back(
            {config.t_grid[i], estimates[i].mean, estimates[i].std_error});
        pooled += estimates[i].mean;
        pooled_var += estimates[i].std_error * estimates[i].std_error;
    }
    pooled /= static_cast<double>(dim);
    result.pooled_mean = pooled;
    result.pooled_std_error = std::sqrt(pooled_var / static_cast<double>(dim));

    double stat = 0.0;
    for (const auto& pt : result.points)
        stat = std::max(stat, std::abs(pt.estimate - pooled) /
                                  std::max(result.pooled_std_error, 1e-300));
    result.drift_statistic = stat;
    result.verdict = stat > config.threshold ? "drifting" : "stationary-consistent";
    return result;
}

PseudocyclicalReport pseudocyclical_check(const std::vector<CyclicalCoefficients>& freqs,
                                          double decay_tolerance,
                                          double monotone_tolerance) {
    if (freqs.empty())
        throw std::invalid_argument("pseudocyclical_check: no coefficient sequences");
    if (!(decay_tolerance > 0.0))
        throw std::invalid_argument("pseudocyclical_check: decay tolerance must be positive");

    PseudocyclicalReport report;
    report.pseudocyclical = true;
    report.onset.reserve(freqs.size());

    for (const auto& freq : freqs) {
        int worst_onset = 0;
        for (const auto* seq : {&freq.cos_coeff, &freq.sin_coeff}) {
            if (seq->size() < 2) continue;
            const int len = static_cast<int>(seq->size());

            double peak = 0.0;
            for (double v : *seq) peak = std::max(peak, std::abs(v));
            if (peak == 0.0) continue;  // identically zero: decays trivially

            // (i) the final decile must have died down relative to the peak
            const int tail_start = len - std::max(1, len / 10);
            double tail_peak = 0.0;
            for (int i = tail_start; i < len; ++i)
                tail_peak = std::max(tail_peak, std::abs((*seq)[static_cast<std::size_t>(i)]));
            if (tail_peak > decay_tolerance * peak) report.pseudocyclical = false;

            // (ii) |coefficients| non-increasing from some onset <= len / 2
            int onset = len - 1;
            while (onset > 0 &&
                   std::abs((*seq)[static_cast<std::size_t>(onset)]) <=
                       std::abs((*seq)[static_cast<std::size_t>(onset - 1)]) +
                           monotone_tolerance)
                --onset;
            if (onset > len / 2) report.pseudocyclical = false;
            worst_onset = std::max(worst_onset, onset);
        }
        report.onset.push_back(worst_onset);
    }
    return report;
}

std::vector<CyclicalCoefficients> two_frequency_decomposition(
    const std::function<double(int)>& gamma, double w1, double w2, int tau_max) {
    if (!(w1 > 0.0) || !(w2 > 0.0) || !(w1 <= kPi) || !(w2 <= kPi))
        throw std::invalid_argument("two_frequency_decomposition: frequencies must lie in (0, pi]");
    if (std::abs(w1 - w2) < 1e-12)
        throw std::invalid_argument(
            "two_frequency_decomposition: equal frequencies collapse onto a zero-frequency "
            "term; use a single-frequency representation instead");
    if (tau_max < 1) throw std::invalid_argument("two_frequency_decomposition: tau_max must be >= 1");

    // cos(w1 tau) cos(w2 tau) = [cos((w1+w2) tau) + cos((w1-w2) tau)] / 2.
    // For integer tau, cos(w tau) with w > pi equals cos((2 pi - w) tau); the
    // aliased representative keeps the coefficient sign unchanged.
    CyclicalCoefficients sum_term;
    sum_term.lambda = fold_frequency(w1 + w2);
    CyclicalCoefficients diff_term;
    diff_term.lambda = fold_frequency(w1 - w2);

    for (int tau = 0; tau <= tau_max; ++tau) {
        const double half_gamma = 0.5 * gamma(tau);
        sum_term.cos_coeff.push_back(half_gamma);
        sum_term.sin_coeff.push_back(0.0);
        diff_term.cos_coeff.push_back(half_gamma);
        diff_term.sin_coeff.push_back(0.0);
    }
    return {sum_term, diff_term};
}

}  // namespace cyclekit
