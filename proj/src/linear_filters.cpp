#include "cyclekit/linear_filters.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

#include "cyclekit/errors.hpp"
#include "cyclekit/fft.hpp"

namespace cyclekit {

namespace {

// Durand-Kerner roots of c_0 + c_1 z + ... + c_n z^n (c_n != 0).
std::vector<std::complex<double>> polynomial_roots(std::vector<double> coeffs) {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-300) coeffs.pop_back();
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<std::complex<double>> roots;
    if (n < 1) return roots;

    std::vector<std::complex<double>> monic(n + 1);
    for (int i = 0; i <= n; ++i) monic[i] = coeffs[i] / coeffs[n];

    roots.resize(n);
    for (int i = 0; i < n; ++i)
        roots[i] = std::pow(std::complex<double>(0.4, 0.9), i + 1);

    for (int iter = 0; iter < 500; ++iter) {
        double shift = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> value = monic[n];
            for (int k = n - 1; k >= 0; --k) value = value * roots[i] + monic[k];
            std::complex<double> denom(1.0, 0.0);
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            const std::complex<double> delta = value / denom;
            roots[i] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-13) break;
    }
    return roots;
}

std::vector<double> ar_char_coeffs(const ArmaSpec& spec) {
    std::vector<double> coeffs(spec.ar.size() + 1);
    coeffs[0] = 1.0;
    for (std::size_t i = 0; i < spec.ar.size(); ++i) coeffs[i + 1] = -spec.ar[i];
    return coeffs;
}

// Gaussian elimination with partial pivoting; the Yule-Walker systems are
// tiny, so no factorization library is warranted.
std::vector<double> solve_dense(std::vector<std::vector<double>> m,
                                std::vector<double> rhs) {
    const int n = static_cast<int>(rhs.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        std::swap(m[col], m[pivot]);
        std::swap(rhs[col], rhs[pivot]);
        if (std::abs(m[col][col]) < 1e-300)
            throw std::runtime_error("solve_dense: singular system");
        for (int row = col + 1; row < n; ++row) {
            const double f = m[row][col] / m[col][col];
            for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<double> x(n);
    for (int row = n - 1; row >= 0; --row) {
        double acc = rhs[row];
        for (int k = row + 1; k < n; ++k) acc -= m[row][k] * x[k];
        x[row] = acc / m[row][row];
    }
    return x;
}

double frac_log_acf_ratio(double d, int abs_tau) {
    // log of Gamma(1-2d) Gamma(d+tau) / (Gamma(1+tau-d) Gamma(1-d) Gamma(d))
    return std::lgamma(1.0 - 2.0 * d) + std::lgamma(d + abs_tau) -
           std::lgamma(1.0 + abs_tau - d) - std::lgamma(1.0 - d) - std::lgamma(d);
}

}  // namespace

void validate(const ArmaSpec& spec) {
    if (!(spec.sigma > 0.0))
        throw std::invalid_argument("ArmaSpec: sigma must be positive");
    if (spec.ar.empty()) return;
    for (const auto& root : polynomial_roots(ar_char_coeffs(spec))) {
        if (std::abs(root) <= 1.0 + 1e-10)
            throw std::invalid_argument(
                "ArmaSpec: autoregressive polynomial has a root on or inside the unit "
                "circle; the recursion is not causal stationary");
    }
}

double ar_decay_rate(const ArmaSpec& spec) {
    if (spec.ar.empty()) return 0.0;
    double rate = 0.0;
    for (const auto& root : polynomial_roots(ar_char_coeffs(spec)))
        rate = std::max(rate, 1.0 / std::abs(root));
    return rate;
}

void validate(const ArimaSpec& spec) {
    if (spec.difference_order != 1)
        throw std::invalid_argument("ArimaSpec: only a single unit root is supported");
    validate(spec.base);
}

void validate(const FracDiffSpec& spec) {
    if (!(spec.d > 0.0) || !(spec.d < 0.5))
        throw std::invalid_argument("FracDiffSpec: d must lie in (0, 1/2)");
    if (!(spec.sigma > 0.0))
        throw std::invalid_argument("FracDiffSpec: sigma must be positive");
}

PsiWeights psi_weights(const ArmaSpec& spec, int n_max) {
    validate(spec);
    if (n_max < 0) throw std::invalid_argument("psi_weights: n_max must be >= 0");

    const int p = spec.p();
    const int q = spec.q();
    PsiWeights out;
    out.weights.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (int k = 0; k <= n_max; ++k) {
        double value = 0.0;
        if (k == 0) value = 1.0;
        else if (k <= q) value = spec.ma[static_cast<std::size_t>(k - 1)];
        for (int i = 1; i <= std::min(k, p); ++i)
            value += spec.ar[static_cast<std::size_t>(i - 1)] *
                     out.weights[static_cast<std::size_t>(k - i)];
        out.weights[static_cast<std::size_t>(k)] = value;
    }

    const double rate = ar_decay_rate(spec);
    if (rate == 0.0) {
        out.tail_bound_sq = 0.0;  // finitely many nonzero weights
    } else {
        // |psi_k| <= c * rate^k eventually; calibrate c on the computed tail.
        double c = 0.0;
        const int lo = std::max(0, n_max - 8);
        for (int k = lo; k <= n_max; ++k)
            c = std::max(c, std::abs(out.weights[static_cast<std::size_t>(k)]) /
                                std::pow(rate, k));
        const double r2 = rate * rate;
        out.tail_bound_sq = c * c * std::pow(r2, n_max + 1) / (1.0 - r2);
    }
    return out;
}

PsiWeights psi_weights(const FracDiffSpec& spec, int n_max) {
    validate(spec);
    if (n_max < 0) throw std::invalid_argument("psi_weights: n_max must be >= 0");

    PsiWeights out;
    out.weights.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    out.weights[0] = 1.0;
    for (int k = 1; k <= n_max; ++k)
        out.weights[static_cast<std::size_t>(k)] =
            out.weights[static_cast<std::size_t>(k - 1)] * (k - 1.0 + spec.d) / k;

    // psi_k ~ k^{d-1} / Gamma(d); integral comparison for the squared tail.
    const double g = std::tgamma(spec.d);
    out.tail_bound_sq =
        std::pow(static_cast<double>(n_max), 2.0 * spec.d - 1.0) /
        ((1.0 - 2.0 * spec.d) * g * g);
    return out;
}

double arma_acf(const ArmaSpec& spec, int tau) {
    validate(spec);
    const int abs_tau = std::abs(tau);
    const int p = spec.p();
    const int q = spec.q();
    const double s2 = spec.sigma * spec.sigma;

    if (p == 1 && q == 0) {
        const double rho = spec.ar[0];
        return s2 * std::pow(rho, abs_tau) / (1.0 - rho * rho);
    }

    // b_k = sigma^2 sum_{j=k}^q theta_j psi_{j-k}, theta_0 = 1.
    const PsiWeights psi = psi_weights(ArmaSpec{spec.ar, spec.ma, 1.0}, q);
    auto theta = [&spec](int j) {
        return j == 0 ? 1.0 : spec.ma[static_cast<std::size_t>(j - 1)];
    };
    std::vector<double> b(static_cast<std::size_t>(q) + 1, 0.0);
    for (int k = 0; k <= q; ++k) {
        double acc = 0.0;
        for (int j = k; j <= q; ++j)
            acc += theta(j) * psi.weights[static_cast<std::size_t>(j - k)];
        b[static_cast<std::size_t>(k)] = s2 * acc;
    }

    // Solve for gamma(0..p) from the first p+1 moment equations.
    std::vector<std::vector<double>> m(static_cast<std::size_t>(p) + 1,
                                       std::vector<double>(static_cast<std::size_t>(p) + 1, 0.0));
    std::vector<double> rhs(static_cast<std::size_t>(p) + 1, 0.0);
    for (int k = 0; k <= p; ++k) {
        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] += 1.0;
        for (int i = 1; i <= p; ++i)
            m[static_cast<std::size_t>(k)][static_cast<std::size_t>(std::abs(k - i))] -=
                spec.ar[static_cast<std::size_t>(i - 1)];
        rhs[static_cast<std::size_t>(k)] = k <= q ? b[static_cast<std::size_t>(k)] : 0.0;
    }
    std::vector<double> gamma = solve_dense(std::move(m), std::move(rhs));

    if (abs_tau <= p) return gamma[static_cast<std::size_t>(abs_tau)];
    gamma.resize(static_cast<std::size_t>(abs_tau) + 1, 0.0);
    for (int k = p + 1; k <= abs_tau; ++k) {
        double acc = k <= q ? b[static_cast<std::size_t>(k)] : 0.0;
        for (int i = 1; i <= p; ++i)
            acc += spec.ar[static_cast<std::size_t>(i - 1)] *
                   gamma[static_cast<std::size_t>(k - i)];
        gamma[static_cast<std::size_t>(k)] = acc;
    }
    return gamma[static_cast<std::size_t>(abs_tau)];
}

double arma_acf(const FracDiffSpec& spec, int tau) {
    validate(spec);
    const int abs_tau = std::abs(tau);
    return spec.sigma * spec.sigma * std::exp(frac_log_acf_ratio(spec.d, abs_tau));
}

int burnin_length(const ArmaSpec& spec) {
    const double rate = ar_decay_rate(spec);
    const int floor_len = spec.q() + 1;
    if (rate <= 0.0) return floor_len;
    const int geometric =
        static_cast<int>(std::ceil(std::log(1e-10) / std::log(rate))) + spec.p();
    return std::max(floor_len, geometric);
}

SeriesPath simulate_linear(const ArmaSpec& spec, Rng& rng, int n,
                           std::int64_t start_time) {
    validate(spec);
    if (n <= 0) throw std::invalid_argument("simulate_linear: n must be positive");

    SeriesPath path;
    path.start_time = start_time;
    path.values.reserve(static_cast<std::size_t>(n));

    const int p = spec.p();
    const int q = spec.q();

    if (p == 1 && q == 0) {
        // Exact stationary start.
        const double rho = spec.ar[0];
        double x = rng.normal() * spec.sigma / std::sqrt(1.0 - rho * rho);
        for (int t = 0; t < n; ++t) {
            if (t > 0) x = rho * x + spec.sigma * rng.normal();
            path.values.push_back(x);
        }
        return path;
    }

    const int burn = burnin_length(spec);
    std::vector<double> x_hist(static_cast<std::size_t>(std::max(p, 1)), 0.0);
    std::vector<double> e_hist(static_cast<std::size_t>(std::max(q, 1)), 0.0);
    for (int t = -burn; t < n; ++t) {
        const double eps = spec.sigma * rng.normal();
        double x = eps;
        for (int i = 0; i < p; ++i)
            x += spec.ar[static_cast<std::size_t>(i)] * x_hist[static_cast<std::size_t>(i)];
        for (int j = 0; j < q; ++j)
            x += spec.ma[static_cast<std::size_t>(j)] * e_hist[static_cast<std::size_t>(j)];
        if (p > 0) {
            std::rotate(x_hist.rbegin(), x_hist.rbegin() + 1, x_hist.rend());
            x_hist[0] = x;
        }
        if (q > 0) {
            std::rotate(e_hist.rbegin(), e_hist.rbegin() + 1, e_hist.rend());
            e_hist[0] = eps;
        }
        if (t >= 0) path.values.push_back(x);
    }
    return path;
}

SeriesPath simulate_linear(const FracDiffSpec& spec, Rng& rng, int n,
                           std::int64_t start_time, int truncation) {
    validate(spec);
    if (n <= 0) throw std::invalid_argument("simulate_linear: n must be positive");
    if (truncation < 1) throw std::invalid_argument("simulate_linear: truncation must be >= 1");

    const PsiWeights psi = psi_weights(spec, truncation);
    std::vector<double> eps(static_cast<std::size_t>(n + truncation));
    for (auto& e : eps) e = spec.sigma * rng.normal();

    const std::vector<double> full = convolve(psi.weights, eps);
    SeriesPath path;
    path.start_time = start_time;
    path.values.assign(full.begin() + truncation, full.begin() + truncation + n);
    return path;
}

double lincomb_variance(const ArimaSpec& phase, const std::vector<int>& lags,
                        const std::vector<double>& coeffs) {
    validate(phase);
    if (lags.empty() || lags.size() != coeffs.size())
        throw std::invalid_argument("lincomb_variance: lags and coeffs must align");

    double coeff_sum = 0.0;
    double coeff_abs = 0.0;
    for (double c : coeffs) {
        coeff_sum += c;
        coeff_abs += std::abs(c);
    }
    if (coeff_abs == 0.0) return 0.0;
    if (std::abs(coeff_sum) > 1e-12 * std::max(1.0, coeff_abs))
        return std::numeric_limits<double>::infinity();

    // Align the combination as B(L) applied at the latest lag.
    const int tau_max = *std::max_element(lags.begin(), lags.end());
    const int tau_min = *std::min_element(lags.begin(), lags.end());
    std::vector<double> b(static_cast<std::size_t>(tau_max - tau_min) + 1, 0.0);
    for (std::size_t k = 0; k < lags.size(); ++k)
        b[static_cast<std::size_t>(tau_max - lags[k])] += coeffs[k];

    // B(1) = 0, so B(L) = (1 - L) C(L) by synthetic division; the remainder
    // vanishes with the coefficient sum.
    std::vector<double> c(b.size() > 1 ? b.size() - 1 : 1, 0.0);
    c[0] = b[0];
    for (std::size_t j = 1; j + 1 < b.size(); ++j) c[j] = b[j] + c[j - 1];
    if (b.size() == 1) c[0] = 0.0;

    const ArmaSpec& base = phase.base;
    const double s2 = base.sigma * base.sigma;
    const int c_deg = static_cast<int>(c.size()) - 1;

    if (base.p() == 0) {
        // Finite filter: exact.
        std::vector<double> theta(static_cast<std::size_t>(base.q()) + 1, 0.0);
        theta[0] = 1.0;
        for (int j = 1; j <= base.q(); ++j) theta[static_cast<std::size_t>(j)] = base.ma[static_cast<std::size_t>(j - 1)];
        const std::vector<double> filt = convolve(c, theta);
        double acc = 0.0;
        for (double w : filt) acc += w * w;
        return s2 * acc;
    }

    double c_abs = 0.0;
    for (double v : c) c_abs += std::abs(v);

    // Start near four decay lengths but never above the hard cap; a base so
    // close to a unit root that the cap is hit fails with PrecisionError
    // below instead of allocating an absurd filter.
    int n_max = std::min(std::max(64, 4 * burnin_length(base)), 1 << 20);
    for (int attempt = 0; attempt < 24; ++attempt) {
        const PsiWeights psi = psi_weights(ArmaSpec{base.ar, base.ma, 1.0}, n_max);
        const std::vector<double> filt = convolve(c, psi.weights);
        double acc = 0.0;
        for (double w : filt) acc += w * w;
        const double var = s2 * acc;

        // Tail of the combined filter is the psi tail smeared by C(L).
        const double tail_sq = psi.tail_bound_sq * c_abs * c_abs *
                               (c_deg + 1.0) * (c_deg + 1.0);
        if (s2 * tail_sq <= 1e-10 * std::max(var, 1e-30)) return var;
        n_max *= 2;
        if (n_max > (1 << 20))
            throw PrecisionError(
                "lincomb_variance: filter tail bound " + std::to_string(s2 * tail_sq) +
                " exceeds tolerance at truncation " + std::to_string(n_max / 2));
    }
    throw PrecisionError("lincomb_variance: truncation did not converge");
}

}  // namespace cyclekit
