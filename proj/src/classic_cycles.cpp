#include "cyclekit/classic_cycles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "cyclekit/amplitude_analytics.hpp"
#include "cyclekit/fft.hpp"

namespace cyclekit {

namespace {

void validate_hannan(const HannanSpec& spec) {
    if (spec.components.empty())
        throw std::invalid_argument("HannanSpec: at least one component required");
    for (const auto& comp : spec.components) {
        validate(ArmaSpec{comp.ar, comp.ma, 1.0});
        validate(comp.innovations);
    }
}

void validate_cycle(const StochasticCycleSpec& spec) {
    if (!(spec.rho > 0.0) || !(spec.rho < 1.0))
        throw std::invalid_argument("StochasticCycleSpec: rho must lie in (0, 1)");
    validate(spec.innovations);
}

void validate_nth(const NthOrderSpec& spec) {
    if (spec.order < 1) throw std::invalid_argument("NthOrderSpec: order must be >= 1");
    if (spec.order > 8) throw std::invalid_argument("NthOrderSpec: order above 8 is not supported");
    if (!(spec.rho > 0.0) || !(spec.rho < 1.0))
        throw std::invalid_argument("NthOrderSpec: rho must lie in (0, 1)");
    if (!(spec.sigma > 0.0)) throw std::invalid_argument("NthOrderSpec: sigma must be positive");
}

void validate_fswp(const FswpSpec& spec) {
    validate(FracDiffSpec{spec.d, spec.sigma});
    if (spec.truncation < 16)
        throw std::invalid_argument("FswpSpec: truncation must be >= 16");
}

// Pre-sample steps for the n-fold filter: the impulse response decays like
// (k+1)^{order-1} rho^k.
int nth_order_burnin(const NthOrderSpec& spec) {
    int burn = burnin_length(ArmaSpec{{spec.rho}, {}, 1.0});
    while (std::pow(burn + 1.0, spec.order - 1) * std::pow(spec.rho, burn) > 1e-10)
        burn += 16;
    return burn;
}

// Shared modulation step: accumulate the component pair into (y, y*).
void modulate(double alpha, double beta, double angle, double* y, double* y_star) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    *y += alpha * c + beta * s;
    *y_star += -alpha * s + beta * c;
}

CyclePathPair simulate_hannan(const HannanSpec& spec, std::uint64_t seed, int n,
                              std::int64_t t0) {
    CyclePathPair out;
    out.y.start_time = t0;
    out.y.seed = seed;
    out.y.values.assign(static_cast<std::size_t>(n), 0.0);
    out.y_star = out.y;

    for (std::size_t j = 0; j < spec.components.size(); ++j) {
        const auto& comp = spec.components[j];
        Rng rng(substream_seed(seed, j));
        const ArmaSpec shape{comp.ar, comp.ma, 1.0};
        const int p = shape.p();
        const int q = shape.q();
        const int burn = burnin_length(shape);
        const double lambda = comp.lambda.radians();

        std::vector<double> a_hist(static_cast<std::size_t>(std::max(p, 1)), 0.0);
        std::vector<double> b_hist(a_hist), ea_hist(static_cast<std::size_t>(std::max(q, 1)), 0.0),
            eb_hist(ea_hist);
        for (std::int64_t t = t0 - burn; t < t0 + n; ++t) {
            const InnovationPair eps = sample_pair(comp.innovations, rng);
            double alpha = eps.x;
            double beta = eps.y;
            for (int i = 0; i < p; ++i) {
                alpha += comp.ar[static_cast<std::size_t>(i)] * a_hist[static_cast<std::size_t>(i)];
                beta += comp.ar[static_cast<std::size_t>(i)] * b_hist[static_cast<std::size_t>(i)];
            }
            for (int i = 0; i < q; ++i) {
                alpha += comp.ma[static_cast<std::size_t>(i)] * ea_hist[static_cast<std::size_t>(i)];
                beta += comp.ma[static_cast<std::size_t>(i)] * eb_hist[static_cast<std::size_t>(i)];
            }
            if (p > 0) {
                std::rotate(a_hist.rbegin(), a_hist.rbegin() + 1, a_hist.rend());
                std::rotate(b_hist.rbegin(), b_hist.rbegin() + 1, b_hist.rend());
                a_hist[0] = alpha;
                b_hist[0] = beta;
            }
            if (q > 0) {
                std::rotate(ea_hist.rbegin(), ea_hist.rbegin() + 1, ea_hist.rend());
                std::rotate(eb_hist.rbegin(), eb_hist.rbegin() + 1, eb_hist.rend());
                ea_hist[0] = eps.x;
                eb_hist[0] = eps.y;
            }
            if (t >= t0) {
                const std::size_t idx = static_cast<std::size_t>(t - t0);
                modulate(alpha, beta, lambda * static_cast<double>(t),
                         &out.y.values[idx], &out.y_star.values[idx]);
            }
        }
    }
    return out;
}

CyclePathPair simulate_rotation(const StochasticCycleSpec& spec, std::uint64_t seed,
                                int n, std::int64_t t0) {
    CyclePathPair out;
    out.y.start_time = t0;
    out.y.seed = seed;
    out.y.values.assign(static_cast<std::size_t>(n), 0.0);
    out.y_star = out.y;

    Rng rng(substream_seed(seed, 0));
    const int burn = burnin_length(ArmaSpec{{spec.rho}, {}, 1.0});
    const double lambda = spec.lambda.radians();
    const Mat2 damped = [&spec, lambda] {
        Mat2 r = rotation(lambda);
        return Mat2{spec.rho * r.a, spec.rho * r.b, spec.rho * r.c, spec.rho * r.d};
    }();

    double z = 0.0;
    double z_star = 0.0;
    for (std::int64_t t = t0 - burn; t < t0 + n; ++t) {
        const InnovationPair eps = sample_pair(spec.innovations, rng);
        const Mat2 rt = rotation(lambda * static_cast<double>(t));
        const double nz = damped.a * z + damped.b * z_star + rt.a * eps.x + rt.b * eps.y;
        const double nz_star =
            damped.c * z + damped.d * z_star + rt.c * eps.x + rt.d * eps.y;
        z = nz;
        z_star = nz_star;
        if (t >= t0) {
            const std::size_t idx = static_cast<std::size_t>(t - t0);
            out.y.values[idx] = z;
            out.y_star.values[idx] = z_star;
        }
    }
    return out;
}

CyclePathPair simulate_nth(const NthOrderSpec& spec, std::uint64_t seed, int n,
                           std::int64_t t0) {
    CyclePathPair out;
    out.y.start_time = t0;
    out.y.seed = seed;
    out.y.values.assign(static_cast<std::size_t>(n), 0.0);
    out.y_star = out.y;

    Rng rng(substream_seed(seed, 0));
    const int burn = nth_order_burnin(spec);
    const double lambda = spec.lambda.radians();
    std::vector<double> a_stage(static_cast<std::size_t>(spec.order), 0.0);
    std::vector<double> b_stage(a_stage);

    for (std::int64_t t = t0 - burn; t < t0 + n; ++t) {
        double a_in = spec.sigma * rng.normal();
        double b_in = spec.sigma * rng.normal();
        for (int i = 0; i < spec.order; ++i) {
            a_stage[static_cast<std::size_t>(i)] =
                spec.rho * a_stage[static_cast<std::size_t>(i)] + a_in;
            b_stage[static_cast<std::size_t>(i)] =
                spec.rho * b_stage[static_cast<std::size_t>(i)] + b_in;
            a_in = a_stage[static_cast<std::size_t>(i)];
            b_in = b_stage[static_cast<std::size_t>(i)];
        }
        if (t >= t0) {
            const std::size_t idx = static_cast<std::size_t>(t - t0);
            modulate(a_in, b_in, lambda * static_cast<double>(t),
                     &out.y.values[idx], &out.y_star.values[idx]);
        }
    }
    return out;
}

CyclePathPair simulate_fswp(const FswpSpec& spec, std::uint64_t seed, int n,
                            std::int64_t t0) {
    Rng rng(substream_seed(seed, 0));
    const int trunc = spec.truncation;
    const std::size_t len = static_cast<std::size_t>(n + trunc);
    std::vector<double> eps_a(len), eps_b(len);
    for (std::size_t j = 0; j < len; ++j) {
        eps_a[j] = spec.sigma * rng.normal();
        eps_b[j] = spec.sigma * rng.normal();
    }
    const PsiWeights psi = psi_weights(FracDiffSpec{spec.d, 1.0}, trunc);
    const std::vector<double> alpha = convolve(psi.weights, eps_a);
    const std::vector<double> beta = convolve(psi.weights, eps_b);

    CyclePathPair out;
    out.y.start_time = t0;
    out.y.seed = seed;
    out.y.values.assign(static_cast<std::size_t>(n), 0.0);
    out.y_star = out.y;
    const double lambda = spec.lambda.radians();
    for (int i = 0; i < n; ++i) {
        const std::size_t conv_idx = static_cast<std::size_t>(trunc + i);
        modulate(alpha[conv_idx], beta[conv_idx],
                 lambda * static_cast<double>(t0 + i), &out.y.values[static_cast<std::size_t>(i)],
                 &out.y_star.values[static_cast<std::size_t>(i)]);
    }
    return out;
}

double nth_order_coordinate_acf(const NthOrderSpec& spec, int tau) {
    // gamma(tau) = sigma^2 sum_k psi_k psi_{k+|tau|}, psi_k = C(k+n-1, n-1) rho^k.
    const int abs_tau = std::abs(tau);
    int n_terms = nth_order_burnin(spec) * 2 + 64;
    double acc = 0.0;
    double psi_k = 1.0;  // k = 0
    std::vector<double> psi(static_cast<std::size_t>(n_terms + abs_tau + 1));
    for (int k = 0; k <= n_terms + abs_tau; ++k) {
        if (k == 0) {
            psi_k = 1.0;
        } else {
            // C(k+n-1, n-1) / C(k+n-2, n-1) = (k+n-1) / k
            psi_k *= spec.rho * (k + spec.order - 1.0) / k;
        }
        psi[static_cast<std::size_t>(k)] = psi_k;
    }
    for (int k = 0; k <= n_terms; ++k)
        acc += psi[static_cast<std::size_t>(k)] * psi[static_cast<std::size_t>(k + abs_tau)];
    return spec.sigma * spec.sigma * acc;
}

}  // namespace

void validate(const CycleSpec& spec) {
    if (const auto* h = std::get_if<HannanSpec>(&spec)) return validate_hannan(*h);
    if (const auto* c = std::get_if<StochasticCycleSpec>(&spec)) return validate_cycle(*c);
    if (const auto* n = std::get_if<NthOrderSpec>(&spec)) return validate_nth(*n);
    validate_fswp(std::get<FswpSpec>(spec));
}

CyclePathPair simulate(const CycleSpec& spec, std::uint64_t seed, int n,
                       std::int64_t start_time) {
    validate(spec);
    if (n <= 0) throw std::invalid_argument("simulate: n must be positive");
    struct Visitor {
        std::uint64_t seed;
        int n;
        std::int64_t t0;
        CyclePathPair operator()(const HannanSpec& s) const {
            return simulate_hannan(s, seed, n, t0);
        }
        CyclePathPair operator()(const StochasticCycleSpec& s) const {
            return simulate_rotation(s, seed, n, t0);
        }
        CyclePathPair operator()(const NthOrderSpec& s) const {
            return simulate_nth(s, seed, n, t0);
        }
        CyclePathPair operator()(const FswpSpec& s) const {
            return simulate_fswp(s, seed, n, t0);
        }
    };
    return std::visit(Visitor{seed, n, start_time}, spec);
}

double theoretical_acf(const CycleSpec& spec, int tau) {
    validate(spec);
    struct Visitor {
        int tau;
        double operator()(const HannanSpec& s) const {
            double acc = 0.0;
            for (const auto& comp : s.components) {
                const double sigma_eff = std::sqrt(coordinate_variance(comp.innovations));
                acc += arma_acf(ArmaSpec{comp.ar, comp.ma, sigma_eff}, tau) *
                       std::cos(comp.lambda.radians() * tau);
            }
            return acc;
        }
        double operator()(const StochasticCycleSpec& s) const {
            const double sigma_eff = std::sqrt(coordinate_variance(s.innovations));
            return arma_acf(ArmaSpec{{s.rho}, {}, sigma_eff}, tau) *
                   std::cos(s.lambda.radians() * tau);
        }
        double operator()(const NthOrderSpec& s) const {
            return nth_order_coordinate_acf(s, tau) * std::cos(s.lambda.radians() * tau);
        }
        double operator()(const FswpSpec& s) const {
            return arma_acf(FracDiffSpec{s.d, s.sigma}, tau) *
                   std::cos(s.lambda.radians() * tau);
        }
    };
    return std::visit(Visitor{tau}, spec);
}

std::pair<SeriesPath, SeriesPath> rotation_representation(const SeriesPath& y,
                                                          const SeriesPath& y_star,
                                                          double lambda) {
    if (y.values.size() != y_star.values.size() || y.start_time != y_star.start_time)
        throw std::invalid_argument("rotation_representation: paths must be aligned");
    SeriesPath alpha = y;
    SeriesPath beta = y;
    for (std::size_t i = 0; i < y.values.size(); ++i) {
        const double angle =
            lambda * static_cast<double>(y.start_time + static_cast<std::int64_t>(i));
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        // [alpha, beta]' = R(-angle) [y, y*]'
        alpha.values[i] = y.values[i] * c - y_star.values[i] * s;
        beta.values[i] = y.values[i] * s + y_star.values[i] * c;
    }
    return {std::move(alpha), std::move(beta)};
}

std::vector<PsdComponent> psd_components(const CycleSpec& spec) {
    validate(spec);
    auto arma_psd = [](ArmaSpec shape) {
        return [shape](double omega) {
            const std::complex<double> z(std::cos(omega), -std::sin(omega));
            std::complex<double> num(1.0, 0.0), den(1.0, 0.0);
            std::complex<double> zk(1.0, 0.0);
            for (std::size_t i = 0; i < std::max(shape.ar.size(), shape.ma.size()); ++i) {
                zk *= z;
                if (i < shape.ma.size()) num += shape.ma[i] * zk;
                if (i < shape.ar.size()) den -= shape.ar[i] * zk;
            }
            return shape.sigma * shape.sigma * std::norm(num) / std::norm(den);
        };
    };

    struct Visitor {
        decltype(arma_psd)& make_arma;
        std::vector<PsdComponent> operator()(const HannanSpec& s) const {
            std::vector<PsdComponent> out;
            for (const auto& comp : s.components) {
                const double sigma_eff = std::sqrt(coordinate_variance(comp.innovations));
                out.push_back({make_arma(ArmaSpec{comp.ar, comp.ma, sigma_eff}),
                               comp.lambda.radians(), 1});
            }
            return out;
        }
        std::vector<PsdComponent> operator()(const StochasticCycleSpec& s) const {
            const double sigma_eff = std::sqrt(coordinate_variance(s.innovations));
            return {{make_arma(ArmaSpec{{s.rho}, {}, sigma_eff}), s.lambda.radians(), 1}};
        }
        std::vector<PsdComponent> operator()(const NthOrderSpec& s) const {
            const double rho = s.rho;
            const double s2 = s.sigma * s.sigma;
            const int order = s.order;
            auto psd = [rho, s2, order](double omega) {
                const double denom = 1.0 - 2.0 * rho * std::cos(omega) + rho * rho;
                return s2 * std::pow(denom, -order);
            };
            return {{psd, s.lambda.radians(), 1}};
        }
        std::vector<PsdComponent> operator()(const FswpSpec& s) const {
            const double d = s.d;
            const double s2 = s.sigma * s.sigma;
            auto psd = [d, s2](double omega) {
                const double x = 2.0 * std::sin(0.5 * std::abs(omega));
                return s2 * std::pow(x, -2.0 * d);
            };
            return {{psd, s.lambda.radians(), 1}};
        }
    };
    return std::visit(Visitor{arma_psd}, spec);
}

}  // namespace cyclekit
