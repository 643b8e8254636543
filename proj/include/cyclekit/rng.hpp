#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace cyclekit {

// Deterministic random number generation.
//
// All stochastic code in the library draws from Rng, a xoshiro256++ stream
// seeded through SplitMix64.  The standard <random> distributions are
// implementation-defined, so every sampler here is spelled out explicitly;
// identical (seed, consumption order) yields identical doubles on any
// platform.  Parallel code derives one independent substream per work unit
// with substream_seed and never shares an Rng between threads.

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Stateless mix of a master seed and a stream index.  Used to hand every
// Monte Carlo replication (and every independent model component) its own
// stream; streams derived from distinct indices are non-overlapping for all
// practical purposes.
inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t index) {
    SplitMix64 mixer(master ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    std::uint64_t a = mixer.next();
    std::uint64_t b = mixer.next();
    return a ^ (b >> 1) ^ (index << 1);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
        has_spare_normal_ = false;
        spare_normal_ = 0.0;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1), 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform strictly inside (0, 1); safe under log().
    double uniform_open01() {
        return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Box-Muller; the spare is cached so normals come in deterministic pairs.
    double normal() {
        if (has_spare_normal_) {
            has_spare_normal_ = false;
            return spare_normal_;
        }
        const double u1 = uniform_open01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * pi() * u2;
        spare_normal_ = r * std::sin(theta);
        has_spare_normal_ = true;
        return r * std::cos(theta);
    }

    double exponential() { return -std::log(uniform_open01()); }

    // Marsaglia-Tsang squeeze; boosted for shape < 1.
    double gamma(double shape) {
        if (!(shape > 0.0)) throw std::invalid_argument("gamma shape must be positive");
        if (shape < 1.0) {
            const double u = uniform_open01();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x;
            double v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform_open01();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double chi_square(double dof) { return 2.0 * gamma(0.5 * dof); }

    static constexpr double pi() { return 3.141592653589793238462643383279502884; }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t state_[4];
    double spare_normal_;
    bool has_spare_normal_;
};

}  // namespace cyclekit
