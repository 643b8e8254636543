#include "cyclekit/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cyclekit/rng.hpp"

namespace cyclekit {

namespace {
constexpr std::uint64_t kBlockSize = 4096;
}

std::vector<MomentEstimate> run_monte_carlo(std::uint64_t replications, std::uint64_t seed,
                                            int threads, std::size_t dim,
                                            const McKernel& kernel) {
    if (replications == 0)
        throw std::invalid_argument("run_monte_carlo: replications must be positive");
    if (dim == 0) throw std::invalid_argument("run_monte_carlo: dim must be positive");
    if (threads < 1) throw std::invalid_argument("run_monte_carlo: threads must be >= 1");

    const std::uint64_t n_blocks = (replications + kBlockSize - 1) / kBlockSize;
    std::vector<std::vector<double>> block_sum(n_blocks, std::vector<double>(dim, 0.0));
    std::vector<std::vector<double>> block_sum_sq(n_blocks, std::vector<double>(dim, 0.0));

    std::atomic<std::uint64_t> next_block{0};
    auto worker = [&]() {
        std::vector<double> values(dim, 0.0);
        for (;;) {
            const std::uint64_t block = next_block.fetch_add(1);
            if (block >= n_blocks) return;
            const std::uint64_t lo = block * kBlockSize;
            const std::uint64_t hi = std::min(lo + kBlockSize, replications);
            auto& sums = block_sum[block];
            auto& sums_sq = block_sum_sq[block];
            for (std::uint64_t rep = lo; rep < hi; ++rep) {
                kernel(rep, substream_seed(seed, rep), values);
                for (std::size_t k = 0; k < dim; ++k) {
                    sums[k] += values[k];
                    sums_sq[k] += values[k] * values[k];
                }
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction in block index order.
    std::vector<double> total(dim, 0.0), total_sq(dim, 0.0);
    for (std::uint64_t block = 0; block < n_blocks; ++block) {
        for (std::size_t k = 0; k < dim; ++k) {
            total[k] += block_sum[block][k];
            total_sq[k] += block_sum_sq[block][k];
        }
    }

    const double n = static_cast<double>(replications);
    std::vector<MomentEstimate> out(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const double mean = total[k] / n;
        const double var = std::max(0.0, total_sq[k] / n - mean * mean);
        out[k].mean = mean;
        out[k].std_error = replications > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
        out[k].replications = replications;
    }
    return out;
}

MomentEstimate run_monte_carlo_scalar(
    std::uint64_t replications, std::uint64_t seed, int threads,
    const std::function<double(std::uint64_t, std::uint64_t)>& kernel) {
    const auto result = run_monte_carlo(
        replications, seed, threads, 1,
        [&kernel](std::uint64_t rep, std::uint64_t rep_seed, std::vector<double>& out) {
            out[0] = kernel(rep, rep_seed);
        });
    return result[0];
}

}  // namespace cyclekit
