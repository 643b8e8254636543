#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace cyclekit {

struct MomentEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t replications = 0;
};

// One replication fills `out` (size fixed up front) from its own seed.
using McKernel =
    std::function<void(std::uint64_t rep_index, std::uint64_t rep_seed, std::vector<double>& out)>;

// Embarrassingly parallel Monte Carlo with bit-for-bit reproducible output:
// every replication owns the substream substream_seed(seed, rep_index), sums
// are accumulated per fixed 4096-replication block, and blocks are reduced in
// index order.  The thread count changes scheduling only, never a single bit
// of the result.
std::vector<MomentEstimate> run_monte_carlo(std::uint64_t replications, std::uint64_t seed,
                                            int threads, std::size_t dim,
                                            const McKernel& kernel);

MomentEstimate run_monte_carlo_scalar(
    std::uint64_t replications, std::uint64_t seed, int threads,
    const std::function<double(std::uint64_t rep_index, std::uint64_t rep_seed)>& kernel);

}  // namespace cyclekit
