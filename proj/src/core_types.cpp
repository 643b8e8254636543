#include "cyclekit/core_types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cyclekit {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

Frequency::Frequency(double radians) : radians_(radians) {
    if (!(radians > 0.0) || !(radians <= kPi))
        throw std::domain_error("Frequency: radians must lie in (0, pi]");
}

LagPattern::LagPattern(std::vector<int> lags) : lags_(std::move(lags)) {
    if (lags_.empty()) throw std::domain_error("LagPattern: at least one lag required");
    if (static_cast<int>(lags_.size()) > max_size)
        throw std::length_error("LagPattern: more than 16 lags");
    for (std::size_t i = 1; i < lags_.size(); ++i) {
        if (lags_[i] < lags_[i - 1])
            throw std::invalid_argument("LagPattern: lags must be non-decreasing");
    }
}

std::vector<SignVector> enumerate_sign_vectors(int s, bool zero_sum) {
    if (s == 0) throw std::domain_error("enumerate_sign_vectors: s must be positive");
    if (s < 0 || s > LagPattern::max_size)
        throw std::length_error("enumerate_sign_vectors: s exceeds the size cap of 16");

    std::vector<SignVector> out;
    const std::uint32_t count = 1u << s;
    for (std::uint32_t bits = 0; bits < count; ++bits) {
        SignVector e(static_cast<std::size_t>(s));
        int sum = 0;
        // Bit (s-1-j) drives position j so that counting order is
        // lexicographic with -1 < +1.
        for (int j = 0; j < s; ++j) {
            e[static_cast<std::size_t>(j)] = (bits >> (s - 1 - j)) & 1u ? 1 : -1;
            sum += e[static_cast<std::size_t>(j)];
        }
        if (zero_sum && sum != 0) continue;
        out.push_back(std::move(e));
    }
    return out;
}

double SeriesPath::at_time(std::int64_t t) const {
    const std::int64_t idx = t - start_time;
    if (idx < 0 || idx >= static_cast<std::int64_t>(values.size()))
        throw std::out_of_range("SeriesPath: time outside the simulated window");
    return values[static_cast<std::size_t>(idx)];
}

void validate_finite(const SeriesPath& path) {
    for (std::size_t i = 0; i < path.values.size(); ++i) {
        if (!std::isfinite(path.values[i]))
            throw std::invalid_argument("SeriesPath: non-finite value at index " +
                                        std::to_string(i));
    }
}

Mat2 Mat2::operator*(const Mat2& rhs) const {
    return {a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
            c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
}

Mat2 rotation(double z) {
    const double cz = std::cos(z);
    const double sz = std::sin(z);
    return {cz, sz, -sz, cz};
}

void CovSequence::set(int tau, const Mat2& value) {
    if (tau < 0) {
        entries_[-tau] = value.transpose();
        return;
    }
    entries_[tau] = value;
}

Mat2 CovSequence::at(int tau) const {
    const auto it = entries_.find(tau < 0 ? -tau : tau);
    if (it == entries_.end())
        throw std::out_of_range("CovSequence: lag not present");
    return tau < 0 ? it->second.transpose() : it->second;
}

bool CovSequence::contains(int tau) const {
    return entries_.count(tau < 0 ? -tau : tau) > 0;
}

int CovSequence::max_lag() const {
    return entries_.empty() ? -1 : entries_.rbegin()->first;
}

}  // namespace cyclekit
