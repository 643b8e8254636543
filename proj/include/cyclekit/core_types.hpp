#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace cyclekit {

// An angular frequency in radians per unit time, restricted to (0, pi].
// Frequencies outside the interval alias onto it, so the constructor rejects
// them rather than folding silently.
class Frequency {
  public:
    explicit Frequency(double radians);
    double radians() const { return radians_; }

  private:
    double radians_;
};

// A non-decreasing tuple of integer lags (tau_1 <= ... <= tau_s), 1 <= s <= 16.
// The size cap keeps sign-vector enumeration (2^s terms) and pairing sums
// (2^s masks) bounded.
class LagPattern {
  public:
    explicit LagPattern(std::vector<int> lags);

    int size() const { return static_cast<int>(lags_.size()); }
    int operator[](int i) const { return lags_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return lags_; }
    int min() const { return lags_.front(); }
    int max() const { return lags_.back(); }

    static constexpr int max_size = 16;

  private:
    std::vector<int> lags_;
};

using SignVector = std::vector<int>;

// All sign vectors e in {-1, +1}^s, in lexicographic order with -1 < +1.
// zero_sum = true keeps only those with sum_j e_j = 0 (empty for odd s).
std::vector<SignVector> enumerate_sign_vectors(int s, bool zero_sum);

// A simulated sample path together with the seed that produced it.
struct SeriesPath {
    std::int64_t start_time = 0;
    std::vector<double> values;
    std::uint64_t seed = 0;

    double at_time(std::int64_t t) const;
    int size() const { return static_cast<int>(values.size()); }
};

// Throws std::invalid_argument if the path contains NaN or infinity.
void validate_finite(const SeriesPath& path);

struct Mat2 {
    // Row-major: [[a, b], [c, d]].
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;

    Mat2 operator*(const Mat2& rhs) const;
    Mat2 transpose() const { return {a, c, b, d}; }
};

// Rotation through angle z: [[cos z, sin z], [-sin z, cos z]].
Mat2 rotation(double z);

// Autocovariance sequence of a bivariate weakly stationary pair, indexed by
// integer lag.  Only tau >= 0 is stored; negative lags are answered through
// the reflection cov(-tau) = cov(tau)^T, so the identity holds by
// construction.
class CovSequence {
  public:
    void set(int tau, const Mat2& value);
    Mat2 at(int tau) const;
    bool contains(int tau) const;
    int max_lag() const;

  private:
    std::map<int, Mat2> entries_;
};

}  // namespace cyclekit
