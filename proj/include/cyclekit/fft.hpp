#pragma once

#include <complex>
#include <vector>

namespace cyclekit {

// In-place radix-2 FFT; size must be a power of two.  inverse = true applies
// the 1/n normalization.
void fft(std::vector<std::complex<double>>& data, bool inverse);

// Linear convolution of two real sequences, length a.size() + b.size() - 1.
std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace cyclekit
