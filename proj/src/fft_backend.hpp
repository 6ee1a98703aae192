#pragma once

#include <complex>
#include <vector>

namespace weakphase::detail {

// Unnormalized complex DFTs, out_j = sum_k in_k exp(-+ 2 pi i j k / n).
// FFTW plans are cached per length and guarded by a mutex; execution on
// caller buffers is thread-safe.
void fft_forward(const std::vector<std::complex<double>>& in,
                 std::vector<std::complex<double>>& out);
void fft_backward(const std::vector<std::complex<double>>& in,
                  std::vector<std::complex<double>>& out);

}  // namespace weakphase::detail
