#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace cw {

/// Unscaled discrete Fourier transform, any length (power-of-two fast path,
/// Bluestein chirp otherwise). sign -1: sum a_j exp(-2 pi i jk / n);
/// sign +1: the conjugate kernel. Neither direction divides by n.
void fft(std::complex<double>* data, std::size_t n, int sign);

inline void fft(std::vector<std::complex<double>>& data, int sign) {
  fft(data.data(), data.size(), sign);
}

/// Transform every axis of a dim-dimensional cube with points entries per
/// axis, stored row-major (last axis contiguous), in place.
void fft_cube(std::complex<double>* data, int dim, int points, int sign);

}  // namespace cw
