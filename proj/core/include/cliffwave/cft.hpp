#pragma once

#include "cliffwave/field.hpp"

namespace cw {

/// Continuous-transform samples of the Fourier integral with kernel
/// exp(-i <x, xi>) and prefactor (2 pi)^{-n/2}, <.,.> the Euclidean inner
/// product. Channel-wise DFT with pre/post phase twiddles so index 0 means
/// x = -L and the output is centered at xi = 0. The result lives on
/// spectral_grid(f.grid()).
MVField cft_forward(const MVField& f);

/// Inverse with kernel exp(+i <x, xi>); cft_inverse(cft_forward(f)) = f up
/// to rounding.
MVField cft_inverse(const MVField& F);

/// l2_norm(cft_forward(f)) / l2_norm(f). Returns exactly 1 for zero input
/// (flagged by the caller if needed); the transform is unitary for these
/// grids so the ratio is 1 up to rounding for any f.
double plancherel_ratio(const MVField& f);

}  // namespace cw
