#include "cliffwave/cft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cliffwave/fft.hpp"

namespace cw {

namespace {

// Both grids put index 0 at the left edge and the DFT assumes index 0 at the
// origin, so the continuous transform needs a phase twiddle on each side:
//   F(xi_q) = pref * (-1)^{nN/2} * par(q) * DFT[par(m) f_m](q)
// with par(v) = (-1)^{sum of indices}. The sign pattern is what the complex
// exponentials exp(+-i L xi) and exp(+-i x_m N dxi / 2) collapse to on these
// centered grids, since L * dxi * N = 2 pi L / L... see the grid identity
// h * dxi * N = 2 pi. Parity of a flat row-major index: sum of per-axis
// indices mod 2.
int index_parity(std::size_t flat, int dim, int points) {
  int s = 0;
  for (int j = 0; j < dim; ++j) {
    s += static_cast<int>(flat % static_cast<std::size_t>(points));
    flat /= static_cast<std::size_t>(points);
  }
  return s & 1;
}

MVField cft_apply(const MVField& in, int sign, const GridSpec& out_grid, double pref) {
  const GridSpec& g = in.grid();
  const int dim = g.dim;
  const int np = g.points;
  const std::size_t total = in.points();
  // (-1)^{n N / 2}
  const bool global_flip = ((static_cast<long long>(dim) * np / 2) % 2) != 0;
  MVField out(out_grid);
  std::vector<cplx> buf(total);
  for (int a = 0; a < in.channels(); ++a) {
    const cplx* src = in.channel(static_cast<blade_mask>(a));
    for (std::size_t i = 0; i < total; ++i)
      buf[i] = index_parity(i, dim, np) ? -src[i] : src[i];
    fft_cube(buf.data(), dim, np, sign);
    cplx* dst = out.channel(static_cast<blade_mask>(a));
    for (std::size_t i = 0; i < total; ++i) {
      cplx v = index_parity(i, dim, np) ? -buf[i] : buf[i];
      if (global_flip) v = -v;
      dst[i] = v * pref;
    }
  }
  return out;
}

}  // namespace

MVField cft_forward(const MVField& f) {
  const GridSpec& g = f.grid();
  const double pref =
      std::pow(g.spacing(), g.dim) / std::pow(2.0 * std::numbers::pi, 0.5 * g.dim);
  return cft_apply(f, -1, spectral_grid(g), pref);
}

MVField cft_inverse(const MVField& F) {
  const GridSpec& gs = F.grid();
  // recover the spatial grid: spacing_x = 2 pi / (N * spacing_xi)
  GridSpec g = gs;
  g.half_width = std::numbers::pi_v<double> * gs.points / (2.0 * gs.half_width);
  const double pref =
      std::pow(gs.spacing(), gs.dim) / std::pow(2.0 * std::numbers::pi, 0.5 * gs.dim);
  return cft_apply(F, +1, g, pref);
}

double plancherel_ratio(const MVField& f) {
  const double nf = l2_norm(f);
  if (nf == 0.0) return 1.0;
  return l2_norm(cft_forward(f)) / nf;
}

}  // namespace cw
