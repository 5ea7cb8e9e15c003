#include "cliffwave/testfield.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <vector>

#include "cliffwave/cft.hpp"

namespace cw {

std::function<Multivector(const Vector&)> band_limited_evaluator(int dim, const BandSpec& spec) {
  struct Mode {
    Vector kappa;
    Multivector amp;
  };
  SeededRng rng(spec.seed);
  auto modes = std::make_shared<std::vector<Mode>>();
  for (int m = 0; m < spec.modes; ++m) {
    Mode mode;
    mode.kappa.dim = dim;
    const double r = rng.uniform(spec.freq_lo, spec.freq_hi);
    if (dim == 1) {
      mode.kappa.comp[0] = (rng.uniform() < 0.5 ? -r : r);
    } else if (dim == 2) {
      const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
      mode.kappa.comp[0] = r * std::cos(phi);
      mode.kappa.comp[1] = r * std::sin(phi);
    } else {
      // uniform direction on S^{dim-1} for dim = 3 via cylinder map
      const double c = rng.uniform(-1.0, 1.0);
      const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
      mode.kappa.comp[0] = r * s * std::cos(phi);
      mode.kappa.comp[1] = r * s * std::sin(phi);
      mode.kappa.comp[2] = r * c;
    }
    mode.amp = Multivector(dim);
    const double scale = rng.uniform(0.5, 1.0) / std::sqrt(static_cast<double>(1 << dim));
    for (blade_mask a = 0; a < (blade_mask{1} << dim); ++a)
      mode.amp[a] = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)} * scale;
    modes->push_back(std::move(mode));
  }
  const double inv2s2 = 1.0 / (2.0 * spec.envelope_sigma * spec.envelope_sigma);
  return [dim, modes, inv2s2](const Vector& x) {
    Multivector out(dim);
    const double env = std::exp(-x.norm2() * inv2s2);
    for (const auto& mode : *modes) {
      double phase = 0;
      for (int j = 0; j < dim; ++j) phase += mode.kappa.comp[j] * x.comp[j];
      const cplx osc = cplx{std::cos(phase), std::sin(phase)} * env;
      for (blade_mask a = 0; a < static_cast<blade_mask>(out.size()); ++a)
        out[a] += mode.amp[a] * osc;
    }
    return out;
  };
}

MVField band_limited_field(const GridSpec& grid, const BandSpec& spec) {
  MVField f = MVField::sample(grid, band_limited_evaluator(grid.dim, spec));
  if (spec.band_ceil > 0) {
    MVField fhat = cft_forward(f);
    const GridSpec sg = fhat.grid();
    const std::size_t count = sg.cell_count();
    for (std::size_t i = 0; i < count; ++i) {
      const double r = std::sqrt(sg.point(i).norm2());
      if (r < spec.band_floor || r > spec.band_ceil) {
        for (int a = 0; a < (1 << sg.dim); ++a)
          fhat.raw()[static_cast<std::size_t>(a) * count + i] = cplx{0.0, 0.0};
      }
    }
    f = cft_inverse(fhat);
  }
  return f;
}

BandSpec annulus_probe(std::uint64_t seed) {
  BandSpec spec;
  spec.seed = seed;
  spec.band_floor = 0.4;
  spec.band_ceil = 1.6;
  return spec;
}

std::function<Multivector(const Vector&)> gaussian_evaluator(int dim, double sigma) {
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  return [dim, inv2s2](const Vector& x) {
    return Multivector::scalar(dim, std::exp(-x.norm2() * inv2s2));
  };
}

MVField gaussian_field(const GridSpec& grid, double sigma) {
  return MVField::sample(grid, gaussian_evaluator(grid.dim, sigma));
}

MVField gaussian_blade_field(const GridSpec& grid, blade_mask a, cplx coeff, double sigma) {
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
  const int dim = grid.dim;
  return MVField::sample(grid, [=](const Vector& x) {
    return Multivector::basis_blade(dim, a, coeff * std::exp(-x.norm2() * inv2s2));
  });
}

}  // namespace cw
