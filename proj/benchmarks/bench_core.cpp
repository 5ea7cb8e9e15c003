#include <benchmark/benchmark.h>

#include "cliffwave/cft.hpp"
#include "cliffwave/cwt.hpp"
#include "cliffwave/multivector.hpp"
#include "cliffwave/testfield.hpp"

namespace {

cw::Multivector random_mv(cw::SeededRng& rng, int dim) {
  cw::Multivector m(dim);
  for (int a = 0; a < (1 << dim); ++a)
    m[static_cast<cw::blade_mask>(a)] = cw::cplx{rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return m;
}

void bm_geometric_product(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  cw::SeededRng rng(7);
  const cw::Multivector a = random_mv(rng, dim);
  const cw::Multivector b = random_mv(rng, dim);
  cw::Multivector out(dim);
  for (auto _ : state) {
    cw::geometric_product_into(a, b, out);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(bm_geometric_product)->Arg(2)->Arg(3)->Arg(4);

void bm_cft_forward(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const cw::GridSpec grid{2, n, 8.0};
  cw::BandSpec spec;
  const cw::MVField f = cw::band_limited_field(grid, spec);
  for (auto _ : state) {
    cw::MVField fhat = cw::cft_forward(f);
    benchmark::DoNotOptimize(fhat);
  }
}
BENCHMARK(bm_cft_forward)->Arg(32)->Arg(64)->Arg(128);

void bm_transform_slices(benchmark::State& state) {
  const cw::GridSpec grid{2, static_cast<int>(state.range(0)), 8.0};
  cw::BandSpec spec;
  const cw::MVField f = cw::band_limited_field(grid, spec);
  const cw::MotherWavelet psi = cw::mexican_hat(2);
  cw::CwtRequest req;
  req.scales = cw::log_scale_quadrature(0.5, 2.0, 4, 2);
  req.spins = cw::haar_samples(2, 2);
  for (auto _ : state) {
    double energy = 0;
    cw::for_each_slice(f, psi, req, [&](const cw::CwtSlice& s) {
      energy += s.scale_weight * s.spin_weight * cw::l2_norm_sq(s.coefficients);
    });
    benchmark::DoNotOptimize(energy);
  }
}
BENCHMARK(bm_transform_slices)->Arg(32)->Arg(64);

void bm_daughter_sampling(benchmark::State& state) {
  const cw::GridSpec grid{2, static_cast<int>(state.range(0)), 8.0};
  const cw::MotherWavelet psi = cw::mexican_hat(2);
  const cw::Vector b = cw::make_vector(2, {0.5, -0.25});
  const cw::Multivector rotor = cw::spin2_from_angle(0.3);
  for (auto _ : state) {
    cw::MVField d = cw::daughter_field(psi, grid, 1.5, b, rotor);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(bm_daughter_sampling)->Arg(32)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
