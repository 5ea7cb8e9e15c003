#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cliffwave/cft.hpp"
#include "cliffwave/wavelet.hpp"
#include "helpers.hpp"

using namespace cw;

namespace {
constexpr double kPi = std::numbers::pi_v<double>;

GridSpec desk_grid(int dim, int n) { return GridSpec{dim, n, 8.0}; }

double field_distance(const MVField& a, const MVField& b) {
  MVField d = a;
  d -= b;
  return l2_norm(d);
}
}  // namespace

TEST_CASE("mexican hat closed forms") {
  const MotherWavelet w = mexican_hat(2);
  const Vector x = make_vector(2, {0.6, -1.1});
  const double env = std::exp(-0.5 * x.norm2());
  const Multivector ps = w.space(x);
  CHECK(std::abs(ps[0b01] - cplx{0.6 * env, 0.0}) < 1e-15);
  CHECK(std::abs(ps[0b10] - cplx{-1.1 * env, 0.0}) < 1e-15);
  CHECK(std::abs(ps[0b00]) == 0.0);
  CHECK(std::abs(ps[0b11]) == 0.0);

  const Multivector ph = w.spectrum(x);
  CHECK(std::abs(ph[0b01] - cplx{0.0, -0.6 * env}) < 1e-15);
  CHECK(std::abs(ph[0b10] - cplx{0.0, 1.1 * env}) < 1e-15);
}

TEST_CASE("sampled mexican hat matches its analytic norm") {
  const MotherWavelet w = mexican_hat(2);
  const MVField psi = MVField::sample(desk_grid(2, 128), w.space);
  // |psi|^2 = integral |x|^2 exp(-|x|^2) = pi in the plane
  CHECK(l2_norm_sq(psi) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(w.norm_l2_analytic == doctest::Approx(std::sqrt(kPi)).epsilon(1e-14));
}

TEST_CASE("closed-form spectrum agrees with the transform of the space form") {
  for (const auto& name : wavelet_names()) {
    CAPTURE(name);
    const MotherWavelet w = wavelet_by_name(name, 2);
    const GridSpec grid = desk_grid(2, 128);
    const MVField spatial = MVField::sample(grid, w.space);
    const MVField direct = MVField::sample(spectral_grid(grid), w.spectrum);
    const MVField via_cft = cft_forward(spatial);
    CHECK(field_distance(via_cft, direct) / l2_norm(direct) < 1e-10);
  }
}

TEST_CASE("mexican hat admissibility in the plane") {
  const auto res = check_admissibility(mexican_hat(2), desk_grid(2, 128));
  CHECK(res.scalar_ok);
  CHECK(res.scalarness_residual < 1e-10);
  CHECK(res.finite);
  const double analytic = 4.0 * kPi * kPi * kPi;
  CHECK(res.a_quadrature == doctest::Approx(analytic).epsilon(1e-4));
  CHECK(res.zero_bin_value == doctest::Approx(1.0).epsilon(1e-3));
  CHECK(res.zero_bin_spread < 1e-3);
  CHECK(res.l2_norm == doctest::Approx(std::sqrt(kPi)).epsilon(1e-10));
}

TEST_CASE("mexican hat admissibility in dim 3") {
  // integrand grows like 1/|xi| toward 0 yet stays integrable; the probe
  // must not mistake that for divergence
  const auto res = check_admissibility(mexican_hat(3), desk_grid(3, 32));
  CHECK(res.scalar_ok);
  CHECK(res.finite);
  const double analytic = 16.0 * std::pow(kPi, 4);
  CHECK(res.a_quadrature == doctest::Approx(analytic).epsilon(0.02));
}

TEST_CASE("single-axis derivative wavelet is admissible with direction spread") {
  const auto res = check_admissibility(gauss_d1(2), desk_grid(2, 128));
  CHECK(res.scalar_ok);
  CHECK(res.finite);
  const double analytic = 2.0 * kPi * kPi * kPi;
  CHECK(res.a_quadrature == doctest::Approx(analytic).epsilon(1e-3));
  // integrand limit is xi_1^2 / |xi|^2: 1 along e1, 0 along e2, 1/2 averaged
  CHECK(res.zero_bin_value == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(res.zero_bin_spread == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("plain gaussian control fails admissibility") {
  const auto res = check_admissibility(plain_gaussian(2), desk_grid(2, 128));
  CHECK(res.scalar_ok);  // scalar spectrum, just not vanishing at 0
  CHECK_FALSE(res.finite);
  CHECK(std::isinf(res.a_quadrature));
  CHECK(std::isinf(plain_gaussian(2).admissibility_analytic));
}

TEST_CASE("wavelet registry") {
  CHECK(wavelet_names().size() == 3);
  CHECK_THROWS_AS(wavelet_by_name("sombrero", 2), std::invalid_argument);
  for (const auto& name : wavelet_names()) {
    const MotherWavelet w = wavelet_by_name(name, 3);
    CHECK(w.name == name);
    CHECK(w.dim == 3);
  }
}

TEST_CASE("admissibility rejects dimension mismatch") {
  CHECK_THROWS_AS(check_admissibility(mexican_hat(3), desk_grid(2, 32)), std::invalid_argument);
}

TEST_CASE("analytic constants scale with dimension") {
  // closed polar-coordinate forms: mexican hat (2 pi)^n pi^{n/2} / Gamma(n/2)
  CHECK(mexican_hat(3).admissibility_analytic ==
        doctest::Approx(16.0 * std::pow(kPi, 4)).epsilon(1e-12));
  CHECK(gauss_d1(2).admissibility_analytic ==
        doctest::Approx(2.0 * std::pow(kPi, 3)).epsilon(1e-12));
  CHECK(gauss_d1(3).admissibility_analytic ==
        doctest::Approx(16.0 * std::pow(kPi, 4) / 3.0).epsilon(1e-12));
}
