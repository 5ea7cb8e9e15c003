#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cliffwave/spin.hpp"
#include "helpers.hpp"

using namespace cw;

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
}

TEST_CASE("plane rotor doubles its angle") {
  // theta = pi/4 sends e1 to e2: the sandwich action rotates by 2 theta
  const Multivector s = spin2_from_angle(kPi / 4);
  const Vector v = rotate_vector(s, make_vector(2, {1.0, 0.0}));
  CHECK(v[0] == doctest::Approx(0.0));
  CHECK(v[1] == doctest::Approx(1.0));

  const Vector w = rotate_vector(spin2_from_angle(kPi / 8), make_vector(2, {1.0, 0.0}));
  CHECK(w[0] == doctest::Approx(std::cos(kPi / 4)));
  CHECK(w[1] == doctest::Approx(std::sin(kPi / 4)));
}

TEST_CASE("rotors of theta and theta plus pi act identically") {
  const Multivector a = spin2_from_angle(0.3);
  const Multivector b = spin2_from_angle(0.3 + kPi);
  const Vector x = make_vector(2, {0.7, -1.1});
  const Vector va = rotate_vector(a, x);
  const Vector vb = rotate_vector(b, x);
  CHECK(va[0] == doctest::Approx(vb[0]));
  CHECK(va[1] == doctest::Approx(vb[1]));
}

TEST_CASE("rotation preserves norm and geometric dot") {
  const Multivector s = spin2_from_angle(1.234);
  const Vector x = make_vector(2, {0.5, 2.0});
  const Vector rx = rotate_vector(s, x);
  CHECK(rx.norm2() == doctest::Approx(x.norm2()).epsilon(1e-13));
  // clifford_dot is rotation invariant
  const Vector y = make_vector(2, {-1.5, 0.25});
  const Vector ry = rotate_vector(s, y);
  CHECK(clifford_dot(rx, ry) == doctest::Approx(clifford_dot(x, y)).epsilon(1e-13));
}

TEST_CASE("rotation matrix is special orthogonal") {
  for (int dim : {2, 3}) {
    const auto samples = haar_samples(dim, 6);
    for (const auto& smp : samples) {
      const RotationMatrix r = rotation_matrix(smp.rotor);
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
          double dot = 0;
          for (int k = 0; k < dim; ++k) dot += r.m[k][i] * r.m[k][j];
          CHECK(dot == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-12));
        }
      if (dim == 2) {
        CHECK(r.m[0][0] * r.m[1][1] - r.m[0][1] * r.m[1][0] == doctest::Approx(1.0));
      } else {
        const double det =
            r.m[0][0] * (r.m[1][1] * r.m[2][2] - r.m[1][2] * r.m[2][1]) -
            r.m[0][1] * (r.m[1][0] * r.m[2][2] - r.m[1][2] * r.m[2][0]) +
            r.m[0][2] * (r.m[1][0] * r.m[2][1] - r.m[1][1] * r.m[2][0]);
        CHECK(det == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("apply and apply_inverse are mutually inverse") {
  const auto samples = haar_samples(3, 5);
  const Vector x = make_vector(3, {0.4, -0.9, 1.7});
  for (const auto& smp : samples) {
    const RotationMatrix r = rotation_matrix(smp.rotor);
    Vector y, back;
    r.apply(x, y);
    r.apply_inverse(y, back);
    for (int j = 0; j < 3; ++j) CHECK(back[j] == doctest::Approx(x[j]).epsilon(1e-13));
  }
}

TEST_CASE("matrix action equals the sandwich action") {
  const auto samples = haar_samples(3, 8);
  const Vector x = make_vector(3, {1.0, 0.5, -2.0});
  for (const auto& smp : samples) {
    const RotationMatrix r = rotation_matrix(smp.rotor);
    Vector via_matrix;
    r.apply(x, via_matrix);
    const Vector via_sandwich = rotate_vector(smp.rotor, x);
    for (int j = 0; j < 3; ++j)
      CHECK(via_matrix[j] == doctest::Approx(via_sandwich[j]).epsilon(1e-12));
  }
}

TEST_CASE("haar samples are unit rotors with weights summing to one") {
  for (int dim : {2, 3}) {
    for (int count : {1, 4, 9}) {
      const auto samples = haar_samples(dim, count);
      CHECK(samples.size() == static_cast<std::size_t>(count));
      double total = 0;
      for (const auto& smp : samples) {
        CHECK(rotor_residual(smp.rotor) < 1e-12);
        total += smp.weight;
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("dim 2 haar angles cover the rotation group once") {
  const auto samples = haar_samples(2, 4);
  // action angles 2 theta = 0, pi/2, pi, 3 pi/2: columns of the four
  // matrices sum to zero
  double sum00 = 0, sum10 = 0;
  for (const auto& smp : samples) {
    const RotationMatrix r = rotation_matrix(smp.rotor);
    sum00 += r.m[0][0];
    sum10 += r.m[1][0];
  }
  CHECK(std::abs(sum00) < 1e-12);
  CHECK(std::abs(sum10) < 1e-12);
}

TEST_CASE("invalid rotors are rejected") {
  Multivector junk(2);
  junk[0b01] = cplx{1, 0};  // odd grade, not a rotor
  CHECK(rotor_residual(junk) > 0.5);
  CHECK_THROWS_AS(rotate_vector(junk, make_vector(2, {1.0, 0.0})), std::invalid_argument);

  Multivector stretched(2);
  stretched[0] = cplx{2, 0};  // even but not unit
  CHECK(rotor_residual(stretched) > 0.5);
  CHECK_THROWS_AS(rotate_vector(stretched, make_vector(2, {1.0, 0.0})), std::invalid_argument);
}

TEST_CASE("even subalgebra quaternion relations in dim 3") {
  const int dim = 3;
  const Multivector i = Multivector::basis_blade(dim, 0b011);  // e12
  const Multivector j = Multivector::basis_blade(dim, 0b101);  // e13
  const Multivector k = Multivector::basis_blade(dim, 0b110);  // e23
  CHECK(testutil::mv_distance(i * i, -Multivector::scalar(dim, 1)) < 1e-15);
  CHECK(testutil::mv_distance(j * j, -Multivector::scalar(dim, 1)) < 1e-15);
  CHECK(testutil::mv_distance(k * k, -Multivector::scalar(dim, 1)) < 1e-15);
  CHECK(testutil::mv_distance(i * j, k) < 1e-15);
}
