#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cliffwave/multivector.hpp"
#include "helpers.hpp"

using namespace cw;
using testutil::Rng;
using testutil::oracle_blade_product;
using testutil::random_multivector;

TEST_CASE("blade product matches the transposition-count oracle") {
  for (int dim = 0; dim <= 5; ++dim) {
    const blade_mask n = blade_mask{1} << dim;
    for (blade_mask a = 0; a < n; ++a)
      for (blade_mask b = 0; b < n; ++b) {
        auto [sign, mask] = oracle_blade_product(a, b);
        CAPTURE(dim);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(blade_product_sign(a, b) == sign);
        CHECK(blade_product_mask(a, b) == mask);
      }
  }
}

TEST_CASE("generator relations") {
  const blade_mask e1 = 1, e2 = 2;
  CHECK(blade_product_sign(e1, e1) == -1);  // e1 e1 = -1
  CHECK(blade_product_mask(e1, e1) == 0);
  CHECK(blade_product_sign(e1, e2) == 1);  // e1 e2 = e12
  CHECK(blade_product_sign(e2, e1) == -1);  // e2 e1 = -e12
}

TEST_CASE("e12 times e1 gives plus e2") {
  auto e12 = Multivector::basis_blade(2, 0b11);
  auto e1 = Multivector::basis_blade(2, 0b01);
  auto p = e12 * e1;
  CHECK(p[0b10] == cplx{1.0, 0.0});
  CHECK((p - Multivector::basis_blade(2, 0b10)).magnitude() == 0.0);
}

TEST_CASE("vector embedding, dot, wedge") {
  auto x = make_vector(2, {1.0, 2.0});
  auto y = make_vector(2, {3.0, 4.0});
  CHECK(clifford_dot(x, y) == -11.0);

  auto p = embed(x) * embed(y);
  CHECK(p[0] == cplx{-11.0, 0.0});
  CHECK(p[0b11] == cplx{-2.0, 0.0});
  CHECK(to_string(p) == "-11 - 2 e12");

  // geometric product of vectors = dot part + wedge part
  auto w = wedge(x, y);
  CHECK(p[0].real() == clifford_dot(x, y));
  CHECK((p.grade_part(2) - w).magnitude() == 0.0);

  // x^2 = -|x|^2
  auto sq = embed(x) * embed(x);
  CHECK(sq[0] == cplx{-5.0, 0.0});
  CHECK(sq.grade_part(2).magnitude() == 0.0);
}

TEST_CASE("involution signs on basis blades") {
  for (int dim = 1; dim <= 4; ++dim)
    for (blade_mask a = 0; a < (blade_mask{1} << dim); ++a) {
      int k = blade_grade(a);
      auto blade = Multivector::basis_blade(dim, a);
      CHECK(blade.main_involution()[a].real() == ((k % 2) ? -1.0 : 1.0));
      CHECK(blade.reversion()[a].real() == ((k * (k - 1) / 2 % 2) ? -1.0 : 1.0));
      CHECK(blade.conjugation()[a].real() == ((k * (k + 1) / 2 % 2) ? -1.0 : 1.0));
    }
}

TEST_CASE("involutions are anti or plain automorphisms") {
  Rng rng(0x5eedULL);
  for (int dim = 1; dim <= 4; ++dim) {
    for (int rep = 0; rep < 8; ++rep) {
      auto a = random_multivector(rng, dim);
      auto b = random_multivector(rng, dim);
      auto ab = a * b;
      CHECK(testutil::mv_distance(ab.main_involution(),
                                  a.main_involution() * b.main_involution()) < 1e-12);
      CHECK(testutil::mv_distance(ab.reversion(), b.reversion() * a.reversion()) < 1e-12);
      CHECK(testutil::mv_distance(ab.conjugation(), b.conjugation() * a.conjugation()) < 1e-12);
      CHECK(testutil::mv_distance(ab.hermitian(), b.hermitian() * a.hermitian()) < 1e-12);
      // conjugation = main involution then reversion
      CHECK(testutil::mv_distance(a.conjugation(), a.main_involution().reversion()) == 0.0);
      // all three are involutive
      CHECK(testutil::mv_distance(a.main_involution().main_involution(), a) == 0.0);
      CHECK(testutil::mv_distance(a.reversion().reversion(), a) == 0.0);
      CHECK(testutil::mv_distance(a.hermitian().hermitian(), a) == 0.0);
    }
  }
}

TEST_CASE("hermitian adjoint recovers the coefficient norm") {
  Rng rng(0xadadULL);
  for (int dim = 1; dim <= 4; ++dim) {
    auto a = random_multivector(rng, dim);
    double sum = 0;
    for (blade_mask m = 0; m < (blade_mask{1} << dim); ++m) sum += std::norm(a[m]);
    auto q = a.hermitian() * a;
    CHECK(q.scalar_part().real() == doctest::Approx(sum).epsilon(1e-12));
    CHECK(std::abs(q.scalar_part().imag()) < 1e-12);
    CHECK(a.magnitude() == doctest::Approx(std::sqrt(sum)));
  }
  // frozen case: hermitian of i e1 is i e1 again
  auto v = Multivector::basis_blade(2, 0b01, cplx{0.0, 1.0});
  CHECK(testutil::mv_distance(v.hermitian(), v) == 0.0);
}

TEST_CASE("geometric product is associative") {
  Rng rng(0xa550cULL);
  for (int rep = 0; rep < 12; ++rep) {
    auto a = random_multivector(rng, 3);
    auto b = random_multivector(rng, 3);
    auto c = random_multivector(rng, 3);
    CHECK(testutil::mv_distance((a * b) * c, a * (b * c)) < 1e-12);
  }
}

TEST_CASE("grade projection splits the multivector") {
  Rng rng(0x97adeULL);
  auto a = random_multivector(rng, 4);
  Multivector sum(4);
  for (int k = 0; k <= 4; ++k) sum += a.grade_part(k);
  CHECK(testutil::mv_distance(sum, a) == 0.0);
  CHECK(a.grade_part(1).grade_part(2).magnitude() == 0.0);
}

TEST_CASE("formatting frozen cases") {
  CHECK(to_string(Multivector(2)) == "0");
  CHECK(to_string(Multivector::scalar(2, 3.5)) == "3.5");
  CHECK(to_string(Multivector::scalar(2, cplx{0.0, -2.0})) == "-2i");
  CHECK(to_string(Multivector::basis_blade(2, 0b01)) == "e1");
  CHECK(to_string(Multivector::basis_blade(2, 0b01, cplx{0.0, 1.0})) == "i e1");
  CHECK(to_string(Multivector::basis_blade(2, 0b11, cplx{1.0, 2.0})) == "(1 + 2i) e12");
  auto m = Multivector::scalar(2, 1.0);
  m[0b10] = cplx{0.0, -1.0};
  CHECK(to_string(m) == "1 - i e2");
}

TEST_CASE("parse accepts the documented grammar") {
  auto p = parse_multivector("-11 - 2 e12", 2);
  CHECK(p[0] == cplx{-11.0, 0.0});
  CHECK(p[0b11] == cplx{-2.0, 0.0});

  auto q = parse_multivector("2i e1 + e2 - (1 - 2i) e12 + 4", 2);
  CHECK(q[0b01] == cplx{0.0, 2.0});
  CHECK(q[0b10] == cplx{1.0, 0.0});
  CHECK(q[0b11] == cplx{-1.0, 2.0});
  CHECK(q[0] == cplx{4.0, 0.0});

  CHECK(parse_multivector("1e-3", 2)[0] == cplx{1e-3, 0.0});
  CHECK(parse_multivector("-i", 1)[0] == cplx{0.0, -1.0});
  CHECK(parse_multivector("e123", 3)[0b111] == cplx{1.0, 0.0});
  CHECK(parse_multivector("  3 + e1  ", 1)[0] == cplx{3.0, 0.0});
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_multivector("", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_multivector("e21", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_multivector("e3", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_multivector("1 +", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_multivector("foo", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_multivector("e", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_multivector("1 1", 2), std::invalid_argument);
}

TEST_CASE("format and parse round trip exactly") {
  Rng rng(0x2026ULL);
  for (int dim = 0; dim <= 4; ++dim)
    for (int rep = 0; rep < 16; ++rep) {
      auto a = random_multivector(rng, dim);
      // sprinkle structural zeros so different term shapes get exercised
      for (blade_mask m = 0; m < (blade_mask{1} << dim); ++m) {
        if (rng.uniform() < 0.3) a[m] = 0.0;
        if (rng.uniform() < 0.2) a[m] = cplx{a[m].real(), 0.0};
        if (rng.uniform() < 0.2) a[m] = cplx{0.0, a[m].imag()};
      }
      auto text = to_string(a);
      auto back = parse_multivector(text, dim);
      CAPTURE(text);
      CHECK(testutil::mv_distance(back, a) == 0.0);
    }
}
