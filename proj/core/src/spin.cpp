#include "cliffwave/spin.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cw {

Multivector spin2_from_angle(double theta) {
  Multivector s(2);
  s[0] = std::cos(theta);
  s[0b11] = std::sin(theta);
  return s;
}

double rotor_residual(const Multivector& s) {
  double odd = 0;
  for (blade_mask a = 0; a < static_cast<blade_mask>(s.size()); ++a)
    if (blade_grade(a) % 2 == 1) odd = std::max(odd, std::abs(s[a]));
  Multivector unit = s * s.conjugation();
  unit[0] -= 1.0;
  return std::max(odd, unit.magnitude());
}

Vector rotate_vector(const Multivector& s, const Vector& x) {
  if (s.dimension() != x.dim) throw std::invalid_argument("dimension mismatch");
  // odd blades and non-unit even elements still give grade-1 sandwiches
  // (reflections, scalings), so gate on the rotor itself, not the output
  if (rotor_residual(s) > 1e-10)
    throw std::invalid_argument("not a unit rotor");
  Multivector sx = s * embed(x) * s.conjugation();
  Vector out;
  out.dim = x.dim;
  double residual = 0;
  for (blade_mask a = 0; a < static_cast<blade_mask>(sx.size()); ++a) {
    if (blade_grade(a) == 1) continue;
    residual = std::max(residual, std::abs(sx[a]));
  }
  double scale = 0;
  for (int j = 0; j < x.dim; ++j) {
    const cplx c = sx[blade_mask{1} << j];
    out.comp[j] = c.real();
    residual = std::max(residual, std::abs(c.imag()));
    scale = std::max(scale, std::abs(c.real()));
  }
  if (residual > 1e-10 * std::max(1.0, scale))
    throw std::invalid_argument("sandwich action left a non-vector residual: invalid rotor");
  return out;
}

RotationMatrix rotation_matrix(const Multivector& s) {
  RotationMatrix R;
  R.dim = s.dimension();
  Vector e;
  e.dim = s.dimension();
  for (int c = 0; c < R.dim; ++c) {
    for (int j = 0; j < R.dim; ++j) e.comp[j] = (j == c) ? 1.0 : 0.0;
    Vector col = rotate_vector(s, e);
    for (int r = 0; r < R.dim; ++r) R.m[r][c] = col.comp[r];
  }
  return R;
}

namespace {

double radical_inverse(unsigned base, unsigned long long i) {
  double inv = 1.0 / base, f = inv, r = 0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

}  // namespace

std::vector<SpinSample> haar_samples(int dim, int count) {
  if (count < 1) throw std::invalid_argument("need at least one spin sample");
  std::vector<SpinSample> out;
  out.reserve(static_cast<std::size_t>(count));
  const double w = 1.0 / count;
  if (dim == 2) {
    for (int j = 0; j < count; ++j)
      out.push_back({spin2_from_angle(j * std::numbers::pi / count), w});
  } else if (dim == 3) {
    // uniform unit quaternions via the sphere map from three low-discrepancy
    // coordinates, then identified with the even subalgebra:
    // (c0, c1, c2, c3) -> c0 + c1 e12 + c2 e13 + c3 e23.
    // The bivector units obey e12 e13 = e23 and square to -1, which is the
    // quaternion table, so unit quaternions land on valid rotors.
    for (int j = 1; j <= count; ++j) {
      const double u1 = radical_inverse(2, static_cast<unsigned long long>(j));
      const double u2 = radical_inverse(3, static_cast<unsigned long long>(j));
      const double u3 = radical_inverse(5, static_cast<unsigned long long>(j));
      const double r1 = std::sqrt(1.0 - u1), r2 = std::sqrt(u1);
      const double t2 = 2.0 * std::numbers::pi * u2, t3 = 2.0 * std::numbers::pi * u3;
      Multivector s(3);
      s[0] = r2 * std::cos(t3);
      s[0b011] = r1 * std::sin(t2);  // e12
      s[0b101] = r1 * std::cos(t2);  // e13
      s[0b110] = r2 * std::sin(t3);  // e23
      out.push_back({std::move(s), w});
    }
  } else {
    throw std::invalid_argument("haar_samples supports dimensions 2 and 3");
  }
  return out;
}

}  // namespace cw
