#pragma once

#include <vector>

#include "cliffwave/multivector.hpp"

namespace cw {

/// Element of the spin group: an even unit multivector s with
/// s * conjugation(s) = 1, acting on vectors by x -> s x conjugation(s).
struct SpinSample {
  Multivector rotor;
  double weight = 1.0;  // Haar weight; a sample set sums to 1
};

/// Plane rotor cos(theta) + sin(theta) e12; its sandwich action rotates the
/// 12-plane by the angle 2 theta.
Multivector spin2_from_angle(double theta);

/// Largest odd-grade coefficient plus unit-norm defect; valid rotors keep
/// this below 1e-12.
double rotor_residual(const Multivector& s);

/// Sandwich action s x conjugation(s), extracted as a vector. Throws when
/// rotor_residual(s) exceeds 1e-10 or the result keeps a non-vector part.
Vector rotate_vector(const Multivector& s, const Vector& x);

/// Orthogonal matrix of the sandwich action: column j is rotate_vector
/// applied to the j-th basis vector.
struct RotationMatrix {
  int dim = 0;
  double m[kMaxDim][kMaxDim] = {};

  void apply(const Vector& x, Vector& out) const {
    out.dim = dim;
    for (int r = 0; r < dim; ++r) {
      double s = 0;
      for (int c = 0; c < dim; ++c) s += m[r][c] * x.comp[c];
      out.comp[r] = s;
    }
  }
  /// Inverse rotation, the transpose.
  void apply_inverse(const Vector& x, Vector& out) const {
    out.dim = dim;
    for (int r = 0; r < dim; ++r) {
      double s = 0;
      for (int c = 0; c < dim; ++c) s += m[c][r] * x.comp[c];
      out.comp[r] = s;
    }
  }
};

RotationMatrix rotation_matrix(const Multivector& s);

/// Equal-weight Haar sample of the spin group, total weight 1.
/// dim 2: angles j pi / count on [0, pi); rotors of theta and theta + pi act
/// identically on vectors, so [0, pi) covers every rotation exactly once.
/// dim 3: low-discrepancy points on the unit quaternion sphere (Halton bases
/// 2, 3, 5 through the standard sphere map), identified with the even
/// subalgebra span{1, e12, e13, e23}.
std::vector<SpinSample> haar_samples(int dim, int count);

}  // namespace cw
