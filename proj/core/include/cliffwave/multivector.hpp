#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace cw {

using cplx = std::complex<double>;

/// Basis blades are indexed by bitmask: bit j-1 set means the generator e_j
/// occurs in the blade. Mask 0 is the scalar blade. An algebra of dimension n
/// has 1<<n blades. Generators square to -1 and anticommute:
///   e_j e_k + e_k e_j = -2 delta_jk.
using blade_mask = std::uint32_t;

inline constexpr int kMaxDim = 8;

/// Number of generators in the blade.
int blade_grade(blade_mask a);

/// Sign of e_A e_B relative to the blade e_{A xor B}: the parity of the
/// transpositions needed to sort the concatenated index list, times -1 for
/// every repeated generator (each squares to -1).
int blade_product_sign(blade_mask a, blade_mask b);

/// Result blade of e_A e_B.
inline blade_mask blade_product_mask(blade_mask a, blade_mask b) { return a ^ b; }

/// Per-blade signs of the three grade involutions.
int main_involution_sign(blade_mask a);  // (-1)^k
int reversion_sign(blade_mask a);        // (-1)^{k(k-1)/2}
int conjugation_sign(blade_mask a);      // (-1)^{k(k+1)/2}

/// Printable blade name: "1" for the scalar blade, otherwise "e" followed by
/// the ascending generator indices, e.g. "e12".
std::string blade_name(blade_mask a);

/// Dense multivector over the complexified algebra: one complex coefficient
/// per blade. Cheap value type; dimension is fixed at construction.
class Multivector {
public:
  Multivector() : dim_(0), coef_(1, cplx{0.0, 0.0}) {}
  explicit Multivector(int dim);

  static Multivector scalar(int dim, cplx value);
  static Multivector basis_blade(int dim, blade_mask a, cplx coeff = 1.0);

  int dimension() const { return dim_; }
  int size() const { return static_cast<int>(coef_.size()); }

  cplx operator[](blade_mask a) const { return coef_[a]; }
  cplx& operator[](blade_mask a) { return coef_[a]; }

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(cplx s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, cplx s) { return a *= s; }
  friend Multivector operator*(cplx s, Multivector a) { return a *= s; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }

  /// Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  bool operator==(const Multivector& o) const = default;

  /// Keep only the coefficients of blades with the given grade.
  Multivector grade_part(int k) const;

  cplx scalar_part() const { return coef_[0]; }

  /// Grade involution, reversion, Clifford conjugation: per-blade sign flips.
  Multivector main_involution() const;
  Multivector reversion() const;
  Multivector conjugation() const;

  /// Clifford conjugation combined with complex conjugation of every
  /// coefficient. The natural adjoint for the complexified algebra:
  /// scalar_part(hermitian(a) * a) = sum of |coeff|^2.
  Multivector hermitian() const;

  /// Coefficient-Euclidean magnitude: sqrt(sum over blades of |coeff|^2).
  double magnitude() const;

  double max_abs_coeff() const;

  const std::vector<cplx>& coefficients() const { return coef_; }

private:
  int dim_;
  std::vector<cplx> coef_;
};

/// out = a * b without allocating; out must have the same dimension.
void geometric_product_into(const Multivector& a, const Multivector& b, Multivector& out);

/// acc += a * b without allocating.
void geometric_product_accumulate(const Multivector& a, const Multivector& b, Multivector& acc);

/// Euclidean vector used as a grid point, frequency node, or translation.
struct Vector {
  int dim = 0;
  double comp[kMaxDim] = {0, 0, 0, 0, 0, 0, 0, 0};

  double operator[](int j) const { return comp[j]; }
  double& operator[](int j) { return comp[j]; }

  double norm2() const {
    double s = 0;
    for (int j = 0; j < dim; ++j) s += comp[j] * comp[j];
    return s;
  }
};

Vector make_vector(int dim, std::initializer_list<double> comps);

/// Embed a Euclidean vector as the grade-1 multivector sum x_j e_j.
Multivector embed(const Vector& x);

/// Clifford dot of two grade-1 vectors: the scalar part of the geometric
/// product, equal to minus the Euclidean inner product in this signature.
double clifford_dot(const Vector& x, const Vector& y);

/// Wedge of two grade-1 vectors: the grade-2 part of the geometric product.
Multivector wedge(const Vector& x, const Vector& y);

/// Render in the term grammar "3.5 + 2i e1 - (1+2i) e12"; parse accepts the
/// same grammar back. Formatting uses shortest round-trip digits.
std::string to_string(const Multivector& m);
Multivector parse_multivector(const std::string& text, int dim);

}  // namespace cw
