#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "cliffwave/multivector.hpp"

namespace cw {

/// Uniform periodic grid on the box [-half_width, half_width]^dim with
/// points nodes per axis at x_m = -half_width + m * spacing. The same struct
/// describes the spectral grid, whose nodes are (q - points/2) * spacing.
struct GridSpec {
  int dim = 2;
  int points = 32;        // per axis, even
  double half_width = 8;  // box half-width L

  double spacing() const { return 2.0 * half_width / points; }
  double node(int m) const { return -half_width + m * spacing(); }
  std::size_t cell_count() const {
    std::size_t c = 1;
    for (int j = 0; j < dim; ++j) c *= static_cast<std::size_t>(points);
    return c;
  }
  /// Cell volume element, spacing^dim.
  double volume_element() const {
    double v = 1;
    for (int j = 0; j < dim; ++j) v *= spacing();
    return v;
  }
  /// Row-major flattening, axis 0 slowest, last axis contiguous.
  Vector point(std::size_t flat) const;
  void validate() const;

  bool operator==(const GridSpec&) const = default;
};

/// Spectral counterpart: same point count, node spacing pi / half_width, so
/// spacing * grid spacing * points = 2 pi exactly.
GridSpec spectral_grid(const GridSpec& g);

/// Multivector-valued function sampled on a grid. Storage is channel-major:
/// one contiguous complex array per blade.
class MVField {
public:
  MVField() = default;
  explicit MVField(const GridSpec& grid);

  static MVField sample(const GridSpec& grid,
                        const std::function<Multivector(const Vector&)>& fn);

  const GridSpec& grid() const { return grid_; }
  int channels() const { return 1 << grid_.dim; }
  std::size_t points() const { return npts_; }

  cplx* channel(blade_mask a) { return data_.data() + static_cast<std::size_t>(a) * npts_; }
  const cplx* channel(blade_mask a) const {
    return data_.data() + static_cast<std::size_t>(a) * npts_;
  }

  Multivector value(std::size_t flat) const;
  void value_into(std::size_t flat, Multivector& out) const;
  void set_value(std::size_t flat, const Multivector& m);

  MVField& operator+=(const MVField& o);
  MVField& operator-=(const MVField& o);
  MVField& operator*=(cplx s);
  /// this += w * o, fused.
  MVField& accumulate(const MVField& o, cplx w);

  friend MVField operator+(MVField a, const MVField& b) { return a += b; }
  friend MVField operator-(MVField a, const MVField& b) { return a -= b; }
  friend MVField operator*(MVField a, cplx s) { return a *= s; }

  std::vector<cplx>& raw() { return data_; }
  const std::vector<cplx>& raw() const { return data_; }

private:
  GridSpec grid_;
  std::size_t npts_ = 0;
  std::vector<cplx> data_;
};

/// Riemann-sum integral: spacing^dim times the pointwise sum, per channel.
Multivector integral(const MVField& f);

/// Clifford-valued pairing: spacing^dim * sum over the grid of
/// hermitian(f(x)) * g(x). Conjugate symmetric under hermitian conjugation.
Multivector inner_product(const MVField& f, const MVField& g);

/// Squared norm: scalar part of inner_product(f, f), computed channel-wise.
/// Equals the sum over blades of the channel's discrete L2 norm squared.
double l2_norm_sq(const MVField& f);
double l2_norm(const MVField& f);

/// Largest non-scalar coefficient magnitude of inner_product(f, f), a
/// diagnostic for the norm definition (should vanish identically).
double norm_nonscalar_residual(const MVField& f);

/// Pointwise multiplication by the coordinate x_k (1-based axis index).
/// On a spectral-grid field this multiplies by the frequency coordinate.
MVField coordinate_multiply(const MVField& f, int k);

/// Spectral derivative along axis k: forward transform, multiply by
/// i * xi_k, inverse transform.
MVField partial_derivative(const MVField& f, int k);

/// Second-order central difference on the periodic grid; the slow oracle
/// against which the spectral derivative is cross-checked.
MVField partial_derivative_central(const MVField& f, int k);

/// magnitude(<f,g>) / (|f| |g|); 0 when either norm vanishes. Contract: the
/// value never exceeds 1 beyond rounding.
double cauchy_schwarz_ratio(const MVField& f, const MVField& g);

/// Right multiplication by a constant multivector, pointwise.
MVField right_multiply(const MVField& f, const Multivector& c);

/// out += weight * a * b with pointwise geometric products; all three fields
/// on one grid.
void accumulate_pointwise_product(MVField& out, const MVField& a, const MVField& b, double weight);

/// Text table export: one row per grid point, coordinates then re/im pairs
/// for every blade channel.
void write_field_table(const MVField& f, std::ostream& out);

}  // namespace cw
