#include "cliffwave/field.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "cliffwave/cft.hpp"

namespace cw {

void GridSpec::validate() const {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("grid dimension out of range");
  if (points < 2 || points % 2 != 0)
    throw std::invalid_argument("grid needs an even, positive point count");
  if (!(half_width > 0)) throw std::invalid_argument("grid half width must be positive");
}

Vector GridSpec::point(std::size_t flat) const {
  Vector x;
  x.dim = dim;
  const double h = spacing();
  for (int j = dim - 1; j >= 0; --j) {
    int m = static_cast<int>(flat % static_cast<std::size_t>(points));
    flat /= static_cast<std::size_t>(points);
    x.comp[j] = -half_width + m * h;
  }
  return x;
}

GridSpec spectral_grid(const GridSpec& g) {
  // spacing pi / L; nodes (q - N/2) d = -half_width_xi + q d
  GridSpec s = g;
  s.half_width = std::numbers::pi_v<double> * g.points / (2.0 * g.half_width);
  return s;
}

MVField::MVField(const GridSpec& grid) : grid_(grid) {
  grid_.validate();
  npts_ = grid_.cell_count();
  data_.assign(static_cast<std::size_t>(1 << grid_.dim) * npts_, cplx{0.0, 0.0});
}

MVField MVField::sample(const GridSpec& grid,
                        const std::function<Multivector(const Vector&)>& fn) {
  MVField f(grid);
  const int ch = f.channels();
  for (std::size_t i = 0; i < f.npts_; ++i) {
    Multivector v = fn(grid.point(i));
    if (v.dimension() != grid.dim) throw std::invalid_argument("evaluator dimension mismatch");
    for (int a = 0; a < ch; ++a) f.data_[static_cast<std::size_t>(a) * f.npts_ + i] = v[a];
  }
  return f;
}

Multivector MVField::value(std::size_t flat) const {
  Multivector m(grid_.dim);
  value_into(flat, m);
  return m;
}

void MVField::value_into(std::size_t flat, Multivector& out) const {
  for (int a = 0; a < channels(); ++a)
    out[static_cast<blade_mask>(a)] = data_[static_cast<std::size_t>(a) * npts_ + flat];
}

void MVField::set_value(std::size_t flat, const Multivector& m) {
  for (int a = 0; a < channels(); ++a)
    data_[static_cast<std::size_t>(a) * npts_ + flat] = m[static_cast<blade_mask>(a)];
}

namespace {
void require_same_grid(const MVField& a, const MVField& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("field grid mismatch");
}
}  // namespace

MVField& MVField::operator+=(const MVField& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

MVField& MVField::operator-=(const MVField& o) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

MVField& MVField::operator*=(cplx s) {
  for (auto& c : data_) c *= s;
  return *this;
}

MVField& MVField::accumulate(const MVField& o, cplx w) {
  require_same_grid(*this, o);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += w * o.data_[i];
  return *this;
}

Multivector integral(const MVField& f) {
  Multivector acc(f.grid().dim);
  const double vol = f.grid().volume_element();
  for (int a = 0; a < f.channels(); ++a) {
    const cplx* ch = f.channel(static_cast<blade_mask>(a));
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < f.points(); ++i) s += ch[i];
    acc[static_cast<blade_mask>(a)] = s * vol;
  }
  return acc;
}

Multivector inner_product(const MVField& f, const MVField& g) {
  require_same_grid(f, g);
  const int dim = f.grid().dim;
  const int ch = f.channels();
  // hermitian(f)g per point, channel-pair decomposition: for blades A, B the
  // product e_A e_B lands on A xor B with a fixed sign, so accumulate one
  // complex sum per (A, B) pair and assemble afterwards.
  Multivector acc(dim);
  for (int a = 0; a < ch; ++a) {
    const double ha = conjugation_sign(static_cast<blade_mask>(a));
    const cplx* fa = f.channel(static_cast<blade_mask>(a));
    for (int b = 0; b < ch; ++b) {
      const cplx* gb = g.channel(static_cast<blade_mask>(b));
      cplx s{0.0, 0.0};
      for (std::size_t i = 0; i < f.points(); ++i) s += std::conj(fa[i]) * gb[i];
      const double sign =
          ha * blade_product_sign(static_cast<blade_mask>(a), static_cast<blade_mask>(b));
      acc[static_cast<blade_mask>(a ^ b)] += sign * s;
    }
  }
  return acc * cplx{f.grid().volume_element(), 0.0};
}

double l2_norm_sq(const MVField& f) {
  double s = 0;
  for (const auto& c : f.raw()) s += std::norm(c);
  return s * f.grid().volume_element();
}

double l2_norm(const MVField& f) { return std::sqrt(l2_norm_sq(f)); }

double norm_nonscalar_residual(const MVField& f) {
  Multivector q = inner_product(f, f);
  double r = 0;
  for (blade_mask a = 1; a < static_cast<blade_mask>(q.size()); ++a)
    r = std::max(r, std::abs(q[a]));
  return r;
}

MVField coordinate_multiply(const MVField& f, int k) {
  if (k < 1 || k > f.grid().dim) throw std::invalid_argument("axis index out of range");
  MVField out(f.grid());
  const GridSpec& g = f.grid();
  const int axis = k - 1;
  // stride of axis k-1 in the row-major flattening
  std::size_t stride = 1;
  for (int t = g.dim - 1; t > axis; --t) stride *= static_cast<std::size_t>(g.points);
  for (int a = 0; a < f.channels(); ++a) {
    const cplx* src = f.channel(static_cast<blade_mask>(a));
    cplx* dst = out.channel(static_cast<blade_mask>(a));
    for (std::size_t i = 0; i < f.points(); ++i) {
      const int m = static_cast<int>((i / stride) % static_cast<std::size_t>(g.points));
      dst[i] = src[i] * g.node(m);
    }
  }
  return out;
}

MVField partial_derivative(const MVField& f, int k) {
  if (k < 1 || k > f.grid().dim) throw std::invalid_argument("axis index out of range");
  MVField F = cft_forward(f);
  MVField xF = coordinate_multiply(F, k);  // multiplies by xi_k on the spectral grid
  xF *= cplx{0.0, 1.0};
  return cft_inverse(xF);
}

MVField partial_derivative_central(const MVField& f, int k) {
  if (k < 1 || k > f.grid().dim) throw std::invalid_argument("axis index out of range");
  const GridSpec& g = f.grid();
  const int axis = k - 1;
  std::size_t stride = 1;
  for (int t = g.dim - 1; t > axis; --t) stride *= static_cast<std::size_t>(g.points);
  const std::size_t np = static_cast<std::size_t>(g.points);
  const double inv2h = 1.0 / (2.0 * g.spacing());
  MVField out(f.grid());
  for (int a = 0; a < f.channels(); ++a) {
    const cplx* src = f.channel(static_cast<blade_mask>(a));
    cplx* dst = out.channel(static_cast<blade_mask>(a));
    for (std::size_t i = 0; i < f.points(); ++i) {
      const std::size_t m = (i / stride) % np;
      const std::size_t up = (m + 1 == np) ? i - (np - 1) * stride : i + stride;
      const std::size_t dn = (m == 0) ? i + (np - 1) * stride : i - stride;
      dst[i] = (src[up] - src[dn]) * inv2h;
    }
  }
  return out;
}

double cauchy_schwarz_ratio(const MVField& f, const MVField& g) {
  const double nf = l2_norm(f), ng = l2_norm(g);
  if (nf == 0.0 || ng == 0.0) return 0.0;
  return inner_product(f, g).magnitude() / (nf * ng);
}

MVField right_multiply(const MVField& f, const Multivector& c) {
  if (c.dimension() != f.grid().dim) throw std::invalid_argument("dimension mismatch");
  MVField out(f.grid());
  Multivector v(f.grid().dim), r(f.grid().dim);
  for (std::size_t i = 0; i < f.points(); ++i) {
    f.value_into(i, v);
    geometric_product_into(v, c, r);
    out.set_value(i, r);
  }
  return out;
}

void accumulate_pointwise_product(MVField& out, const MVField& a, const MVField& b,
                                  double weight) {
  require_same_grid(out, a);
  require_same_grid(out, b);
  const int dim = out.grid().dim;
  Multivector av(dim), bv(dim), prod(dim), acc(dim);
  for (std::size_t i = 0; i < out.points(); ++i) {
    a.value_into(i, av);
    b.value_into(i, bv);
    geometric_product_into(av, bv, prod);
    prod *= weight;
    out.value_into(i, acc);
    acc += prod;
    out.set_value(i, acc);
  }
}

void write_field_table(const MVField& f, std::ostream& out) {
  const GridSpec& g = f.grid();
  out << "# dim=" << g.dim << " points=" << g.points << " half_width=" << g.half_width << "\n";
  out << "#";
  for (int j = 0; j < g.dim; ++j) out << " x" << (j + 1);
  for (int a = 0; a < f.channels(); ++a)
    out << " re_" << blade_name(static_cast<blade_mask>(a)) << " im_"
        << blade_name(static_cast<blade_mask>(a));
  out << "\n";
  for (std::size_t i = 0; i < f.points(); ++i) {
    Vector x = g.point(i);
    for (int j = 0; j < g.dim; ++j) out << x.comp[j] << (j + 1 < g.dim ? " " : "");
    for (int a = 0; a < f.channels(); ++a) {
      const cplx c = f.channel(static_cast<blade_mask>(a))[i];
      out << " " << c.real() << " " << c.imag();
    }
    out << "\n";
  }
}

}  // namespace cw
