#include "cliffwave/multivector.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace cw {

int blade_grade(blade_mask a) { return std::popcount(a); }

int blade_product_sign(blade_mask a, blade_mask b) {
  // Count the transpositions that move each generator of a past the
  // generators of b that precede it, then a -1 per common generator.
  int swaps = 0;
  blade_mask t = a >> 1;
  while (t != 0) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  swaps += std::popcount(a & b);  // each shared generator squares to -1
  return (swaps & 1) ? -1 : 1;
}

int main_involution_sign(blade_mask a) {
  return (blade_grade(a) & 1) ? -1 : 1;
}

int reversion_sign(blade_mask a) {
  int k = blade_grade(a);
  return ((k * (k - 1) / 2) & 1) ? -1 : 1;
}

int conjugation_sign(blade_mask a) {
  int k = blade_grade(a);
  return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

std::string blade_name(blade_mask a) {
  if (a == 0) return "1";
  std::string s = "e";
  for (int j = 0; j < kMaxDim; ++j)
    if (a & (blade_mask{1} << j)) s += static_cast<char>('1' + j);
  return s;
}

namespace {

// Signs of all blade pairs for one dimension, built on first use.
// Single threaded library; plain function statics are fine.
const std::vector<signed char>& sign_table(int dim) {
  static std::vector<signed char> tables[kMaxDim + 1];
  auto& t = tables[dim];
  if (t.empty()) {
    const std::size_t n = std::size_t{1} << dim;
    t.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        t[a * n + b] = static_cast<signed char>(
            blade_product_sign(static_cast<blade_mask>(a), static_cast<blade_mask>(b)));
  }
  return t;
}

void check_dim(int dim) {
  if (dim < 0 || dim > kMaxDim)
    throw std::invalid_argument("multivector dimension out of range");
}

}  // namespace

Multivector::Multivector(int dim) : dim_(dim) {
  check_dim(dim);
  coef_.assign(std::size_t{1} << dim, cplx{0.0, 0.0});
}

Multivector Multivector::scalar(int dim, cplx value) {
  Multivector m(dim);
  m.coef_[0] = value;
  return m;
}

Multivector Multivector::basis_blade(int dim, blade_mask a, cplx coeff) {
  Multivector m(dim);
  if (a >= m.coef_.size()) throw std::invalid_argument("blade mask out of range");
  m.coef_[a] = coeff;
  return m;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] += o.coef_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch");
  for (std::size_t i = 0; i < coef_.size(); ++i) coef_[i] -= o.coef_[i];
  return *this;
}

Multivector& Multivector::operator*=(cplx s) {
  for (auto& c : coef_) c *= s;
  return *this;
}

void geometric_product_into(const Multivector& a, const Multivector& b, Multivector& out) {
  if (a.dimension() != b.dimension() || a.dimension() != out.dimension())
    throw std::invalid_argument("dimension mismatch");
  const auto& signs = sign_table(a.dimension());
  const std::size_t n = std::size_t{1} << a.dimension();
  for (std::size_t i = 0; i < n; ++i) out[static_cast<blade_mask>(i)] = cplx{0.0, 0.0};
  for (std::size_t i = 0; i < n; ++i) {
    const cplx ca = a[static_cast<blade_mask>(i)];
    if (ca == cplx{0.0, 0.0}) continue;
    const signed char* row = &signs[i * n];
    for (std::size_t j = 0; j < n; ++j) {
      const cplx cb = b[static_cast<blade_mask>(j)];
      if (cb == cplx{0.0, 0.0}) continue;
      out[static_cast<blade_mask>(i ^ j)] += static_cast<double>(row[j]) * ca * cb;
    }
  }
}

void geometric_product_accumulate(const Multivector& a, const Multivector& b, Multivector& acc) {
  if (a.dimension() != b.dimension() || a.dimension() != acc.dimension())
    throw std::invalid_argument("dimension mismatch");
  const auto& signs = sign_table(a.dimension());
  const std::size_t n = std::size_t{1} << a.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    const cplx ca = a[static_cast<blade_mask>(i)];
    if (ca == cplx{0.0, 0.0}) continue;
    const signed char* row = &signs[i * n];
    for (std::size_t j = 0; j < n; ++j) {
      const cplx cb = b[static_cast<blade_mask>(j)];
      if (cb == cplx{0.0, 0.0}) continue;
      acc[static_cast<blade_mask>(i ^ j)] += static_cast<double>(row[j]) * ca * cb;
    }
  }
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  Multivector out(a.dimension());
  geometric_product_into(a, b, out);
  return out;
}

Multivector Multivector::grade_part(int k) const {
  Multivector out(dim_);
  for (std::size_t a = 0; a < coef_.size(); ++a)
    if (blade_grade(static_cast<blade_mask>(a)) == k) out.coef_[a] = coef_[a];
  return out;
}

Multivector Multivector::main_involution() const {
  Multivector out(dim_);
  for (std::size_t a = 0; a < coef_.size(); ++a)
    out.coef_[a] = coef_[a] * static_cast<double>(main_involution_sign(static_cast<blade_mask>(a)));
  return out;
}

Multivector Multivector::reversion() const {
  Multivector out(dim_);
  for (std::size_t a = 0; a < coef_.size(); ++a)
    out.coef_[a] = coef_[a] * static_cast<double>(reversion_sign(static_cast<blade_mask>(a)));
  return out;
}

Multivector Multivector::conjugation() const {
  Multivector out(dim_);
  for (std::size_t a = 0; a < coef_.size(); ++a)
    out.coef_[a] = coef_[a] * static_cast<double>(conjugation_sign(static_cast<blade_mask>(a)));
  return out;
}

Multivector Multivector::hermitian() const {
  Multivector out(dim_);
  for (std::size_t a = 0; a < coef_.size(); ++a)
    out.coef_[a] = std::conj(coef_[a]) * static_cast<double>(conjugation_sign(static_cast<blade_mask>(a)));
  return out;
}

double Multivector::magnitude() const {
  double s = 0;
  for (const auto& c : coef_) s += std::norm(c);
  return std::sqrt(s);
}

double Multivector::max_abs_coeff() const {
  double m = 0;
  for (const auto& c : coef_) m = std::max(m, std::abs(c));
  return m;
}

Vector make_vector(int dim, std::initializer_list<double> comps) {
  check_dim(dim);
  if (static_cast<int>(comps.size()) != dim)
    throw std::invalid_argument("component count does not match dimension");
  Vector v;
  v.dim = dim;
  int j = 0;
  for (double c : comps) v.comp[j++] = c;
  return v;
}

Multivector embed(const Vector& x) {
  Multivector m(x.dim);
  for (int j = 0; j < x.dim; ++j) m[blade_mask{1} << j] = x.comp[j];
  return m;
}

double clifford_dot(const Vector& x, const Vector& y) {
  if (x.dim != y.dim) throw std::invalid_argument("dimension mismatch");
  double s = 0;
  for (int j = 0; j < x.dim; ++j) s += x.comp[j] * y.comp[j];
  return -s;  // generators square to -1
}

Multivector wedge(const Vector& x, const Vector& y) {
  if (x.dim != y.dim) throw std::invalid_argument("dimension mismatch");
  Multivector m(x.dim);
  for (int j = 0; j < x.dim; ++j)
    for (int k = j + 1; k < x.dim; ++k) {
      blade_mask a = (blade_mask{1} << j) | (blade_mask{1} << k);
      m[a] = x.comp[j] * y.comp[k] - x.comp[k] * y.comp[j];
    }
  return m;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

// Renders one coefficient together with its joining sign. "lead" marks the
// first term, where "+" is dropped and "-" binds tightly.
void append_term(std::string& out, cplx c, blade_mask a, bool lead) {
  const bool has_blade = (a != 0);
  const double re = c.real(), im = c.imag();
  std::string body;
  bool neg = false;
  if (im == 0.0) {
    neg = std::signbit(re) && re != 0.0;
    double r = neg ? -re : re;
    if (r == 1.0 && has_blade)
      body = "";
    else
      body = format_double(r);
  } else if (re == 0.0) {
    neg = std::signbit(im);
    double r = neg ? -im : im;
    body = (r == 1.0) ? "i" : format_double(r) + "i";
  } else {
    // full complex: keep the parenthesised form, never extract a sign
    std::string ims;
    double ia = std::abs(im);
    ims = (ia == 1.0) ? "i" : format_double(ia) + "i";
    body = "(" + format_double(re) + (im < 0 ? " - " : " + ") + ims + ")";
  }
  if (lead)
    out += neg ? "-" : "";
  else
    out += neg ? " - " : " + ";
  out += body;
  if (has_blade) {
    if (!body.empty()) out += " ";
    out += blade_name(a);
  }
}

}  // namespace

std::string to_string(const Multivector& m) {
  // grade-major, then mask order, matching how blades are usually listed
  std::string out;
  bool lead = true;
  for (int k = 0; k <= m.dimension(); ++k) {
    for (blade_mask a = 0; a < static_cast<blade_mask>(m.size()); ++a) {
      if (blade_grade(a) != k) continue;
      cplx c = m[a];
      if (c == cplx{0.0, 0.0}) continue;
      append_term(out, c, a, lead);
      lead = false;
    }
  }
  if (lead) return "0";
  return out;
}

namespace {

struct Cursor {
  const char* p;
  const char* end;

  void skip_ws() {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
  }
  bool done() {
    skip_ws();
    return p >= end;
  }
  char peek() { return p < end ? *p : '\0'; }
};

[[noreturn]] void fail(const std::string& why) {
  throw std::invalid_argument("multivector parse error: " + why);
}

bool read_number(Cursor& c, double& out) {
  c.skip_ws();
  const char* q = c.p;
  auto res = std::from_chars(q, c.end, out);
  if (res.ec != std::errc{} || res.ptr == q) return false;
  c.p = res.ptr;
  return true;
}

// number, 'i', or number immediately followed by 'i'
bool read_component(Cursor& c, double& value, bool& imaginary) {
  c.skip_ws();
  if (c.peek() == 'i') {
    ++c.p;
    value = 1.0;
    imaginary = true;
    return true;
  }
  if (!read_number(c, value)) return false;
  if (c.peek() == 'i') {
    ++c.p;
    imaginary = true;
  } else {
    imaginary = false;
  }
  return true;
}

blade_mask read_blade(Cursor& c, int dim) {
  // at entry *c.p == 'e'
  ++c.p;
  blade_mask mask = 0;
  int last = 0;
  bool any = false;
  while (c.p < c.end && *c.p >= '1' && *c.p <= '8') {
    int idx = *c.p - '0';
    if (idx <= last) fail("blade indices must be strictly ascending");
    if (idx > dim) fail("blade index exceeds dimension");
    mask |= blade_mask{1} << (idx - 1);
    last = idx;
    any = true;
    ++c.p;
  }
  if (!any) fail("expected generator indices after 'e'");
  return mask;
}

cplx read_paren_complex(Cursor& c) {
  // at entry *c.p == '('
  ++c.p;
  double re = 0, im = 0;
  double v;
  bool vi;
  c.skip_ws();
  double s1 = 1.0;
  if (c.peek() == '+' || c.peek() == '-') {
    if (c.peek() == '-') s1 = -1.0;
    ++c.p;
  }
  if (!read_component(c, v, vi)) fail("expected number inside parentheses");
  (vi ? im : re) = s1 * v;
  c.skip_ws();
  if (c.peek() == '+' || c.peek() == '-') {
    double s2 = (c.peek() == '-') ? -1.0 : 1.0;
    ++c.p;
    bool vi2;
    if (!read_component(c, v, vi2)) fail("expected second component");
    if (vi2 == vi) fail("duplicate real or imaginary component");
    (vi2 ? im : re) += s2 * v;
  }
  c.skip_ws();
  if (c.peek() != ')') fail("expected ')'");
  ++c.p;
  return {re, im};
}

}  // namespace

Multivector parse_multivector(const std::string& text, int dim) {
  check_dim(dim);
  Multivector m(dim);
  Cursor c{text.data(), text.data() + text.size()};
  if (c.done()) fail("empty input");
  bool first = true;
  while (!c.done()) {
    double sign = 1.0;
    c.skip_ws();
    if (c.peek() == '+' || c.peek() == '-') {
      if (c.peek() == '-') sign = -1.0;
      ++c.p;
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    c.skip_ws();
    cplx coeff;
    bool have_coeff = false;
    if (c.peek() == '(') {
      coeff = read_paren_complex(c);
      have_coeff = true;
    } else if (c.peek() != 'e') {
      double v;
      bool vi;
      if (!read_component(c, v, vi)) fail("expected a term");
      coeff = vi ? cplx{0.0, v} : cplx{v, 0.0};
      have_coeff = true;
    }
    blade_mask mask = 0;
    c.skip_ws();
    if (c.peek() == 'e') {
      mask = read_blade(c, dim);
      if (!have_coeff) coeff = 1.0;
    } else if (!have_coeff) {
      fail("expected a term");
    }
    m[mask] += sign * coeff;
    first = false;
  }
  if (first) fail("empty input");
  return m;
}

}  // namespace cw
