#include "cliffwave/cwt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cliffwave/cft.hpp"

namespace cw {

namespace {
constexpr double kPi = std::numbers::pi_v<double>;
}

ScaleQuadrature log_scale_quadrature(double a_min, double a_max, int count, int dim) {
  if (!(a_min > 0) || !(a_max > a_min)) throw std::invalid_argument("bad scale range");
  if (count < 1) throw std::invalid_argument("need at least one scale node");
  ScaleQuadrature q;
  q.a_min = a_min;
  q.a_max = a_max;
  q.count = count;
  const double d = std::log(a_max / a_min) / count;
  q.nodes.resize(count);
  q.weights.resize(count);
  for (int i = 0; i < count; ++i) {
    const double a = a_min * std::exp((i + 0.5) * d);
    q.nodes[i] = a;
    q.weights[i] = d * std::pow(a, -dim);  // da / a^{n+1} in log coordinates
  }
  return q;
}

DaughterEvaluator::DaughterEvaluator(const MotherWavelet& psi, double a, const Vector& b,
                                     const Multivector& rotor)
    : psi_(&psi), a_(a), b_(b), rotor_(rotor), rotor_conj_(rotor.conjugation()) {
  if (!(a > 0)) throw std::invalid_argument("scale must be positive");
  if (rotor_residual(rotor) > 1e-10) throw std::invalid_argument("invalid rotor");
  rot_ = rotation_matrix(rotor);
  amp_ = std::pow(a, -0.5 * psi.dim);
  Multivector id = Multivector::scalar(rotor.dimension(), 1.0);
  trivial_rotor_ = (rotor - id).magnitude() < 1e-15;
}

void DaughterEvaluator::value_into(const Vector& x, Multivector& out) const {
  Vector y;
  y.dim = x.dim;
  for (int j = 0; j < x.dim; ++j) y.comp[j] = x.comp[j] - b_.comp[j];
  Vector u;
  rot_.apply_inverse(y, u);  // conj(s) (x - b) s
  for (int j = 0; j < u.dim; ++j) u.comp[j] /= a_;
  Multivector v = psi_->space(u);
  if (trivial_rotor_) {
    v *= amp_;
    out = std::move(v);
    return;
  }
  Multivector t(v.dimension());
  geometric_product_into(rotor_, v, t);
  geometric_product_into(t, rotor_conj_, out);
  out *= amp_;
}

Multivector DaughterEvaluator::operator()(const Vector& x) const {
  Multivector out(psi_->dim);
  value_into(x, out);
  return out;
}

MVField daughter_field(const MotherWavelet& psi, const GridSpec& grid, double a, const Vector& b,
                       const Multivector& rotor) {
  DaughterEvaluator d(psi, a, b, rotor);
  return MVField::sample(grid, [&d](const Vector& x) { return d(x); });
}

Multivector transform_direct(const MVField& f, const MotherWavelet& psi, double a, const Vector& b,
                             const Multivector& rotor) {
  return inner_product(daughter_field(psi, f.grid(), a, b, rotor), f);
}

namespace {

// daughter spectrum a^{n/2} s psi_hat(a conj(s) xi s) conj(s) sampled on the
// spectral grid
void daughter_spectrum_into(const MotherWavelet& psi, double a, const Multivector& rotor,
                            const RotationMatrix& rot, bool trivial_rotor, MVField& out) {
  const GridSpec& sg = out.grid();
  const double amp = std::pow(a, 0.5 * psi.dim);
  const Multivector rc = rotor.conjugation();
  Multivector t(psi.dim), v2(psi.dim);
  for (std::size_t i = 0; i < sg.cell_count(); ++i) {
    Vector xi = sg.point(i);
    Vector y;
    rot.apply_inverse(xi, y);
    for (int j = 0; j < y.dim; ++j) y.comp[j] *= a;
    Multivector v = psi.spectrum(y);
    if (!trivial_rotor) {
      geometric_product_into(rotor, v, t);
      geometric_product_into(t, rc, v2);
      v2 *= amp;
      out.set_value(i, v2);
    } else {
      v *= amp;
      out.set_value(i, v);
    }
  }
}

// pointwise hermitian(g) * F, the b-spectrum map of one slice
void slice_b_spectrum(const MVField& gspec, const MVField& fhat, double scale_2pi_pow,
                      MVField& out) {
  const std::size_t n = gspec.points();
  const int dim = gspec.grid().dim;
  Multivector g(dim), fv(dim), h(dim), prod(dim);
  for (std::size_t i = 0; i < n; ++i) {
    gspec.value_into(i, g);
    fhat.value_into(i, fv);
    h = g.hermitian();
    geometric_product_into(h, fv, prod);
    prod *= scale_2pi_pow;
    out.set_value(i, prod);
  }
}

void check_spin_set(const std::vector<SpinSample>& spins) {
  if (spins.empty()) throw std::invalid_argument("need at least one spin sample");
  for (const auto& s : spins)
    if (rotor_residual(s.rotor) > 1e-10) throw std::invalid_argument("invalid rotor in spin set");
}

}  // namespace

void for_each_spectral_slice(const MVField& f, const MotherWavelet& psi, const CwtRequest& request,
                             const std::function<void(const SpectralSlice&)>& fn) {
  if (psi.dim != f.grid().dim) throw std::invalid_argument("wavelet dimension mismatch");
  if (request.scales.nodes.empty()) throw std::invalid_argument("empty scale quadrature");
  check_spin_set(request.spins);

  const MVField fhat = cft_forward(f);
  const GridSpec sg = fhat.grid();
  const double two_pi_half = std::pow(2.0 * kPi, 0.5 * f.grid().dim);

  MVField gspec(sg), bspec(sg);
  Multivector id = Multivector::scalar(f.grid().dim, 1.0);
  for (std::size_t i = 0; i < request.scales.nodes.size(); ++i) {
    const double a = request.scales.nodes[i];
    for (std::size_t j = 0; j < request.spins.size(); ++j) {
      const auto& spin = request.spins[j];
      const bool trivial = (spin.rotor - id).magnitude() < 1e-15;
      const RotationMatrix rot = rotation_matrix(spin.rotor);
      daughter_spectrum_into(psi, a, spin.rotor, rot, trivial, gspec);
      slice_b_spectrum(gspec, fhat, two_pi_half, bspec);
      SpectralSlice s;
      s.scale_index = static_cast<int>(i);
      s.spin_index = static_cast<int>(j);
      s.scale = a;
      s.scale_weight = request.scales.weights[i];
      s.rotor = &spin.rotor;
      s.spin_weight = spin.weight;
      s.b_spectrum = &bspec;
      s.daughter_spectrum = &gspec;
      fn(s);
    }
  }
}

void for_each_slice(const MVField& f, const MotherWavelet& psi, const CwtRequest& request,
                    const std::function<void(const CwtSlice&)>& fn) {
  for_each_spectral_slice(f, psi, request, [&](const SpectralSlice& s) {
    CwtSlice slice;
    slice.scale_index = s.scale_index;
    slice.spin_index = s.spin_index;
    slice.scale = s.scale;
    slice.scale_weight = s.scale_weight;
    slice.rotor = *s.rotor;
    slice.spin_weight = s.spin_weight;
    slice.coefficients = cft_inverse(*s.b_spectrum);
    fn(slice);
  });
}

CwtAtlas transform_grid(const MVField& f, const MotherWavelet& psi, const CwtRequest& request) {
  CwtAtlas atlas;
  atlas.grid = f.grid();
  atlas.wavelet = psi.name;
  atlas.scales = request.scales;
  atlas.spins = request.spins;
  atlas.slices.reserve(request.scales.nodes.size() * request.spins.size());
  for_each_slice(f, psi, request,
                 [&](const CwtSlice& s) { atlas.slices.push_back(s); });
  return atlas;
}

namespace {

void require_matching_quadrature(const CwtAtlas& a, const CwtAtlas& b) {
  if (!(a.grid == b.grid) || a.scales.nodes != b.scales.nodes ||
      a.spins.size() != b.spins.size())
    throw std::invalid_argument("atlas quadrature mismatch");
  for (std::size_t j = 0; j < a.spins.size(); ++j)
    if (a.spins[j].weight != b.spins[j].weight ||
        (a.spins[j].rotor - b.spins[j].rotor).magnitude() > 1e-14)
      throw std::invalid_argument("atlas spin set mismatch");
}

}  // namespace

MVField inverse_transform(const CwtAtlas& atlas, const MotherWavelet& psi, double constant) {
  if (!(constant > 0)) throw std::invalid_argument("reconstruction constant must be positive");
  if (psi.dim != atlas.grid.dim) throw std::invalid_argument("wavelet dimension mismatch");
  const GridSpec sg = spectral_grid(atlas.grid);
  const int dim = atlas.grid.dim;
  const double two_pi_half = std::pow(2.0 * kPi, 0.5 * dim);
  MVField acc(sg), gspec(sg);
  Multivector id = Multivector::scalar(dim, 1.0);
  for (const auto& slice : atlas.slices) {
    const bool trivial = (slice.rotor - id).magnitude() < 1e-15;
    const RotationMatrix rot = rotation_matrix(slice.rotor);
    daughter_spectrum_into(psi, slice.scale, slice.rotor, rot, trivial, gspec);
    // sum_b h^n psi^{a,b,s}(x) T(b) has b-spectrum (2 pi)^{n/2} g_hat F_b[T]
    const MVField fb = cft_forward(slice.coefficients);
    accumulate_pointwise_product(acc, gspec, fb,
                       two_pi_half * slice.scale_weight * slice.spin_weight / constant);
  }
  return cft_inverse(acc);
}

Multivector h_inner_product(const CwtAtlas& f_atlas, const CwtAtlas& g_atlas, double constant) {
  if (!(constant > 0)) throw std::invalid_argument("pairing constant must be positive");
  require_matching_quadrature(f_atlas, g_atlas);
  Multivector acc(f_atlas.grid.dim);
  for (std::size_t idx = 0; idx < f_atlas.slices.size(); ++idx) {
    const auto& sf = f_atlas.slices[idx];
    const auto& sg = g_atlas.slices[idx];
    Multivector pair = inner_product(sf.coefficients, sg.coefficients);
    acc += pair * cplx{sf.scale_weight * sf.spin_weight / constant, 0.0};
  }
  return acc;
}

CwtAtlas coefficient_derivative(const CwtAtlas& atlas, int k) {
  CwtAtlas out = atlas;
  for (auto& slice : out.slices) slice.coefficients = partial_derivative(slice.coefficients, k);
  return out;
}

CwtAtlas coefficient_coordinate(const CwtAtlas& atlas, int k) {
  CwtAtlas out = atlas;
  for (auto& slice : out.slices) slice.coefficients = coordinate_multiply(slice.coefficients, k);
  return out;
}

double calibrate_frame_constant(const MotherWavelet& psi, const GridSpec& grid,
                                const CwtRequest& request, std::span<const BandSpec> probes) {
  if (probes.empty()) throw std::invalid_argument("need probe functions to calibrate");
  std::vector<double> estimates;
  estimates.reserve(probes.size());
  for (const auto& spec : probes) {
    const MVField f = band_limited_field(grid, spec);
    const double denom = l2_norm_sq(f);
    if (denom <= 0) throw std::invalid_argument("degenerate probe function");
    double energy = 0;
    for_each_spectral_slice(f, psi, request, [&](const SpectralSlice& s) {
      // Plancherel: |T|^2 over b equals |F_b[T]|^2 over xi
      energy += s.scale_weight * s.spin_weight * l2_norm_sq(*s.b_spectrum);
    });
    estimates.push_back(energy / denom);
  }
  std::sort(estimates.begin(), estimates.end());
  const std::size_t n = estimates.size();
  return (n % 2 == 1) ? estimates[n / 2] : 0.5 * (estimates[n / 2 - 1] + estimates[n / 2]);
}

double calibrate_frame_constant_default(const MotherWavelet& psi, const GridSpec& grid) {
  CwtRequest req;
  req.scales = log_scale_quadrature(1.0 / 16.0, 16.0, 32, grid.dim);
  req.spins = haar_samples(grid.dim, 8);
  std::vector<BandSpec> probes;
  for (std::uint64_t s = 101; s <= 105; ++s) probes.push_back(annulus_probe(s));
  return calibrate_frame_constant(psi, grid, req, probes);
}

RoundTripResult cwt_round_trip(const MVField& f, const MotherWavelet& psi,
                               const CwtRequest& request, double constant) {
  if (!(constant > 0)) throw std::invalid_argument("constant must be positive");
  RoundTripResult res;
  res.constant_used = constant;
  const GridSpec sg = spectral_grid(f.grid());
  const double two_pi_half = std::pow(2.0 * kPi, 0.5 * f.grid().dim);
  MVField acc(sg);
  double energy = 0;
  for_each_spectral_slice(f, psi, request, [&](const SpectralSlice& s) {
    energy += s.scale_weight * s.spin_weight * l2_norm_sq(*s.b_spectrum);
    accumulate_pointwise_product(acc, *s.daughter_spectrum, *s.b_spectrum,
                       two_pi_half * s.scale_weight * s.spin_weight / constant);
  });
  const double f2 = l2_norm_sq(f);
  res.isometry_ratio = (f2 > 0) ? energy / (constant * f2) : 1.0;
  MVField rec = cft_inverse(acc);
  rec -= f;
  res.reconstruction_rel_error = (f2 > 0) ? l2_norm(rec) / std::sqrt(f2) : 0.0;
  return res;
}

}  // namespace cw
