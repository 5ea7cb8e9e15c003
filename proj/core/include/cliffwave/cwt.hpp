#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cliffwave/field.hpp"
#include "cliffwave/spin.hpp"
#include "cliffwave/testfield.hpp"
#include "cliffwave/wavelet.hpp"

namespace cw {

/// Midpoint rule in log scale for the measure da / a^{n+1}: nodes
/// a_i = exp(ln a_min + (i + 1/2) d), d = ln(a_max/a_min)/count, weights
/// w_i = d * a_i^{-n}.
struct ScaleQuadrature {
  double a_min = 0.125;
  double a_max = 8.0;
  int count = 24;
  std::vector<double> nodes;
  std::vector<double> weights;
};

ScaleQuadrature log_scale_quadrature(double a_min, double a_max, int count, int dim);

/// Scale and spin sample set of one transform run.
struct CwtRequest {
  ScaleQuadrature scales;
  std::vector<SpinSample> spins;
};

/// Daughter wavelet a^{-n/2} s psi(conj(s)(x - b)s / a) conj(s), evaluated
/// from the mother's closed form. Caches the rotation matrix; value_into
/// performs no allocation.
class DaughterEvaluator {
public:
  DaughterEvaluator(const MotherWavelet& psi, double a, const Vector& b, const Multivector& rotor);

  void value_into(const Vector& x, Multivector& out) const;
  Multivector operator()(const Vector& x) const;

private:
  const MotherWavelet* psi_;
  double a_;
  Vector b_;
  Multivector rotor_, rotor_conj_;
  RotationMatrix rot_;
  double amp_;  // a^{-n/2}
  bool trivial_rotor_;
};

MVField daughter_field(const MotherWavelet& psi, const GridSpec& grid, double a, const Vector& b,
                       const Multivector& rotor);

/// Transform coefficient by direct quadrature,
/// inner_product(daughter, f). The oracle the fast path is tested against.
Multivector transform_direct(const MVField& f, const MotherWavelet& psi, double a, const Vector& b,
                             const Multivector& rotor);

/// Coefficients of one (scale, spin) pair over the whole b grid.
struct CwtSlice {
  int scale_index = 0;
  int spin_index = 0;
  double scale = 1;
  double scale_weight = 0;
  Multivector rotor;
  double spin_weight = 0;
  MVField coefficients;  // T(a, ., s) on the analyzed field's grid
};

/// Materialized transform: every (scale, spin) slice.
struct CwtAtlas {
  GridSpec grid;
  std::string wavelet;
  ScaleQuadrature scales;
  std::vector<SpinSample> spins;
  std::vector<CwtSlice> slices;  // scale-major order

  const CwtSlice& slice(int i, int j) const {
    return slices[static_cast<std::size_t>(i) * spins.size() + j];
  }
  CwtSlice& slice(int i, int j) {
    return slices[static_cast<std::size_t>(i) * spins.size() + j];
  }
};

/// Fast transform over the full b grid: per (a, s), the correlation is one
/// spectral multiply, F_b[T](xi) = (2 pi)^{n/2} a^{n/2}
/// [s psi_hat(a conj(s) xi s) conj(s)]^dagger f_hat(xi).
CwtAtlas transform_grid(const MVField& f, const MotherWavelet& psi, const CwtRequest& request);

/// Streaming variant: hands each slice to fn in scale-major order without
/// keeping more than one alive. The atlas of a desk-size run at N = 128 is
/// hundreds of megabytes, so every aggregate in the harness streams.
void for_each_slice(const MVField& f, const MotherWavelet& psi, const CwtRequest& request,
                    const std::function<void(const CwtSlice&)>& fn);

/// Spectral-side streaming: per (scale, spin), the b-spectrum F_b[T] and the
/// daughter spectrum, both on the spectral grid, valid only inside fn. Lets
/// aggregates that live in frequency space (energies, reconstructions,
/// derivative atlases) skip the per-slice inverse transform entirely.
struct SpectralSlice {
  int scale_index = 0;
  int spin_index = 0;
  double scale = 1;
  double scale_weight = 0;
  const Multivector* rotor = nullptr;
  double spin_weight = 0;
  const MVField* b_spectrum = nullptr;         // F_b[T](a, xi, s)
  const MVField* daughter_spectrum = nullptr;  // a^{n/2} s psi_hat(a conj(s) xi s) conj(s)
};

void for_each_spectral_slice(const MVField& f, const MotherWavelet& psi, const CwtRequest& request,
                             const std::function<void(const SpectralSlice&)>& fn);

/// Reconstruction (1/constant) sum w_i v_j h^n psi^{a,b,s}(x) T(a,b,s),
/// evaluated through the correlation theorem on the periodic grid.
MVField inverse_transform(const CwtAtlas& atlas, const MotherWavelet& psi, double constant);

/// Pairing on transform space with measure da/a^{n+1} dV(b) ds:
/// (1/constant) sum w_i v_j h^n hermitian(T_f) T_g.
Multivector h_inner_product(const CwtAtlas& f_atlas, const CwtAtlas& g_atlas, double constant);

/// d/db_k per slice via the spectral multiplier (atlas coefficients are
/// periodic-smooth in b).
CwtAtlas coefficient_derivative(const CwtAtlas& atlas, int k);

/// b_k multiplication per slice.
CwtAtlas coefficient_coordinate(const CwtAtlas& atlas, int k);

/// Isometry constant observed on probe fields: median over probes of
/// sum w_i v_j |T|^2 / |f|^2. The operative constant of this quadrature;
/// for a radial-spectrum wavelet in n = 2 it sits near the closed-form
/// admissibility value divided by 2 pi.
double calibrate_frame_constant(const MotherWavelet& psi, const GridSpec& grid,
                                const CwtRequest& request, std::span<const BandSpec> probes);

/// Default calibration setup: scales [1/16, 16] with 32 nodes, 8 spins,
/// 5 seeded band-limited probes on the given grid.
double calibrate_frame_constant_default(const MotherWavelet& psi, const GridSpec& grid);

struct RoundTripResult {
  double constant_used = 0;
  double isometry_ratio = 0;           // sum w v |T|^2 / (constant |f|^2)
  double reconstruction_rel_error = 0; // |f_rec - f| / |f|
};

/// Isometry and reconstruction quality in one streamed pass.
RoundTripResult cwt_round_trip(const MVField& f, const MotherWavelet& psi,
                               const CwtRequest& request, double constant);

}  // namespace cw
