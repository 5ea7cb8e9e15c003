#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cliffwave/field.hpp"

namespace cw {

/// Analyzing wavelet given by closed-form evaluators in both domains, so
/// daughters can be sampled exactly at any scale and offset.
struct MotherWavelet {
  std::string name;
  int dim = 2;
  std::function<Multivector(const Vector&)> space;     // psi(x)
  std::function<Multivector(const Vector&)> spectrum;  // psi_hat(xi)

  // closed-form reference values when known (quiet NaN otherwise)
  double norm_l2_analytic = 0;
  double admissibility_analytic = 0;
};

/// Vector-valued Gaussian derivative psi(x) = x exp(-|x|^2 / 2);
/// psi_hat(xi) = -i xi exp(-|xi|^2 / 2). Rotation-equivariant, so its
/// daughters do not depend on the spin parameter.
MotherWavelet mexican_hat(int dim);

/// Single-axis Gaussian derivative along e1:
/// psi(x) = -x_1 exp(-|x|^2 / 2) e1, psi_hat(xi) = i xi_1 exp(-|xi|^2/2) e1.
/// Anisotropic spectrum; exercises genuine spin dependence.
MotherWavelet gauss_d1(int dim);

/// Admissibility-violating control: the plain scalar Gaussian, whose
/// spectrum does not vanish at 0.
MotherWavelet plain_gaussian(int dim);

const std::vector<std::string>& wavelet_names();
MotherWavelet wavelet_by_name(const std::string& name, int dim);

struct AdmissibilityResult {
  bool scalar_ok = false;          // psi_hat psi_hat^dagger scalar on the grid
  double scalarness_residual = 0;  // max non-scalar magnitude / max scalar
  bool finite = false;             // cell integral converges at xi -> 0
  double a_quadrature = 0;         // (2 pi)^n sum of scalar(psi_hat psi_hat^dagger)/|xi|^n
  double zero_bin_value = 0;       // effective integrand value for the xi = 0 node
  double zero_bin_spread = 0;      // direction dependence of that value
  double l2_norm = 0;              // Plancherel estimate of |psi|
};

/// Scalarness and admissibility integral on the spectral grid of `grid`.
/// The xi = 0 node gets a numerically probed effective value (directional
/// average; a power-law cell average when the integrand is unbounded but
/// integrable); a divergent cell integral toward 0 clears `finite`.
AdmissibilityResult check_admissibility(const MotherWavelet& psi, const GridSpec& grid,
                                        double scalar_tol = 1e-10);

}  // namespace cw
