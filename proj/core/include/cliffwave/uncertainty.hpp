#pragma once

#include <map>
#include <string>
#include <vector>

#include "cliffwave/cwt.hpp"
#include "cliffwave/field.hpp"

namespace cw {

enum class Verdict { holds, violated, report_only };

std::string verdict_name(Verdict v);

enum class ConstantMode { paper, calibrated };

std::string constant_mode_name(ConstantMode m);

/// Flat record of one inequality evaluation. Clifford-valued brackets are
/// reduced to reals two ways, coefficient-Euclidean magnitude (used in the
/// bound) and scalar part (carried in components), so either reading of the
/// source can be audited.
struct UncertaintyReport {
  std::string theorem;
  int k = 1;
  ConstantMode mode = ConstantMode::calibrated;
  double lhs = 0;
  double rhs = 0;
  double ratio = 0;  // lhs / rhs, 0 when rhs = 0
  Verdict verdict = Verdict::report_only;
  std::map<std::string, double> components;
  std::vector<std::string> notes;
};

/// Wavelet-dependent context shared by the wavelet-side evaluators.
struct WaveletContext {
  const MotherWavelet* psi = nullptr;
  CwtRequest request;
  double a_closed_form = 0;   // admissibility integral value
  double c_calibrated = 0;    // operative isometry constant
  ConstantMode mode = ConstantMode::calibrated;

  double constant() const {
    return mode == ConstantMode::paper ? a_closed_form : c_calibrated;
  }
};

/// |x_k f| |d_k f| >= (1/2) |<[A_k, B_k] f, f>| with A_k = x_k, B_k = d_k;
/// the commutator is evaluated literally, not replaced by its closed form.
UncertaintyReport commutator_bound(const MVField& f, int k);

/// |x_k f| |xi_k f_hat| >= (1/2) |f|^2.
UncertaintyReport heisenberg_fourier(const MVField& f, int k);

/// Wavelet-side Heisenberg bound:
/// lhs = sqrt(sum w v |b_k T|^2) * |xi_k f_hat|. rhs carries the closed-form
/// constant (2 pi)^{n/2}/2 sqrt(A) |f|^2 in paper mode and the operative
/// (1/2) sqrt(C) |f|^2 in calibrated mode; both appear in components.
UncertaintyReport wavelet_heisenberg(const MVField& f, int k, const WaveletContext& ctx);

/// Sharpened variant with the correction pair (f1, f2); report-only, both
/// sides computed and cross-validated, the inequality itself not asserted.
UncertaintyReport wavelet_heisenberg_sharp(const MVField& f, int k, const WaveletContext& ctx);

/// First proof step probe: lhs as in heisenberg_fourier,
/// rhs = sqrt(2) (|f|^2 + |2 <x_k d_k f, f>|). Report-only diagnostic.
UncertaintyReport base_inequality_probe(const MVField& f, int k);

/// Intermediate energy identities of the sharp bound's proof:
/// sum w v |xi_k F_b[T]|^2 against the xi-weighted input energy and
/// sum w v |T|^2 against |f|^2. Calibrated mode compares both against the
/// operative constant C (ratios near 1); paper mode applies the literal
/// closed-form shapes A/(2 pi)^n and A, whose offsets are reported.
UncertaintyReport energy_identities(const MVField& f, int k, const WaveletContext& ctx);

struct CorrectionPair {
  MVField f1;  // reconstruction of d/db_k of the coefficients
  MVField f2;  // reconstruction of b_k times the coefficients
  cplx bracket_field_scalar;     // scalar part of <f1, f2>
  double bracket_field_mag = 0;  // magnitude of <f1, f2>
  double bracket_atlas_mag = 0;  // same bracket through the transform pairing
};

/// f1 = inverse(d/db_k atlas), f2 = inverse(b_k atlas), plus the bracket
/// <f1, f2> computed on the field side and through the transform-space
/// pairing (isometry cross-check). Streams slices; no atlas materialized.
CorrectionPair correction_pair(const MVField& f, int k, const WaveletContext& ctx);

}  // namespace cw
