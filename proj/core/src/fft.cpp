#include "cliffwave/fft.hpp"

#include <bit>
#include <map>
#include <numbers>
#include <stdexcept>

namespace cw {

namespace {

using std::complex;
using std::size_t;
using cpx = complex<double>;

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// half-size table of exp(-2 pi i k / n), shared by both directions
const std::vector<cpx>& twiddles(size_t n) {
  static std::map<size_t, std::vector<cpx>> cache;
  auto& t = cache[n];
  if (t.empty() && n >= 2) {
    t.resize(n / 2);
    for (size_t k = 0; k < n / 2; ++k) {
      double ph = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      t[k] = {std::cos(ph), std::sin(ph)};
    }
  }
  return t;
}

void fft_pow2(cpx* a, size_t n, int sign) {
  if (n < 2) return;
  const int bits = std::countr_zero(n);
  // bit reversal
  for (size_t i = 0; i < n; ++i) {
    size_t j = 0, x = i;
    for (int b = 0; b < bits; ++b) {
      j = (j << 1) | (x & 1);
      x >>= 1;
    }
    if (j > i) std::swap(a[i], a[j]);
  }
  const auto& tw = twiddles(n);
  for (size_t len = 2; len <= n; len <<= 1) {
    const size_t step = n / len;
    for (size_t base = 0; base < n; base += len) {
      for (size_t k = 0; k < len / 2; ++k) {
        cpx w = tw[k * step];
        if (sign > 0) w = std::conj(w);
        cpx u = a[base + k];
        cpx v = a[base + k + len / 2] * w;
        a[base + k] = u + v;
        a[base + k + len / 2] = u - v;
      }
    }
  }
}

struct BluesteinPlan {
  size_t n = 0, m = 0;
  std::vector<cpx> chirp;        // c_k = exp(sign i pi k^2 / n)
  std::vector<cpx> kernel_fft;   // FFT of the periodized conjugate chirp
};

const BluesteinPlan& bluestein_plan(size_t n, int sign) {
  static std::map<std::pair<size_t, int>, BluesteinPlan> cache;
  auto& plan = cache[{n, sign}];
  if (plan.n == 0) {
    plan.n = n;
    size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    plan.m = m;
    plan.chirp.resize(n);
    for (size_t k = 0; k < n; ++k) {
      // reduce k^2 mod 2n first so the phase stays accurate for large k
      size_t k2 = (k * k) % (2 * n);
      double ph = static_cast<double>(sign) * std::numbers::pi * static_cast<double>(k2) /
                  static_cast<double>(n);
      plan.chirp[k] = {std::cos(ph), std::sin(ph)};
    }
    std::vector<cpx> h(m, cpx{0.0, 0.0});
    h[0] = std::conj(plan.chirp[0]);
    for (size_t k = 1; k < n; ++k) {
      h[k] = std::conj(plan.chirp[k]);
      h[m - k] = std::conj(plan.chirp[k]);
    }
    fft_pow2(h.data(), m, -1);
    plan.kernel_fft = std::move(h);
  }
  return plan;
}

void fft_bluestein(cpx* a, size_t n, int sign) {
  const auto& plan = bluestein_plan(n, sign);
  std::vector<cpx> y(plan.m, cpx{0.0, 0.0});
  for (size_t j = 0; j < n; ++j) y[j] = a[j] * plan.chirp[j];
  fft_pow2(y.data(), plan.m, -1);
  for (size_t j = 0; j < plan.m; ++j) y[j] *= plan.kernel_fft[j];
  fft_pow2(y.data(), plan.m, +1);
  const double inv_m = 1.0 / static_cast<double>(plan.m);
  for (size_t k = 0; k < n; ++k) a[k] = plan.chirp[k] * y[k] * inv_m;
}

}  // namespace

void fft(cpx* data, size_t n, int sign) {
  if (n == 0) throw std::invalid_argument("fft of empty array");
  if (sign != 1 && sign != -1) throw std::invalid_argument("fft sign must be +1 or -1");
  if (is_pow2(n))
    fft_pow2(data, n, sign);
  else
    fft_bluestein(data, n, sign);
}

void fft_cube(cpx* data, int dim, int points, int sign) {
  if (dim < 1) throw std::invalid_argument("fft_cube dimension must be positive");
  const size_t np = static_cast<size_t>(points);
  size_t total = 1;
  for (int t = 0; t < dim; ++t) total *= np;
  std::vector<cpx> line(np);
  size_t stride = total / np;  // axis 0 first (slowest), halving toward 1
  for (int axis = 0; axis < dim; ++axis) {
    const size_t block = stride * np;
    for (size_t base = 0; base < total; base += block) {
      for (size_t inner = 0; inner < stride; ++inner) {
        cpx* p = data + base + inner;
        if (stride == 1) {
          fft(p, np, sign);
        } else {
          for (size_t l = 0; l < np; ++l) line[l] = p[l * stride];
          fft(line.data(), np, sign);
          for (size_t l = 0; l < np; ++l) p[l * stride] = line[l];
        }
      }
    }
    stride /= np;
  }
}

}  // namespace cw
