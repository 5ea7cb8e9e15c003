#pragma once

#include <cstdint>
#include <vector>

#include "cliffwave/multivector.hpp"

namespace testutil {

// Deterministic 64-bit mixer so expected values never depend on the
// platform's library RNG.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline cw::Multivector random_multivector(Rng& rng, int dim) {
  cw::Multivector m(dim);
  for (cw::blade_mask a = 0; a < (cw::blade_mask{1} << dim); ++a)
    m[a] = cw::cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
  return m;
}

inline double mv_distance(const cw::Multivector& a, const cw::Multivector& b) {
  return (a - b).magnitude();
}

// Reference blade product: concatenate the generator lists, bubble sort with
// a sign flip per transposition, then cancel adjacent equal generators with a
// factor -1 each. Slow but obviously faithful to the defining relations.
inline std::pair<int, cw::blade_mask> oracle_blade_product(cw::blade_mask a, cw::blade_mask b) {
  std::vector<int> idx;
  for (int j = 0; j < 8; ++j)
    if ((a >> j) & 1u) idx.push_back(j);
  for (int j = 0; j < 8; ++j)
    if ((b >> j) & 1u) idx.push_back(j);
  int sign = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i)
      if (idx[i] > idx[i + 1]) {
        std::swap(idx[i], idx[i + 1]);
        sign = -sign;
        moved = true;
      }
  }
  std::vector<int> kept;
  for (std::size_t i = 0; i < idx.size();) {
    if (i + 1 < idx.size() && idx[i] == idx[i + 1]) {
      sign = -sign;  // e_j e_j = -1
      i += 2;
    } else {
      kept.push_back(idx[i]);
      ++i;
    }
  }
  cw::blade_mask mask = 0;
  for (int j : kept) mask |= cw::blade_mask{1} << j;
  return {sign, mask};
}

}  // namespace testutil
