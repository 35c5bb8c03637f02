#pragma once

// Independent brute-force oracles used by the test suites.  These never call
// into the code paths they check: spans are enumerated by walking every
// coefficient combination, invertibility is decided by testing bijectivity
// of the matrix action on all vectors.

#include <cstdint>
#include <set>
#include <vector>

#include "deltaring/zmod.hpp"

namespace brute {

using Vec = std::vector<int64_t>;

inline std::set<Vec> span_of(int64_t n, size_t dim, const std::vector<Vec>& gens) {
  std::set<Vec> out;
  size_t r = gens.size();
  uint64_t total = 1;
  for (size_t i = 0; i < r; ++i) total *= uint64_t(n);
  for (uint64_t idx = 0; idx < total; ++idx) {
    Vec v(dim, 0);
    uint64_t rest = idx;
    for (size_t i = 0; i < r; ++i) {
      int64_t c = int64_t(rest % uint64_t(n));
      rest /= uint64_t(n);
      for (size_t k = 0; k < dim; ++k) v[k] = (v[k] + c * gens[i][k]) % n;
    }
    out.insert(v);
  }
  if (r == 0) out.insert(Vec(dim, 0));
  return out;
}

inline Vec apply(int64_t n, const std::vector<Vec>& m, const Vec& x) {
  size_t k = m.size();
  Vec y(k, 0);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) y[i] = (y[i] + m[i][j] * x[j]) % n;
  return y;
}

// x -> Mx is a bijection on (Z_n)^k iff M has a two-sided matrix inverse.
inline bool invertible(int64_t n, const std::vector<Vec>& m) {
  size_t k = m.size();
  uint64_t total = 1;
  for (size_t i = 0; i < k; ++i) total *= uint64_t(n);
  std::set<Vec> image;
  for (uint64_t idx = 0; idx < total; ++idx) {
    Vec x(k);
    uint64_t rest = idx;
    for (size_t i = 0; i < k; ++i) {
      x[i] = int64_t(rest % uint64_t(n));
      rest /= uint64_t(n);
    }
    image.insert(apply(n, m, x));
  }
  return image.size() == total;
}

// Exhaustive two-sided inverse search over all k-by-k matrices.
inline bool has_inverse_matrix(int64_t n, const std::vector<Vec>& m) {
  size_t k = m.size();
  uint64_t total = 1;
  for (size_t i = 0; i < k * k; ++i) total *= uint64_t(n);
  for (uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Vec> cand(k, Vec(k));
    uint64_t rest = idx;
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) {
        cand[i][j] = int64_t(rest % uint64_t(n));
        rest /= uint64_t(n);
      }
    bool ok = true;
    for (size_t i = 0; i < k && ok; ++i)
      for (size_t j = 0; j < k && ok; ++j) {
        int64_t mn = 0, nm = 0;
        for (size_t t = 0; t < k; ++t) {
          mn = (mn + m[i][t] * cand[t][j]) % n;
          nm = (nm + cand[i][t] * m[t][j]) % n;
        }
        ok = mn == (i == j ? 1 : 0) && nm == (i == j ? 1 : 0);
      }
    if (ok) return true;
  }
  return false;
}

inline std::vector<Vec> all_vectors(int64_t n, size_t dim) {
  std::vector<Vec> out;
  uint64_t total = 1;
  for (size_t i = 0; i < dim; ++i) total *= uint64_t(n);
  for (uint64_t idx = 0; idx < total; ++idx) {
    Vec x(dim);
    uint64_t rest = idx;
    for (size_t i = 0; i < dim; ++i) {
      x[i] = int64_t(rest % uint64_t(n));
      rest /= uint64_t(n);
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace brute
