#include "deltaring/zmod.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

namespace deltaring {

namespace {

constexpr int64_t kMaxModulus = int64_t(1) << 31;

struct Egcd {
  int64_t g, x, y;  // g = a*x + b*y
};

Egcd egcd(int64_t a, int64_t b) {
  if (b == 0) return {a, 1, 0};
  Egcd e = egcd(b, a % b);
  return {e.g, e.y, e.x - (a / b) * e.y};
}

int64_t mod_inv(int64_t a, int64_t m) {
  Egcd e = egcd(((a % m) + m) % m, m);
  return ((e.x % m) + m) % m;
}

// A unit u with u*a = gcd(a, n) (mod n); a in [1, n).
int64_t stabilizing_unit(int64_t a, int64_t n) {
  int64_t g = std::gcd(a, n);
  int64_t ap = a / g, np = n / g;
  int64_t u0 = np == 1 ? 0 : mod_inv(ap % np, np);
  for (int64_t t = 0; t <= g; ++t) {
    int64_t u = (u0 + t * np) % n;
    if (std::gcd(u, n) == 1) return u;
  }
  throw ring_error(errc::internal, "no stabilizing unit found");
}

void row_addmul(std::vector<int64_t>& dst, const std::vector<int64_t>& src, int64_t k, int64_t n) {
  for (size_t i = 0; i < dst.size(); ++i) dst[i] = ((dst[i] + k * src[i]) % n + n) % n;
}

void row_scale(std::vector<int64_t>& r, int64_t k, int64_t n) {
  for (auto& x : r) x = ((x * k) % n + n) % n;
}

// Row echelon over Z_n via extended-gcd pivoting.  Pivots are restricted to
// columns < pivot_limit; each pivot is normalized to gcd(old pivot, n) and
// entries above it are reduced into [0, pivot).  Returns pivot columns.
std::vector<size_t> echelonize(std::vector<std::vector<int64_t>>& w, size_t pivot_limit,
                               int64_t n) {
  size_t r = 0;
  std::vector<size_t> pivots;
  for (size_t c = 0; c < pivot_limit && r < w.size(); ++c) {
    for (size_t i = r + 1; i < w.size(); ++i) {
      if (w[i][c] == 0) continue;
      if (w[r][c] == 0) {
        std::swap(w[r], w[i]);
        continue;
      }
      int64_t a = w[r][c], b = w[i][c];
      Egcd e = egcd(a, b);
      // [x y; b/g -a/g] has determinant -1, so the span is preserved.
      std::vector<int64_t> top = w[r];
      row_scale(top, e.x, n);
      row_addmul(top, w[i], e.y, n);
      std::vector<int64_t> bot = w[r];
      row_scale(bot, b / e.g, n);
      std::vector<int64_t> bot2 = w[i];
      row_scale(bot2, a / e.g, n);
      for (size_t k = 0; k < bot.size(); ++k) bot[k] = ((bot[k] - bot2[k]) % n + n) % n;
      w[r] = std::move(top);
      w[i] = std::move(bot);
    }
    if (w[r][c] == 0) continue;
    int64_t u = stabilizing_unit(w[r][c], n);
    row_scale(w[r], u, n);
    int64_t piv = w[r][c];
    for (size_t i = 0; i < r; ++i) {
      int64_t q = w[i][c] / piv;
      if (q) row_addmul(w[i], w[r], -q, n);
    }
    pivots.push_back(c);
    ++r;
  }
  w.resize(r);
  return pivots;
}

}  // namespace

Modulus::Modulus(int64_t value) : n(value) {
  if (value < 2) throw ring_error(errc::bad_presentation, "modulus must be at least 2");
  if (value > kMaxModulus) throw ring_error(errc::bad_presentation, "modulus exceeds machine range");
}

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

CoeffVector::CoeffVector(Modulus m, std::vector<int64_t> entries) : mod(m), v(std::move(entries)) {
  for (auto& x : v) x = mod_reduce(x, mod);
}

CanonicalBasis::CanonicalBasis(Modulus m, size_t ambient_dim) : mod_(m), dim_(ambient_dim) {}

CanonicalBasis CanonicalBasis::identity(Modulus m, size_t dim) {
  std::vector<std::vector<int64_t>> rows(dim, std::vector<int64_t>(dim, 0));
  for (size_t i = 0; i < dim; ++i) rows[i][i] = 1;
  return howell_form(m, dim, std::move(rows));
}

unsigned __int128 CanonicalBasis::span_size() const {
  unsigned __int128 s = 1;
  for (int64_t d : pivot_vals_) s *= uint64_t(mod_.n / d);
  return s;
}

bool CanonicalBasis::is_identity() const {
  if (rows_.size() != dim_) return false;
  for (size_t i = 0; i < dim_; ++i)
    if (pivot_cols_[i] != i || pivot_vals_[i] != 1) return false;
  return true;
}

std::vector<int64_t> CanonicalBasis::reduce(std::vector<int64_t> v) const {
  if (v.size() != dim_) throw ring_error(errc::dimension_mismatch, "vector length vs basis");
  for (size_t j = 0; j < rows_.size(); ++j) {
    int64_t q = v[pivot_cols_[j]] / pivot_vals_[j];
    if (q) row_addmul(v, rows_[j], -q, mod_.n);
  }
  return v;
}

bool CanonicalBasis::contains(const std::vector<int64_t>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](int64_t x) { return x == 0; });
}

std::vector<int64_t> CanonicalBasis::coset_radices() const {
  std::vector<int64_t> rad(dim_, mod_.n);
  for (size_t j = 0; j < rows_.size(); ++j) rad[pivot_cols_[j]] = pivot_vals_[j];
  return rad;
}

std::string CanonicalBasis::key() const {
  std::string k;
  k.reserve(rows_.size() * dim_ * sizeof(int64_t));
  for (const auto& r : rows_)
    for (int64_t x : r) k.append(reinterpret_cast<const char*>(&x), sizeof(x));
  return k;
}

CanonicalBasis howell_form(Modulus m, size_t dim, std::vector<std::vector<int64_t>> rows) {
  for (auto& r : rows) {
    if (r.size() != dim) throw ring_error(errc::dimension_mismatch, "mixed row lengths");
    for (auto& x : r) x = mod_reduce(x, m);
  }
  std::vector<size_t> pivots;
  for (int round = 0;; ++round) {
    if (round > 64) throw ring_error(errc::internal, "howell form did not stabilize");
    pivots = echelonize(rows, dim, m.n);
    // Howell condition: for every row, the annihilator multiple (n/pivot)*row
    // must already lie in the span of the later rows.
    std::vector<std::vector<int64_t>> extra;
    CanonicalBasis tmp(m, dim);
    tmp.rows_ = rows;
    tmp.pivot_cols_ = pivots;
    tmp.pivot_vals_.clear();
    for (size_t j = 0; j < pivots.size(); ++j) tmp.pivot_vals_.push_back(rows[j][pivots[j]]);
    for (size_t j = 0; j < rows.size(); ++j) {
      int64_t d = rows[j][pivots[j]];
      int64_t k = m.n / std::gcd(d, m.n);
      if (k == 1) continue;
      std::vector<int64_t> ann = rows[j];
      row_scale(ann, k, m.n);
      ann = tmp.reduce(std::move(ann));
      if (!std::all_of(ann.begin(), ann.end(), [](int64_t x) { return x == 0; }))
        extra.push_back(std::move(ann));
    }
    if (extra.empty()) break;
    for (auto& e : extra) rows.push_back(std::move(e));
  }
  CanonicalBasis out(m, dim);
  out.rows_ = std::move(rows);
  out.pivot_cols_ = std::move(pivots);
  for (size_t j = 0; j < out.rows_.size(); ++j)
    out.pivot_vals_.push_back(out.rows_[j][out.pivot_cols_[j]]);
  return out;
}

CanonicalBasis howell_form(const std::vector<CoeffVector>& rows) {
  if (rows.empty()) throw ring_error(errc::dimension_mismatch, "no rows and no ambient dimension");
  Modulus m = rows[0].mod;
  size_t dim = rows[0].size();
  std::vector<std::vector<int64_t>> raw;
  for (const auto& r : rows) {
    if (!(r.mod == m) || r.size() != dim)
      throw ring_error(errc::dimension_mismatch, "mixed moduli or lengths in howell_form");
    raw.push_back(r.v);
  }
  return howell_form(m, dim, std::move(raw));
}

bool span_contains(const CanonicalBasis& basis, const CoeffVector& v) {
  if (!(v.mod == basis.modulus()) || v.size() != basis.ambient_dim())
    throw ring_error(errc::dimension_mismatch, "vector incompatible with basis");
  return basis.contains(v.v);
}

bool is_invertible(Modulus m, const std::vector<std::vector<int64_t>>& matrix) {
  size_t k = matrix.size();
  for (const auto& r : matrix)
    if (r.size() != k) throw ring_error(errc::dimension_mismatch, "matrix is not square");
  if (k == 0) return true;
  return howell_form(m, k, matrix).is_identity();
}

std::optional<std::vector<int64_t>> express_in_span(Modulus m,
                                                    const std::vector<std::vector<int64_t>>& rows,
                                                    const std::vector<int64_t>& target) {
  size_t dim = target.size();
  size_t nrows = rows.size();
  // Augment each row with a coefficient tracker; pivot only on real columns.
  std::vector<std::vector<int64_t>> w;
  w.reserve(nrows);
  for (size_t i = 0; i < nrows; ++i) {
    if (rows[i].size() != dim) throw ring_error(errc::dimension_mismatch, "row length vs target");
    std::vector<int64_t> aug(dim + nrows, 0);
    for (size_t c = 0; c < dim; ++c) aug[c] = mod_reduce(rows[i][c], m);
    aug[dim + i] = 1;
    w.push_back(std::move(aug));
  }
  for (int round = 0;; ++round) {
    if (round > 64) throw ring_error(errc::internal, "howell form did not stabilize");
    std::vector<size_t> pivots = echelonize(w, dim, m.n);
    std::vector<std::vector<int64_t>> extra;
    for (size_t j = 0; j < pivots.size(); ++j) {
      int64_t d = w[j][pivots[j]];
      int64_t k = m.n / std::gcd(d, m.n);
      if (k == 1) continue;
      std::vector<int64_t> ann = w[j];
      row_scale(ann, k, m.n);
      for (size_t i = 0; i < pivots.size(); ++i) {
        int64_t q = ann[pivots[i]] / w[i][pivots[i]];
        if (q) row_addmul(ann, w[i], -q, m.n);
      }
      bool nonzero = false;
      for (size_t c = 0; c < dim; ++c) nonzero |= ann[c] != 0;
      if (nonzero) extra.push_back(std::move(ann));
    }
    if (extra.empty()) {
      // Greedy reduction of the target records the combination.
      std::vector<int64_t> t(target);
      for (auto& x : t) x = mod_reduce(x, m);
      std::vector<int64_t> coeff(nrows, 0);
      for (size_t j = 0; j < pivots.size(); ++j) {
        int64_t q = t[pivots[j]] / w[j][pivots[j]];
        if (!q) continue;
        for (size_t c = 0; c < dim; ++c) t[c] = ((t[c] - q * w[j][c]) % m.n + m.n) % m.n;
        for (size_t i = 0; i < nrows; ++i)
          coeff[i] = ((coeff[i] + q * w[j][dim + i]) % m.n + m.n) % m.n;
      }
      if (!std::all_of(t.begin(), t.end(), [](int64_t x) { return x == 0; })) return std::nullopt;
      return coeff;
    }
    for (auto& e : extra) w.push_back(std::move(e));
  }
}

std::optional<std::vector<int64_t>> solve_linear(Modulus m,
                                                 const std::vector<std::vector<int64_t>>& matrix,
                                                 const std::vector<int64_t>& rhs) {
  size_t k = matrix.size();
  for (const auto& r : matrix)
    if (r.size() != k) throw ring_error(errc::dimension_mismatch, "matrix is not square");
  if (rhs.size() != k) throw ring_error(errc::dimension_mismatch, "rhs length vs matrix");
  // matrix*x = rhs means rhs is the x-combination of the columns.
  std::vector<std::vector<int64_t>> cols(k, std::vector<int64_t>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) cols[j][i] = matrix[i][j];
  return express_in_span(m, cols, rhs);
}

std::optional<CoeffVector> solve_linear(const std::vector<std::vector<int64_t>>& matrix,
                                        const CoeffVector& rhs) {
  auto x = solve_linear(rhs.mod, matrix, rhs.v);
  if (!x) return std::nullopt;
  return CoeffVector(rhs.mod, std::move(*x));
}

}  // namespace deltaring
