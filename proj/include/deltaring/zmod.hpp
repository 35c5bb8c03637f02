#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deltaring/errors.hpp"

namespace deltaring {

// Exact linear algebra over Z_n, composite n allowed.  A submodule of
// (Z_n)^k is stored in Howell normal form, which is unique per submodule:
// two spans are equal iff their bases compare equal row by row.

struct Modulus {
  int64_t n;
  explicit Modulus(int64_t value);
  friend bool operator==(const Modulus&, const Modulus&) = default;
};

// Canonical residue in [0, n).
inline int64_t mod_reduce(int64_t x, const Modulus& m) {
  int64_t r = x % m.n;
  return r < 0 ? r + m.n : r;
}

std::string u128_to_string(unsigned __int128 v);

struct CoeffVector {
  Modulus mod;
  std::vector<int64_t> v;

  CoeffVector(Modulus m, std::vector<int64_t> entries);
  size_t size() const { return v.size(); }
  friend bool operator==(const CoeffVector&, const CoeffVector&) = default;
};

class CanonicalBasis {
 public:
  // The zero submodule of (Z_n)^dim.
  CanonicalBasis(Modulus m, size_t ambient_dim);
  static CanonicalBasis identity(Modulus m, size_t dim);

  const Modulus& modulus() const { return mod_; }
  size_t ambient_dim() const { return dim_; }
  const std::vector<std::vector<int64_t>>& rows() const { return rows_; }
  const std::vector<size_t>& pivot_cols() const { return pivot_cols_; }
  const std::vector<int64_t>& pivot_vals() const { return pivot_vals_; }

  unsigned __int128 span_size() const;
  bool is_zero() const { return rows_.empty(); }
  bool is_identity() const;

  // Canonical coset representative of v modulo the span.
  std::vector<int64_t> reduce(std::vector<int64_t> v) const;
  bool contains(const std::vector<int64_t>& v) const;

  // Per-coordinate radix of the canonical coset representatives: the pivot
  // value at pivot columns, n elsewhere.  Product equals n^dim / span_size.
  std::vector<int64_t> coset_radices() const;

  // Dense byte key for hash-set deduplication.
  std::string key() const;

  friend bool operator==(const CanonicalBasis&, const CanonicalBasis&) = default;

  friend CanonicalBasis howell_form(Modulus m, size_t dim,
                                    std::vector<std::vector<int64_t>> rows);

 private:
  Modulus mod_;
  size_t dim_;
  std::vector<std::vector<int64_t>> rows_;
  std::vector<size_t> pivot_cols_;
  std::vector<int64_t> pivot_vals_;
};

CanonicalBasis howell_form(Modulus m, size_t dim, std::vector<std::vector<int64_t>> rows);
CanonicalBasis howell_form(const std::vector<CoeffVector>& rows);

bool span_contains(const CanonicalBasis& basis, const CoeffVector& v);

// True iff the square matrix has a two-sided inverse over Z_n, decided by
// checking that the Howell form of its row space is the identity basis.
bool is_invertible(Modulus m, const std::vector<std::vector<int64_t>>& matrix);

// Some x with matrix*x = rhs, or nullopt when no solution exists.
std::optional<std::vector<int64_t>> solve_linear(Modulus m,
                                                 const std::vector<std::vector<int64_t>>& matrix,
                                                 const std::vector<int64_t>& rhs);
std::optional<CoeffVector> solve_linear(const std::vector<std::vector<int64_t>>& matrix,
                                        const CoeffVector& rhs);

// Coefficients c with sum_i c_i * rows[i] = target, or nullopt.
std::optional<std::vector<int64_t>> express_in_span(Modulus m,
                                                    const std::vector<std::vector<int64_t>>& rows,
                                                    const std::vector<int64_t>& target);

}  // namespace deltaring
