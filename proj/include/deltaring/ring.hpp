#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deltaring/zmod.hpp"

namespace deltaring {

class CommRing;
class RingPresentation;
class QuotientRing;
class ProductRing;

using RingPtr = std::shared_ptr<const CommRing>;
using PresPtr = std::shared_ptr<const RingPresentation>;

constexpr uint64_t kDefaultElementCap = uint64_t(1) << 20;

// Test hook: when enabled, ring multiplication is deliberately corrupted so
// the verification suite can prove it notices.
void set_multiplication_fault(bool enabled);
bool multiplication_fault_enabled();

struct RingElement {
  RingPtr ring;
  std::vector<int64_t> c;

  bool is_zero() const;
  std::string str() const;
  RingElement pow(uint64_t e) const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator-() const;
  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring.get() == b.ring.get() && a.c == b.c;
  }
};

// A finite commutative ring presented over coefficient vectors.  Every
// element is a flat vector of residues; what the coordinates mean is the
// ring's business (monomial basis, canonical coset representative, or the
// concatenation of component vectors for products).
class CommRing : public std::enable_shared_from_this<CommRing> {
 public:
  using element_type = RingElement;

  virtual ~CommRing() = default;

  virtual size_t coeff_len() const = 0;
  // Per-coordinate range of canonical vectors; the ring size is the product.
  virtual const std::vector<int64_t>& radices() const = 0;

  unsigned __int128 size128() const;
  std::string size_text() const { return u128_to_string(size128()); }
  bool fits(uint64_t cap) const { return size128() <= cap; }
  uint64_t size_checked(uint64_t cap) const;

  virtual void mul_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
                       const std::vector<int64_t>& b) const = 0;
  virtual void add_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
                       const std::vector<int64_t>& b) const = 0;
  virtual void neg_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a) const = 0;
  virtual std::vector<int64_t> one_vec() const = 0;
  virtual std::vector<int64_t> normalize_vec(std::vector<int64_t> v) const = 0;
  virtual bool is_unit_vec(const std::vector<int64_t>& a) const = 0;
  virtual std::optional<std::vector<int64_t>> inverse_vec(const std::vector<int64_t>& a) const = 0;
  virtual int64_t characteristic() const = 0;
  virtual std::string vec_to_string(const std::vector<int64_t>& a) const = 0;
  virtual std::string describe() const = 0;
  // The presentation whose coefficient space the vectors live in; null for
  // products, which do not support ideal arithmetic.
  virtual const RingPresentation* ambient() const = 0;

  RingElement zero() const;
  RingElement one() const;
  RingElement element(std::vector<int64_t> coeffs) const;
  RingElement from_int(int64_t k) const;
  RingElement element_at(uint64_t index) const;
  uint64_t index_of(const RingElement& a) const;

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement pow(const RingElement& a, uint64_t e) const;
  bool is_unit(const RingElement& a) const;
  RingElement inverse(const RingElement& a) const;
  std::string to_string(const RingElement& a) const;

  void check(const RingElement& a) const;
};

struct VariableRule {
  std::string name;
  int degree;                      // x^degree rewrites to...
  std::vector<int64_t> reduction;  // ...this univariate polynomial, coeffs by power
};

class RingPresentation final : public CommRing {
 public:
  RingPresentation(Modulus n, std::vector<VariableRule> rules, std::string name = "");

  const Modulus& modulus() const { return mod_; }
  const std::vector<VariableRule>& rules() const { return rules_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<int>>& basis_exponents() const { return basis_; }
  // Product of basis monomials i and j, reduced, as a coefficient vector.
  const std::vector<int64_t>& mono_mul(size_t i, size_t j) const { return table_[i][j]; }
  std::string monomial_name(size_t i) const;
  RingElement var(size_t i) const;

  // a * (basis monomial j), raw vectors.
  std::vector<int64_t> mul_by_monomial(const std::vector<int64_t>& a, size_t j) const;
  // Rows of the regular representation: a * m_j for every basis monomial.
  std::vector<std::vector<int64_t>> regular_rows(const std::vector<int64_t>& a) const;

  size_t coeff_len() const override { return basis_.size(); }
  const std::vector<int64_t>& radices() const override { return radices_; }
  void mul_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
               const std::vector<int64_t>& b) const override;
  void add_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
               const std::vector<int64_t>& b) const override;
  void neg_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a) const override;
  std::vector<int64_t> one_vec() const override;
  std::vector<int64_t> normalize_vec(std::vector<int64_t> v) const override;
  bool is_unit_vec(const std::vector<int64_t>& a) const override;
  std::optional<std::vector<int64_t>> inverse_vec(const std::vector<int64_t>& a) const override;
  int64_t characteristic() const override { return mod_.n; }
  std::string vec_to_string(const std::vector<int64_t>& a) const override;
  std::string describe() const override;
  const RingPresentation* ambient() const override { return this; }

 private:
  Modulus mod_;
  std::vector<VariableRule> rules_;
  std::string name_;
  std::vector<std::vector<int>> basis_;  // exponent tuples, graded-lex
  std::vector<int64_t> radices_;
  std::vector<std::vector<std::vector<int64_t>>> table_;  // mono x mono -> coeffs

  std::vector<int64_t> reduce_exponents(const std::vector<int>& exps) const;
  size_t monomial_index(const std::vector<int>& exps) const;
};

PresPtr make_ring(Modulus n, std::vector<VariableRule> rules, std::string name = "");

class Ideal {
 public:
  Ideal(RingPtr ring, CanonicalBasis basis);

  const RingPtr& ring() const { return ring_; }
  const CanonicalBasis& basis() const { return basis_; }
  unsigned __int128 span_size() const { return basis_.span_size(); }
  bool contains(const RingElement& a) const;
  // Every basis row of `other` lies in this span.
  bool contains_ideal(const Ideal& other) const;
  // Throws on any basis row whose monomial multiples leave the span.
  void verify_closed() const;

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.ring_.get() == b.ring_.get() && a.basis_ == b.basis_;
  }

 private:
  RingPtr ring_;
  CanonicalBasis basis_;
};

Ideal ideal_closure(const RingPtr& ring, const std::vector<RingElement>& gens);
Ideal zero_ideal(const RingPtr& ring);
Ideal unit_ideal(const RingPtr& ring);

class QuotientRing final : public CommRing {
 public:
  QuotientRing(PresPtr parent, CanonicalBasis ideal_basis);

  const PresPtr& parent() const { return parent_; }
  const CanonicalBasis& ideal_basis() const { return ideal_; }
  RingElement normal_form(const RingElement& parent_element) const;

  size_t coeff_len() const override { return parent_->coeff_len(); }
  const std::vector<int64_t>& radices() const override { return radices_; }
  void mul_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
               const std::vector<int64_t>& b) const override;
  void add_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
               const std::vector<int64_t>& b) const override;
  void neg_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a) const override;
  std::vector<int64_t> one_vec() const override;
  std::vector<int64_t> normalize_vec(std::vector<int64_t> v) const override;
  bool is_unit_vec(const std::vector<int64_t>& a) const override;
  std::optional<std::vector<int64_t>> inverse_vec(const std::vector<int64_t>& a) const override;
  int64_t characteristic() const override;
  std::string vec_to_string(const std::vector<int64_t>& a) const override;
  std::string describe() const override;
  const RingPresentation* ambient() const override { return parent_.get(); }

 private:
  PresPtr parent_;
  CanonicalBasis ideal_;
  std::vector<int64_t> radices_;
};

std::shared_ptr<const QuotientRing> quotient_ring(const RingPtr& ring, const Ideal& ideal);

class ProductRing final : public CommRing {
 public:
  static std::shared_ptr<const ProductRing> make(std::vector<RingPtr> components);

  const std::vector<RingPtr>& components() const { return components_; }
  // Slice of a product vector belonging to component k.
  std::vector<int64_t> component_slice(const std::vector<int64_t>& v, size_t k) const;

  size_t coeff_len() const override { return len_; }
  const std::vector<int64_t>& radices() const override { return radices_; }
  void mul_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
               const std::vector<int64_t>& b) const override;
  void add_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
               const std::vector<int64_t>& b) const override;
  void neg_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a) const override;
  std::vector<int64_t> one_vec() const override;
  std::vector<int64_t> normalize_vec(std::vector<int64_t> v) const override;
  bool is_unit_vec(const std::vector<int64_t>& a) const override;
  std::optional<std::vector<int64_t>> inverse_vec(const std::vector<int64_t>& a) const override;
  int64_t characteristic() const override;
  std::string vec_to_string(const std::vector<int64_t>& a) const override;
  std::string describe() const override;
  const RingPresentation* ambient() const override { return nullptr; }

 private:
  explicit ProductRing(std::vector<RingPtr> components);

  std::vector<RingPtr> components_;
  std::vector<size_t> offsets_;
  size_t len_ = 0;
  std::vector<int64_t> radices_;
};

RingPtr product_ring(std::vector<RingPtr> components);

void for_each_element(const RingPtr& ring, uint64_t cap,
                      const std::function<void(const RingElement&)>& fn);
std::vector<RingElement> idempotents(const RingPtr& ring, uint64_t cap = kDefaultElementCap);
bool is_nilpotent(const RingElement& a);
Ideal nilpotents(const RingPtr& ring, uint64_t cap = kDefaultElementCap);

}  // namespace deltaring
