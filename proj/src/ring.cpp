#include "deltaring/ring.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>

namespace deltaring {

namespace {

std::atomic<bool> g_mul_fault{false};

bool all_zero(const std::vector<int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](int64_t x) { return x == 0; });
}

}  // namespace

void set_multiplication_fault(bool enabled) { g_mul_fault.store(enabled); }
bool multiplication_fault_enabled() { return g_mul_fault.load(); }

// ---------------------------------------------------------------------------
// RingElement

bool RingElement::is_zero() const { return all_zero(c); }
std::string RingElement::str() const { return ring->to_string(*this); }
RingElement RingElement::pow(uint64_t e) const { return ring->pow(*this, e); }
RingElement RingElement::operator+(const RingElement& o) const { return ring->add(*this, o); }
RingElement RingElement::operator-(const RingElement& o) const { return ring->sub(*this, o); }
RingElement RingElement::operator*(const RingElement& o) const { return ring->mul(*this, o); }
RingElement RingElement::operator-() const { return ring->neg(*this); }

// ---------------------------------------------------------------------------
// CommRing

unsigned __int128 CommRing::size128() const {
  unsigned __int128 s = 1;
  for (int64_t r : radices()) s *= uint64_t(r);
  return s;
}

uint64_t CommRing::size_checked(uint64_t cap) const {
  unsigned __int128 s = size128();
  if (s > cap) throw cap_error(describe(), u128_to_string(s), cap);
  return uint64_t(s);
}

void CommRing::check(const RingElement& a) const {
  if (a.ring.get() != this) throw ring_error(errc::dimension_mismatch, "element from another ring");
  if (a.c.size() != coeff_len())
    throw ring_error(errc::dimension_mismatch, "coefficient length mismatch");
}

RingElement CommRing::zero() const {
  return RingElement{shared_from_this(), std::vector<int64_t>(coeff_len(), 0)};
}

RingElement CommRing::one() const { return RingElement{shared_from_this(), one_vec()}; }

RingElement CommRing::element(std::vector<int64_t> coeffs) const {
  if (coeffs.size() != coeff_len())
    throw ring_error(errc::dimension_mismatch, "coefficient length mismatch");
  return RingElement{shared_from_this(), normalize_vec(std::move(coeffs))};
}

RingElement CommRing::from_int(int64_t k) const {
  std::vector<int64_t> v = one_vec();
  for (auto& x : v) x *= k;
  return RingElement{shared_from_this(), normalize_vec(std::move(v))};
}

RingElement CommRing::element_at(uint64_t index) const {
  const auto& rad = radices();
  std::vector<int64_t> v(rad.size());
  unsigned __int128 rest = index;
  for (size_t i = 0; i < rad.size(); ++i) {
    v[i] = int64_t(rest % uint64_t(rad[i]));
    rest /= uint64_t(rad[i]);
  }
  if (rest != 0) throw ring_error(errc::internal, "element index out of range");
  return RingElement{shared_from_this(), std::move(v)};
}

uint64_t CommRing::index_of(const RingElement& a) const {
  check(a);
  const auto& rad = radices();
  unsigned __int128 idx = 0, stride = 1;
  for (size_t i = 0; i < rad.size(); ++i) {
    idx += stride * uint64_t(a.c[i]);
    stride *= uint64_t(rad[i]);
  }
  return uint64_t(idx);
}

RingElement CommRing::add(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  std::vector<int64_t> out(coeff_len());
  add_vec(out, a.c, b.c);
  return RingElement{shared_from_this(), std::move(out)};
}

RingElement CommRing::sub(const RingElement& a, const RingElement& b) const {
  return add(a, neg(b));
}

RingElement CommRing::neg(const RingElement& a) const {
  check(a);
  std::vector<int64_t> out(coeff_len());
  neg_vec(out, a.c);
  return RingElement{shared_from_this(), std::move(out)};
}

RingElement CommRing::mul(const RingElement& a, const RingElement& b) const {
  check(a);
  check(b);
  std::vector<int64_t> out(coeff_len());
  mul_vec(out, a.c, b.c);
  return RingElement{shared_from_this(), std::move(out)};
}

RingElement CommRing::pow(const RingElement& a, uint64_t e) const {
  check(a);
  RingElement acc = one();
  RingElement base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool CommRing::is_unit(const RingElement& a) const {
  check(a);
  return is_unit_vec(a.c);
}

RingElement CommRing::inverse(const RingElement& a) const {
  check(a);
  auto inv = inverse_vec(a.c);
  if (!inv) throw ring_error(errc::not_a_unit, to_string(a) + " in " + describe());
  return RingElement{shared_from_this(), std::move(*inv)};
}

std::string CommRing::to_string(const RingElement& a) const {
  check(a);
  return vec_to_string(a.c);
}

// ---------------------------------------------------------------------------
// RingPresentation

RingPresentation::RingPresentation(Modulus n, std::vector<VariableRule> rules, std::string name)
    : mod_(n), rules_(std::move(rules)), name_(std::move(name)) {
  std::set<std::string> names;
  for (auto& r : rules_) {
    if (r.degree < 1) throw ring_error(errc::bad_presentation, "rule degree must be positive");
    if (r.name.empty()) throw ring_error(errc::bad_presentation, "unnamed variable");
    if (!names.insert(r.name).second)
      throw ring_error(errc::bad_presentation, "duplicate variable " + r.name);
    if (int(r.reduction.size()) > r.degree)
      throw ring_error(errc::bad_presentation,
                       "reduction degree too high for variable " + r.name);
    r.reduction.resize(r.degree, 0);
    for (auto& c : r.reduction) c = mod_reduce(c, mod_);
  }

  // Basis: all exponent tuples below the rule degrees, graded-lex with the
  // declared variable order (x before y inside each degree).
  size_t count = 1;
  for (const auto& r : rules_) count *= size_t(r.degree);
  std::vector<std::vector<int>> tuples;
  tuples.reserve(count);
  std::vector<int> cur(rules_.size(), 0);
  for (size_t i = 0; i < count; ++i) {
    tuples.push_back(cur);
    for (size_t k = rules_.size(); k-- > 0;) {
      if (++cur[k] < rules_[k].degree) break;
      cur[k] = 0;
    }
  }
  std::sort(tuples.begin(), tuples.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a > b;
  });
  basis_ = std::move(tuples);
  radices_.assign(basis_.size(), mod_.n);

  table_.resize(basis_.size());
  for (size_t i = 0; i < basis_.size(); ++i) {
    table_[i].resize(basis_.size());
    for (size_t j = 0; j < basis_.size(); ++j) {
      std::vector<int> sum(rules_.size());
      for (size_t k = 0; k < rules_.size(); ++k) sum[k] = basis_[i][k] + basis_[j][k];
      table_[i][j] = reduce_exponents(sum);
    }
  }
}

size_t RingPresentation::monomial_index(const std::vector<int>& exps) const {
  auto it = std::find(basis_.begin(), basis_.end(), exps);
  if (it == basis_.end()) throw ring_error(errc::internal, "monomial not in basis");
  return size_t(it - basis_.begin());
}

std::vector<int64_t> RingPresentation::reduce_exponents(const std::vector<int>& exps) const {
  std::map<std::vector<int>, int64_t> work;
  work[exps] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = work.begin(); it != work.end(); ++it) {
      size_t v = 0;
      bool high = false;
      for (; v < rules_.size(); ++v)
        if (it->first[v] >= rules_[v].degree) {
          high = true;
          break;
        }
      if (!high) continue;
      auto term = *it;
      work.erase(it);
      // x_v^d -> reduction; rewrite one power step.
      for (int p = 0; p < rules_[v].degree; ++p) {
        int64_t rc = rules_[v].reduction[p];
        if (rc == 0) continue;
        std::vector<int> e = term.first;
        e[v] = e[v] - rules_[v].degree + p;
        work[e] = mod_reduce(work[e] + term.second * rc, mod_);
      }
      changed = true;
      break;
    }
  }
  std::vector<int64_t> out(basis_.size(), 0);
  for (const auto& [e, coeff] : work) {
    int64_t c = mod_reduce(coeff, mod_);
    if (c != 0) out[monomial_index(e)] = c;
  }
  return out;
}

std::string RingPresentation::monomial_name(size_t i) const {
  const auto& e = basis_[i];
  std::string s;
  for (size_t k = 0; k < rules_.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += rules_[k].name;
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

RingElement RingPresentation::var(size_t i) const {
  std::vector<int> e(rules_.size(), 0);
  e[i] = 1;
  std::vector<int64_t> v(dim(), 0);
  v[monomial_index(e)] = 1;
  return RingElement{shared_from_this(), std::move(v)};
}

std::vector<int64_t> RingPresentation::mul_by_monomial(const std::vector<int64_t>& a,
                                                       size_t j) const {
  std::vector<int64_t> out(dim(), 0);
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    const auto& row = table_[i][j];
    for (size_t k = 0; k < dim(); ++k)
      if (row[k]) out[k] = mod_reduce(out[k] + a[i] * row[k], mod_);
  }
  return out;
}

std::vector<std::vector<int64_t>> RingPresentation::regular_rows(
    const std::vector<int64_t>& a) const {
  std::vector<std::vector<int64_t>> rows(dim());
  for (size_t j = 0; j < dim(); ++j) rows[j] = mul_by_monomial(a, j);
  return rows;
}

void RingPresentation::mul_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
                               const std::vector<int64_t>& b) const {
  std::vector<int64_t> acc(dim(), 0);
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (b[j] == 0) continue;
      int64_t k = mod_reduce(a[i] * b[j], mod_);
      if (k == 0) continue;
      const auto& row = table_[i][j];
      for (size_t t = 0; t < dim(); ++t)
        if (row[t]) acc[t] = mod_reduce(acc[t] + k * row[t], mod_);
    }
  }
  if (multiplication_fault_enabled()) acc[0] = mod_reduce(acc[0] + 1, mod_);
  out = std::move(acc);
}

void RingPresentation::add_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
                               const std::vector<int64_t>& b) const {
  out.resize(dim());
  for (size_t i = 0; i < dim(); ++i) out[i] = mod_reduce(a[i] + b[i], mod_);
}

void RingPresentation::neg_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a) const {
  out.resize(dim());
  for (size_t i = 0; i < dim(); ++i) out[i] = mod_reduce(-a[i], mod_);
}

std::vector<int64_t> RingPresentation::one_vec() const {
  std::vector<int64_t> v(dim(), 0);
  v[0] = 1;
  return v;
}

std::vector<int64_t> RingPresentation::normalize_vec(std::vector<int64_t> v) const {
  for (auto& x : v) x = mod_reduce(x, mod_);
  return v;
}

bool RingPresentation::is_unit_vec(const std::vector<int64_t>& a) const {
  return is_invertible(mod_, regular_rows(a));
}

std::optional<std::vector<int64_t>> RingPresentation::inverse_vec(
    const std::vector<int64_t>& a) const {
  auto coeffs = express_in_span(mod_, regular_rows(a), one_vec());
  if (!coeffs) return std::nullopt;
  std::vector<int64_t> check(dim());
  mul_vec(check, a, *coeffs);
  if (check != one_vec()) throw ring_error(errc::internal, "inverse verification failed");
  return coeffs;
}

std::string RingPresentation::vec_to_string(const std::vector<int64_t>& a) const {
  std::string s;
  for (size_t i = 0; i < dim(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += " + ";
    std::string mono = monomial_name(i);
    if (mono.empty())
      s += std::to_string(a[i]);
    else if (a[i] == 1)
      s += mono;
    else
      s += std::to_string(a[i]) + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

std::string RingPresentation::describe() const {
  if (!name_.empty()) return name_;
  std::string s = "Z" + std::to_string(mod_.n);
  if (rules_.empty()) return s;
  s += "[";
  for (size_t i = 0; i < rules_.size(); ++i) {
    if (i) s += ",";
    s += rules_[i].name;
  }
  s += "]/(";
  for (size_t i = 0; i < rules_.size(); ++i) {
    if (i) s += ", ";
    s += rules_[i].name + "^" + std::to_string(rules_[i].degree);
    for (int p = rules_[i].degree - 1; p >= 0; --p) {
      int64_t c = rules_[i].reduction[p];
      if (c == 0) continue;
      // print with the smaller signed magnitude
      int64_t neg = mod_.n - c;
      std::string mono = p == 0 ? "" : (p == 1 ? rules_[i].name : rules_[i].name + "^" + std::to_string(p));
      int64_t mag = std::min(c, neg);
      bool minus = neg <= c;
      s += minus ? " - " : " + ";
      if (mono.empty())
        s += std::to_string(mag);
      else if (mag == 1)
        s += mono;
      else
        s += std::to_string(mag) + "*" + mono;
    }
  }
  s += ")";
  return s;
}

PresPtr make_ring(Modulus n, std::vector<VariableRule> rules, std::string name) {
  return std::make_shared<const RingPresentation>(n, std::move(rules), std::move(name));
}

// ---------------------------------------------------------------------------
// Ideal

Ideal::Ideal(RingPtr ring, CanonicalBasis basis) : ring_(std::move(ring)), basis_(std::move(basis)) {
  const RingPresentation* amb = ring_->ambient();
  if (!amb) throw ring_error(errc::unsupported, "ideals of product rings are not supported");
  if (basis_.ambient_dim() != amb->dim() || !(basis_.modulus() == amb->modulus()))
    throw ring_error(errc::dimension_mismatch, "ideal basis vs ring coefficient space");
  if (const auto* q = dynamic_cast<const QuotientRing*>(ring_.get())) {
    for (const auto& r : q->ideal_basis().rows())
      if (!basis_.contains(r))
        throw ring_error(errc::dimension_mismatch, "ideal does not refine the quotient ideal");
  }
  verify_closed();
}

void Ideal::verify_closed() const {
  const RingPresentation* amb = ring_->ambient();
  for (const auto& r : basis_.rows())
    for (size_t j = 0; j < amb->dim(); ++j)
      if (!basis_.contains(amb->mul_by_monomial(r, j)))
        throw ring_error(errc::internal, "span is not closed under ring multiplication");
}

bool Ideal::contains(const RingElement& a) const {
  ring_->check(a);
  return basis_.contains(a.c);
}

bool Ideal::contains_ideal(const Ideal& other) const {
  if (ring_.get() != other.ring_.get())
    throw ring_error(errc::dimension_mismatch, "ideals of different rings");
  for (const auto& r : other.basis_.rows())
    if (!basis_.contains(r)) return false;
  return true;
}

Ideal ideal_closure(const RingPtr& ring, const std::vector<RingElement>& gens) {
  const RingPresentation* amb = ring->ambient();
  if (!amb) throw ring_error(errc::unsupported, "ideals of product rings are not supported");
  std::vector<std::vector<int64_t>> rows;
  for (const auto& g : gens) {
    ring->check(g);
    for (size_t j = 0; j < amb->dim(); ++j) rows.push_back(amb->mul_by_monomial(g.c, j));
  }
  if (const auto* q = dynamic_cast<const QuotientRing*>(ring.get()))
    for (const auto& r : q->ideal_basis().rows()) rows.push_back(r);
  return Ideal(ring, howell_form(amb->modulus(), amb->dim(), std::move(rows)));
}

Ideal zero_ideal(const RingPtr& ring) {
  return ideal_closure(ring, {});
}

Ideal unit_ideal(const RingPtr& ring) {
  return ideal_closure(ring, {ring->one()});
}

// ---------------------------------------------------------------------------
// QuotientRing

QuotientRing::QuotientRing(PresPtr parent, CanonicalBasis ideal_basis)
    : parent_(std::move(parent)), ideal_(std::move(ideal_basis)) {
  if (ideal_.ambient_dim() != parent_->dim() || !(ideal_.modulus() == parent_->modulus()))
    throw ring_error(errc::dimension_mismatch, "ideal basis vs parent coefficient space");
  radices_ = ideal_.coset_radices();
}

RingElement QuotientRing::normal_form(const RingElement& parent_element) const {
  const CommRing* src = parent_element.ring.get();
  if (src->ambient() != parent_.get() || parent_element.c.size() != coeff_len())
    throw ring_error(errc::dimension_mismatch, "element is not from the parent ring");
  return RingElement{shared_from_this(), ideal_.reduce(parent_element.c)};
}

void QuotientRing::mul_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
                           const std::vector<int64_t>& b) const {
  parent_->mul_vec(out, a, b);
  out = ideal_.reduce(std::move(out));
}

void QuotientRing::add_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
                           const std::vector<int64_t>& b) const {
  parent_->add_vec(out, a, b);
  out = ideal_.reduce(std::move(out));
}

void QuotientRing::neg_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a) const {
  parent_->neg_vec(out, a);
  out = ideal_.reduce(std::move(out));
}

std::vector<int64_t> QuotientRing::one_vec() const { return ideal_.reduce(parent_->one_vec()); }

std::vector<int64_t> QuotientRing::normalize_vec(std::vector<int64_t> v) const {
  return ideal_.reduce(parent_->normalize_vec(std::move(v)));
}

bool QuotientRing::is_unit_vec(const std::vector<int64_t>& a) const {
  auto rows = parent_->regular_rows(a);
  for (const auto& r : ideal_.rows()) rows.push_back(r);
  return howell_form(parent_->modulus(), parent_->dim(), std::move(rows))
      .contains(parent_->one_vec());
}

std::optional<std::vector<int64_t>> QuotientRing::inverse_vec(const std::vector<int64_t>& a) const {
  auto rows = parent_->regular_rows(a);
  size_t dim = parent_->dim();
  for (const auto& r : ideal_.rows()) rows.push_back(r);
  auto coeffs = express_in_span(parent_->modulus(), rows, parent_->one_vec());
  if (!coeffs) return std::nullopt;
  std::vector<int64_t> x(coeffs->begin(), coeffs->begin() + dim);
  x = ideal_.reduce(std::move(x));
  std::vector<int64_t> check(dim);
  mul_vec(check, a, x);
  if (check != one_vec()) throw ring_error(errc::internal, "inverse verification failed");
  return x;
}

int64_t QuotientRing::characteristic() const {
  int64_t n = parent_->modulus().n;
  for (int64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    std::vector<int64_t> v = parent_->one_vec();
    for (auto& x : v) x = mod_reduce(x * d, parent_->modulus());
    if (ideal_.contains(v)) return d;
  }
  return n;
}

std::string QuotientRing::vec_to_string(const std::vector<int64_t>& a) const {
  return parent_->vec_to_string(a);
}

std::string QuotientRing::describe() const {
  std::string s = parent_->describe() + " % (";
  bool first = true;
  for (const auto& r : ideal_.rows()) {
    if (!first) s += ", ";
    first = false;
    s += parent_->vec_to_string(r);
  }
  return s + ")";
}

std::shared_ptr<const QuotientRing> quotient_ring(const RingPtr& ring, const Ideal& ideal) {
  if (ideal.ring().get() != ring.get())
    throw ring_error(errc::dimension_mismatch, "ideal belongs to another ring");
  const RingPresentation* amb = ring->ambient();
  PresPtr parent = std::static_pointer_cast<const RingPresentation>(amb->shared_from_this());
  return std::make_shared<const QuotientRing>(parent, ideal.basis());
}

// ---------------------------------------------------------------------------
// ProductRing

ProductRing::ProductRing(std::vector<RingPtr> components) : components_(std::move(components)) {
  if (components_.empty()) throw ring_error(errc::bad_presentation, "empty product");
  for (const auto& c : components_) {
    offsets_.push_back(len_);
    len_ += c->coeff_len();
    const auto& r = c->radices();
    radices_.insert(radices_.end(), r.begin(), r.end());
  }
}

std::shared_ptr<const ProductRing> ProductRing::make(std::vector<RingPtr> components) {
  std::vector<RingPtr> flat;
  for (auto& c : components) {
    if (auto p = std::dynamic_pointer_cast<const ProductRing>(c))
      for (const auto& sub : p->components()) flat.push_back(sub);
    else
      flat.push_back(std::move(c));
  }
  return std::shared_ptr<const ProductRing>(new ProductRing(std::move(flat)));
}

std::vector<int64_t> ProductRing::component_slice(const std::vector<int64_t>& v, size_t k) const {
  size_t off = offsets_[k], len = components_[k]->coeff_len();
  return std::vector<int64_t>(v.begin() + off, v.begin() + off + len);
}

void ProductRing::mul_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
                          const std::vector<int64_t>& b) const {
  std::vector<int64_t> acc(len_);
  for (size_t k = 0; k < components_.size(); ++k) {
    std::vector<int64_t> part(components_[k]->coeff_len());
    components_[k]->mul_vec(part, component_slice(a, k), component_slice(b, k));
    std::copy(part.begin(), part.end(), acc.begin() + offsets_[k]);
  }
  out = std::move(acc);
}

void ProductRing::add_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a,
                          const std::vector<int64_t>& b) const {
  std::vector<int64_t> acc(len_);
  for (size_t k = 0; k < components_.size(); ++k) {
    std::vector<int64_t> part(components_[k]->coeff_len());
    components_[k]->add_vec(part, component_slice(a, k), component_slice(b, k));
    std::copy(part.begin(), part.end(), acc.begin() + offsets_[k]);
  }
  out = std::move(acc);
}

void ProductRing::neg_vec(std::vector<int64_t>& out, const std::vector<int64_t>& a) const {
  std::vector<int64_t> acc(len_);
  for (size_t k = 0; k < components_.size(); ++k) {
    std::vector<int64_t> part(components_[k]->coeff_len());
    components_[k]->neg_vec(part, component_slice(a, k));
    std::copy(part.begin(), part.end(), acc.begin() + offsets_[k]);
  }
  out = std::move(acc);
}

std::vector<int64_t> ProductRing::one_vec() const {
  std::vector<int64_t> v(len_);
  for (size_t k = 0; k < components_.size(); ++k) {
    auto part = components_[k]->one_vec();
    std::copy(part.begin(), part.end(), v.begin() + offsets_[k]);
  }
  return v;
}

std::vector<int64_t> ProductRing::normalize_vec(std::vector<int64_t> v) const {
  std::vector<int64_t> out(len_);
  for (size_t k = 0; k < components_.size(); ++k) {
    auto part = components_[k]->normalize_vec(component_slice(v, k));
    std::copy(part.begin(), part.end(), out.begin() + offsets_[k]);
  }
  return out;
}

bool ProductRing::is_unit_vec(const std::vector<int64_t>& a) const {
  for (size_t k = 0; k < components_.size(); ++k)
    if (!components_[k]->is_unit_vec(component_slice(a, k))) return false;
  return true;
}

std::optional<std::vector<int64_t>> ProductRing::inverse_vec(const std::vector<int64_t>& a) const {
  std::vector<int64_t> out(len_);
  for (size_t k = 0; k < components_.size(); ++k) {
    auto inv = components_[k]->inverse_vec(component_slice(a, k));
    if (!inv) return std::nullopt;
    std::copy(inv->begin(), inv->end(), out.begin() + offsets_[k]);
  }
  return out;
}

int64_t ProductRing::characteristic() const {
  int64_t l = 1;
  for (const auto& c : components_) l = std::lcm(l, c->characteristic());
  return l;
}

std::string ProductRing::vec_to_string(const std::vector<int64_t>& a) const {
  std::string s = "(";
  for (size_t k = 0; k < components_.size(); ++k) {
    if (k) s += ", ";
    s += components_[k]->vec_to_string(component_slice(a, k));
  }
  return s + ")";
}

std::string ProductRing::describe() const {
  std::string s = "product(";
  for (size_t k = 0; k < components_.size(); ++k) {
    if (k) s += ", ";
    s += components_[k]->describe();
  }
  return s + ")";
}

RingPtr product_ring(std::vector<RingPtr> components) {
  return ProductRing::make(std::move(components));
}

// ---------------------------------------------------------------------------
// Element-scan operations

void for_each_element(const RingPtr& ring, uint64_t cap,
                      const std::function<void(const RingElement&)>& fn) {
  uint64_t n = ring->size_checked(cap);
  for (uint64_t i = 0; i < n; ++i) fn(ring->element_at(i));
}

std::vector<RingElement> idempotents(const RingPtr& ring, uint64_t cap) {
  std::vector<RingElement> out;
  for_each_element(ring, cap, [&](const RingElement& e) {
    if (e * e == e) out.push_back(e);
  });
  return out;
}

bool is_nilpotent(const RingElement& a) {
  // a is nilpotent iff a^(2^k) = 0 for 2^k >= |R|.
  unsigned __int128 size = a.ring->size128();
  RingElement b = a;
  for (unsigned __int128 bound = 1;; bound *= 2) {
    if (b.is_zero()) return true;
    if (bound >= size) return false;
    b = b * b;
  }
}

Ideal nilpotents(const RingPtr& ring, uint64_t cap) {
  const RingPresentation* amb = ring->ambient();
  if (!amb) throw ring_error(errc::unsupported, "nilradical of product rings is not supported");
  uint64_t count = 0;
  std::vector<std::vector<int64_t>> rows;
  for_each_element(ring, cap, [&](const RingElement& e) {
    if (is_nilpotent(e)) {
      ++count;
      rows.push_back(e.c);
    }
  });
  if (const auto* q = dynamic_cast<const QuotientRing*>(ring.get()))
    for (const auto& r : q->ideal_basis().rows()) rows.push_back(r);
  auto basis = howell_form(amb->modulus(), amb->dim(), std::move(rows));
  // The span must consist of exactly the nilpotent cosets.
  unsigned __int128 expect = count;
  if (const auto* q = dynamic_cast<const QuotientRing*>(ring.get()))
    expect *= q->ideal_basis().span_size();
  if (basis.span_size() != expect)
    throw ring_error(errc::internal, "nilpotent set is not additively closed");
  return Ideal(ring, std::move(basis));
}

}  // namespace deltaring
