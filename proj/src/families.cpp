#include "deltaring/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "deltaring/unit_group.hpp"

namespace deltaring {

PresPtr truncated_f2(int l) {
  if (l < 0) throw ring_error(errc::bad_presentation, "negative variable count");
  std::vector<VariableRule> rules;
  for (int i = 1; i <= l; ++i) rules.push_back({"x" + std::to_string(i), 2, {0}});
  return make_ring(Modulus(2), std::move(rules));
}

PresPtr group_algebra(int64_t n, const GroupSpec& g) {
  std::vector<VariableRule> rules;
  for (size_t i = 0; i < g.cyclic_orders.size(); ++i) {
    int64_t k = g.cyclic_orders[i];
    if (k < 2) throw ring_error(errc::bad_presentation, "cyclic factor order must be at least 2");
    std::vector<int64_t> red(size_t(k), 0);
    red[0] = 1;  // s^k -> 1
    rules.push_back({"s" + std::to_string(i + 1), int(k), std::move(red)});
  }
  return make_ring(Modulus(n), std::move(rules));
}

namespace {

std::vector<int64_t> default_field_rule(int64_t p, int m) {
  // x^m -> the listed polynomial; each choice is irreducible over F_p.
  if (p == 2 && m == 2) return {1, 1};        // x^2 + x + 1
  if (p == 2 && m == 3) return {1, 1, 0};     // x^3 + x + 1
  if (p == 2 && m == 4) return {1, 1, 0, 0};  // x^4 + x + 1
  if (p == 2 && m == 5) return {1, 0, 1, 0, 0};  // x^5 + x^2 + 1
  if (p == 3 && m == 2) return {2, 0};        // x^2 + 1
  if (p == 3 && m == 3) return {2, 1, 0};     // x^3 + 2x + 1
  if (p == 5 && m == 2) return {3, 0};        // x^2 + 2
  if (p == 7 && m == 2) return {6, 0};        // x^2 + 1
  throw ring_error(errc::unsupported,
                   "no default reduction for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
}

PresPtr checked_field(int64_t p, int m, std::vector<int64_t> reduction) {
  if (!is_prime(p)) throw ring_error(errc::bad_presentation, "field characteristic must be prime");
  unsigned __int128 q = 1;
  for (int i = 0; i < m; ++i) q *= uint64_t(p);
  std::string name = "GF(" + u128_to_string(q) + ")";
  PresPtr f = m == 1 ? make_ring(Modulus(p), {}, name)
                     : make_ring(Modulus(p), {{"x", m, std::move(reduction)}}, name);
  uint64_t sz = f->size_checked(1 << 16);
  for (uint64_t i = 1; i < sz; ++i)
    if (!f->is_unit(f->element_at(i)))
      throw ring_error(errc::bad_presentation,
                       "reduction is reducible: " + f->element_at(i).str() + " is not a unit");
  return f;
}

}  // namespace

PresPtr finite_field(int64_t p, int m) {
  if (m < 1) throw ring_error(errc::bad_presentation, "field extension degree must be positive");
  return checked_field(p, m, m == 1 ? std::vector<int64_t>{} : default_field_rule(p, m));
}

PresPtr gf(int m) { return finite_field(2, m); }

PresPtr gf(int m, std::vector<int64_t> reduction) {
  if (m < 2) throw ring_error(errc::bad_presentation, "custom reductions need degree >= 2");
  return checked_field(2, m, std::move(reduction));
}

namespace {

bool is_z_family_parent(const RingPresentation& r) {
  if (r.modulus().n != 4 && r.modulus().n != 8) return false;
  for (const auto& rule : r.rules()) {
    if (rule.degree != 2) return false;
    if (rule.reduction != std::vector<int64_t>{1, 0}) return false;
  }
  return true;
}

}  // namespace

Ideal maximal_ideal_P(const PresPtr& parent) {
  if (!is_z_family_parent(*parent))
    throw ring_error(errc::bad_presentation,
                     parent->describe() + " is not a Z4/Z8 group-algebra presentation");
  std::vector<RingElement> gens = {parent->from_int(2)};
  for (size_t i = 0; i < parent->rules().size(); ++i)
    gens.push_back(parent->var(i) - parent->one());
  Ideal p = ideal_closure(std::static_pointer_cast<const CommRing>(parent), gens);
  if (p.span_size() * 2 != parent->size128())
    throw ring_error(errc::internal, "ideal (2, x_i - 1) does not have index 2");
  return p;
}

Ideal eta_ideal_J(const PresPtr& ring, const Ideal& p_ideal) {
  if (p_ideal.ring().get() != ring.get())
    throw ring_error(errc::dimension_mismatch, "ideal belongs to another ring");
  std::vector<RingElement> basis_elems;
  for (const auto& row : p_ideal.basis().rows()) basis_elems.push_back(ring->element(row));
  auto two = ring->from_int(2);
  std::vector<RingElement> gens;
  for (const auto& b : basis_elems) gens.push_back(b * b + two * b);
  for (size_t i = 0; i < basis_elems.size(); ++i)
    for (size_t j = i; j < basis_elems.size(); ++j)
      gens.push_back(two * basis_elems[i] * basis_elems[j]);
  return ideal_closure(std::static_pointer_cast<const CommRing>(ring), gens);
}

std::shared_ptr<const QuotientRing> z_family(int64_t characteristic, int l, uint64_t cap) {
  if (characteristic != 4 && characteristic != 8)
    throw ring_error(errc::bad_presentation, "z_family characteristic must be 4 or 8");
  if (l < 1) throw ring_error(errc::bad_presentation, "z_family needs at least one variable");
  GroupSpec g;
  g.cyclic_orders.assign(size_t(l), 2);
  PresPtr parent = group_algebra(characteristic, g);
  parent->size_checked(cap);
  Ideal p = maximal_ideal_P(parent);
  Ideal j = eta_ideal_J(parent, p);
  auto q = quotient_ring(std::static_pointer_cast<const CommRing>(parent), j);
  if (!is_delta_p(*q, 2, cap).verdict)
    throw ring_error(errc::internal, "z_family quotient is not delta_2");
  return q;
}

bool delta2_quotient_criterion(const PresPtr& parent, const Ideal& j_user, uint64_t cap) {
  if (j_user.ring().get() != parent.get())
    throw ring_error(errc::dimension_mismatch, "ideal belongs to another ring");
  Ideal j_eta = eta_ideal_J(parent, maximal_ideal_P(parent));
  bool criterion = j_user.contains_ideal(j_eta);
  bool brute = is_delta_p(*quotient_ring(std::static_pointer_cast<const CommRing>(parent), j_user),
                          2, cap)
                   .verdict;
  if (criterion != brute)
    throw ring_error(errc::internal, "quotient criterion disagrees with the unit scan");
  return criterion;
}

bool is_mersenne(int64_t p) {
  if (!is_prime(p)) return false;
  int64_t q = p + 1;
  return (q & (q - 1)) == 0;
}

// ---------------------------------------------------------------------------
// FamilyDescriptor

bool operator==(const FamilyDescriptor& a, const FamilyDescriptor& b) {
  return a.tag == b.tag && a.param == b.param &&
         a.group.cyclic_orders == b.group.cyclic_orders && a.factors == b.factors &&
         a.exponent == b.exponent;
}

namespace {

struct DescParser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw parse_error(errc::syntax, pos, std::string("expected '") + c + "'");
  }
  int64_t integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw parse_error(errc::syntax, pos, "expected an integer");
    return std::stoll(s.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) throw parse_error(errc::syntax, pos, "expected a family name");
    return s.substr(start, pos - start);
  }

  FamilyDescriptor node() {
    FamilyDescriptor d = base();
    skip_ws();
    if (eat('^')) {
      int64_t k = integer();
      if (k < 1) throw parse_error(errc::syntax, pos, "exponent must be positive");
      d.exponent = int(k);
    }
    return d;
  }

  FamilyDescriptor base() {
    std::string name = ident();
    FamilyDescriptor d;
    if (name == "f3") {
      d.tag = FamilyDescriptor::Tag::f3;
      return d;
    }
    if (name == "truncated_f2") {
      d.tag = FamilyDescriptor::Tag::truncated_f2;
      expect('(');
      d.param = integer();
      expect(')');
      return d;
    }
    if (name == "gf") {
      d.tag = FamilyDescriptor::Tag::gf;
      expect('(');
      d.param = integer();
      expect(')');
      return d;
    }
    if (name == "group_algebra") {
      d.tag = FamilyDescriptor::Tag::group_algebra;
      expect('(');
      d.param = integer();
      expect(',');
      expect('[');
      d.group.cyclic_orders.push_back(integer());
      while (eat(',')) d.group.cyclic_orders.push_back(integer());
      expect(']');
      expect(')');
      return d;
    }
    if (name == "z_family") {
      expect('(');
      int64_t ch = integer();
      expect(',');
      d.param = integer();
      expect(')');
      if (ch == 4)
        d.tag = FamilyDescriptor::Tag::z4_family;
      else if (ch == 8)
        d.tag = FamilyDescriptor::Tag::z8_family;
      else
        throw parse_error(errc::syntax, pos, "z_family characteristic must be 4 or 8");
      return d;
    }
    if (name == "product") {
      d.tag = FamilyDescriptor::Tag::product;
      expect('(');
      d.factors.push_back(node());
      while (eat(',')) d.factors.push_back(node());
      expect(')');
      return d;
    }
    throw parse_error(errc::unknown_identifier, pos, "unknown family " + name);
  }
};

}  // namespace

FamilyDescriptor FamilyDescriptor::parse(const std::string& text) {
  DescParser p{text};
  FamilyDescriptor d = p.node();
  p.skip_ws();
  if (p.pos != text.size()) throw parse_error(errc::syntax, p.pos, "trailing input");
  return d;
}

std::string FamilyDescriptor::str() const {
  std::string s;
  switch (tag) {
    case Tag::f3: s = "f3"; break;
    case Tag::truncated_f2: s = "truncated_f2(" + std::to_string(param) + ")"; break;
    case Tag::gf: s = "gf(" + std::to_string(param) + ")"; break;
    case Tag::group_algebra: {
      s = "group_algebra(" + std::to_string(param) + ", [";
      for (size_t i = 0; i < group.cyclic_orders.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(group.cyclic_orders[i]);
      }
      s += "])";
      break;
    }
    case Tag::z4_family: s = "z_family(4, " + std::to_string(param) + ")"; break;
    case Tag::z8_family: s = "z_family(8, " + std::to_string(param) + ")"; break;
    case Tag::product: {
      s = "product(";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += ", ";
        s += factors[i].str();
      }
      s += ")";
      break;
    }
  }
  if (exponent != 1) s += "^" + std::to_string(exponent);
  return s;
}

RingPtr build_family(const FamilyDescriptor& d, uint64_t cap) {
  RingPtr base;
  switch (d.tag) {
    case FamilyDescriptor::Tag::f3: base = make_ring(Modulus(3), {}, "F3"); break;
    case FamilyDescriptor::Tag::truncated_f2: base = truncated_f2(int(d.param)); break;
    case FamilyDescriptor::Tag::gf: base = gf(int(d.param)); break;
    case FamilyDescriptor::Tag::group_algebra: base = group_algebra(d.param, d.group); break;
    case FamilyDescriptor::Tag::z4_family: base = z_family(4, int(d.param), cap); break;
    case FamilyDescriptor::Tag::z8_family: base = z_family(8, int(d.param), cap); break;
    case FamilyDescriptor::Tag::product: {
      std::vector<RingPtr> comps;
      for (const auto& f : d.factors) comps.push_back(build_family(f, cap));
      base = product_ring(std::move(comps));
      break;
    }
  }
  if (d.exponent == 1) return base;
  std::vector<RingPtr> copies(size_t(d.exponent), base);
  return product_ring(std::move(copies));
}

namespace {

bool predict_delta2(const FamilyDescriptor& d) {
  switch (d.tag) {
    case FamilyDescriptor::Tag::f3:
    case FamilyDescriptor::Tag::truncated_f2:
    case FamilyDescriptor::Tag::z4_family:
    case FamilyDescriptor::Tag::z8_family:
      return true;
    case FamilyDescriptor::Tag::gf:
      return d.param == 1;
    case FamilyDescriptor::Tag::group_algebra: {
      const auto& orders = d.group.cyclic_orders;
      bool elem2 = std::all_of(orders.begin(), orders.end(), [](int64_t k) { return k == 2; });
      if (!elem2) return false;
      int64_t n = d.param;
      size_t r = orders.size();
      return n == 2 || n == 3 || n == 6 || ((n == 4 || n == 12) && r == 1);
    }
    case FamilyDescriptor::Tag::product:
      return std::all_of(d.factors.begin(), d.factors.end(), predict_delta2);
  }
  return false;
}

bool predict_odd_p(const FamilyDescriptor& d, int64_t p) {
  bool mers = is_mersenne(p);
  switch (d.tag) {
    case FamilyDescriptor::Tag::f3:
      return false;  // -1 is a unit of order 2
    case FamilyDescriptor::Tag::truncated_f2:
      return d.param == 0;
    case FamilyDescriptor::Tag::gf:
      return d.param == 1 || (mers && (int64_t(1) << d.param) == p + 1);
    case FamilyDescriptor::Tag::group_algebra: {
      const auto& orders = d.group.cyclic_orders;
      bool elem_p = std::all_of(orders.begin(), orders.end(), [&](int64_t k) { return k == p; });
      return d.param == 2 && elem_p && mers;
    }
    case FamilyDescriptor::Tag::z4_family:
    case FamilyDescriptor::Tag::z8_family:
      return false;
    case FamilyDescriptor::Tag::product:
      return std::all_of(d.factors.begin(), d.factors.end(),
                         [&](const FamilyDescriptor& f) { return predict_odd_p(f, p); });
  }
  return false;
}

ClassifyResult classify_at(const FamilyDescriptor& d, int64_t p, bool predicted, uint64_t cap) {
  ClassifyResult out;
  out.predicted = predicted;
  RingPtr ring = build_family(d, cap);
  if (!ring->fits(cap)) {
    out.note = "unverified: " + ring->describe() + " has " + ring->size_text() + " elements";
    return out;
  }
  auto v = is_delta_p(*ring, p, cap);
  out.brute = v.verdict;
  if (v.witness) out.witness = ring->to_string(*v.witness);
  if (v.verdict != predicted)
    throw ring_error(errc::internal,
                     "classification disagrees with the unit scan on " + d.str());
  out.note = ring->describe();
  return out;
}

}  // namespace

ClassifyResult classify_delta2(const FamilyDescriptor& d, uint64_t cap) {
  return classify_at(d, 2, predict_delta2(d), cap);
}

ClassifyResult odd_p_classifier(const FamilyDescriptor& d, int64_t p, uint64_t cap) {
  if (p <= 2 || !is_prime(p))
    throw ring_error(errc::unsupported, "classifier needs an odd prime, got " + std::to_string(p));
  return classify_at(d, p, predict_odd_p(d, p), cap);
}

}  // namespace deltaring
