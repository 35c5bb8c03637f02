#include "deltaring/ring_spec.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "deltaring/families.hpp"
#include "deltaring/unit_group.hpp"

namespace deltaring {

namespace {

int term_degree(const RingSpecAST::Term& t) {
  return std::accumulate(t.exps.begin(), t.exps.end(), 0);
}

// canonical term order: total degree descending, then exponents lex descending
bool term_before(const RingSpecAST::Term& a, const RingSpecAST::Term& b) {
  int da = term_degree(a), db = term_degree(b);
  if (da != db) return da > db;
  return a.exps > b.exps;
}

void canonicalize(RingSpecAST::Poly& p, size_t nvars) {
  for (auto& t : p.terms) t.exps.resize(nvars, 0);
  std::sort(p.terms.begin(), p.terms.end(), term_before);
  std::vector<RingSpecAST::Term> merged;
  for (auto& t : p.terms) {
    if (!merged.empty() && merged.back().exps == t.exps)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const RingSpecAST::Term& t) { return t.coeff == 0; });
  p.terms = std::move(merged);
}

struct Parser {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw parse_error(errc::syntax, pos, std::string("expected '") + c + "'");
  }
  bool digit_next() {
    skip_ws();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  int64_t uinteger() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw parse_error(errc::syntax, pos, "expected an integer");
    return std::stoll(s.substr(start, pos - start));
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
    }
    if (start == pos) throw parse_error(errc::syntax, pos, "expected an identifier");
    return s.substr(start, pos - start);
  }

  RingSpecAST::Node term() {
    RingSpecAST::Node n = primary();
    skip_ws();
    if (eat('^')) {
      int64_t k = uinteger();
      if (k < 1) throw parse_error(errc::syntax, pos, "power must be positive");
      n.exponent = int(k);
    }
    return n;
  }

  RingSpecAST::Node primary() {
    skip_ws();
    size_t save = pos;
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
      std::string word = ident();
      if (word == "product") {
        RingSpecAST::Node n;
        expect('(');
        n.factors.push_back(term());
        while (eat(',')) n.factors.push_back(term());
        expect(')');
        return n;
      }
      pos = save;
    }
    return atom();
  }

  RingSpecAST::Node atom() {
    skip_ws();
    size_t coeff_at = pos;
    std::string letters;
    while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])))
      letters.push_back(s[pos++]);
    RingSpecAST::Node n;
    if (letters == "GF") {
      n.kind = RingSpecAST::Coeff::gf;
      expect('(');
      n.param = uinteger();
      expect(')');
    } else if (letters == "Z" || letters == "F") {
      n.kind = letters == "Z" ? RingSpecAST::Coeff::z : RingSpecAST::Coeff::f;
      if (!digit_next())
        throw parse_error(errc::missing_modulus, pos,
                          letters + " needs a modulus, e.g. " + letters + "4");
      n.param = uinteger();
    } else {
      throw parse_error(errc::syntax, coeff_at, "expected Z<n>, F<p>, GF(q) or product(...)");
    }
    if (eat('[')) {
      n.vars.push_back(ident());
      while (eat(',')) n.vars.push_back(ident());
      expect(']');
      expect('/');
      expect('(');
      n.relations.push_back(poly(n.vars));
      while (eat(',')) n.relations.push_back(poly(n.vars));
      expect(')');
    }
    if (eat('%')) {
      expect('(');
      n.extra.push_back(poly(n.vars));
      while (eat(',')) n.extra.push_back(poly(n.vars));
      expect(')');
    }
    return n;
  }

  RingSpecAST::Poly poly(const std::vector<std::string>& vars) {
    RingSpecAST::Poly p;
    bool negative = eat('-');
    p.terms.push_back(monomial_term(vars, negative));
    while (true) {
      skip_ws();
      if (eat('+'))
        p.terms.push_back(monomial_term(vars, false));
      else if (eat('-'))
        p.terms.push_back(monomial_term(vars, true));
      else
        break;
    }
    canonicalize(p, vars.size());
    return p;
  }

  RingSpecAST::Term monomial_term(const std::vector<std::string>& vars, bool negative) {
    RingSpecAST::Term t;
    t.coeff = negative ? -1 : 1;
    t.exps.assign(vars.size(), 0);
    bool saw_coeff = false, saw_var = false;
    while (true) {
      skip_ws();
      if (digit_next()) {
        t.coeff *= uinteger();
        saw_coeff = true;
      } else if (pos < s.size() &&
                 (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
        size_t at = pos;
        std::string v = ident();
        auto it = std::find(vars.begin(), vars.end(), v);
        if (it == vars.end())
          throw parse_error(errc::unknown_identifier, at, "unknown variable " + v);
        int e = 1;
        if (eat('^')) e = int(uinteger());
        t.exps[size_t(it - vars.begin())] += e;
        saw_var = true;
      } else {
        throw parse_error(errc::syntax, pos, "expected a coefficient or a variable");
      }
      if (!eat('*')) break;
    }
    if (!saw_coeff && !saw_var)
      throw parse_error(errc::syntax, pos, "empty term");
    return t;
  }
};

std::string poly_text(const RingSpecAST::Poly& p, const std::vector<std::string>& vars) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < p.terms.size(); ++i) {
    const auto& t = p.terms[i];
    int64_t c = t.coeff;
    if (i == 0) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    int64_t mag = c < 0 ? -c : c;
    std::string mono;
    for (size_t v = 0; v < t.exps.size(); ++v) {
      if (t.exps[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[v];
      if (t.exps[v] > 1) mono += "^" + std::to_string(t.exps[v]);
    }
    if (mono.empty())
      out += std::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += std::to_string(mag) + "*" + mono;
  }
  return out;
}

std::string node_text(const RingSpecAST::Node& n) {
  std::string out;
  if (!n.factors.empty()) {
    out = "product(";
    for (size_t i = 0; i < n.factors.size(); ++i) {
      if (i) out += ", ";
      out += node_text(n.factors[i]);
    }
    out += ")";
  } else {
    switch (n.kind) {
      case RingSpecAST::Coeff::z: out = "Z" + std::to_string(n.param); break;
      case RingSpecAST::Coeff::f: out = "F" + std::to_string(n.param); break;
      case RingSpecAST::Coeff::gf: out = "GF(" + std::to_string(n.param) + ")"; break;
    }
    if (!n.vars.empty()) {
      out += "[";
      for (size_t i = 0; i < n.vars.size(); ++i) {
        if (i) out += ",";
        out += n.vars[i];
      }
      out += "]/(";
      for (size_t i = 0; i < n.relations.size(); ++i) {
        if (i) out += ", ";
        out += poly_text(n.relations[i], n.vars);
      }
      out += ")";
    }
    if (!n.extra.empty()) {
      out += "%(";
      for (size_t i = 0; i < n.extra.size(); ++i) {
        if (i) out += ", ";
        out += poly_text(n.extra[i], n.vars);
      }
      out += ")";
    }
  }
  if (n.exponent != 1) out += "^" + std::to_string(n.exponent);
  return out;
}

struct PrimePower {
  int64_t p;
  int m;
};

PrimePower factor_prime_power(int64_t q) {
  if (q < 2) throw ring_error(errc::bad_presentation, "field order must be at least 2");
  for (int64_t p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    int m = 0;
    int64_t rest = q;
    while (rest % p == 0) {
      rest /= p;
      ++m;
    }
    if (rest != 1)
      throw ring_error(errc::bad_presentation, std::to_string(q) + " is not a prime power");
    return {p, m};
  }
  return {q, 1};
}

RingPtr lower_node(const RingSpecAST::Node& n) {
  RingPtr base;
  if (!n.factors.empty()) {
    std::vector<RingPtr> comps;
    for (const auto& f : n.factors) comps.push_back(lower_node(f));
    base = product_ring(std::move(comps));
  } else {
    int64_t mod = 0;
    std::vector<VariableRule> rules;
    std::vector<std::string> rule_vars = n.vars;
    switch (n.kind) {
      case RingSpecAST::Coeff::z:
        mod = n.param;
        break;
      case RingSpecAST::Coeff::f:
        if (!is_prime(n.param))
          throw ring_error(errc::bad_presentation,
                           "F" + std::to_string(n.param) + ": use GF(q) for prime powers");
        mod = n.param;
        break;
      case RingSpecAST::Coeff::gf: {
        PrimePower pp = factor_prime_power(n.param);
        mod = pp.p;
        if (pp.m > 1) {
          if (n.vars.empty()) {
            base = finite_field(pp.p, pp.m);
          } else {
            if (std::find(n.vars.begin(), n.vars.end(), "g") != n.vars.end())
              throw ring_error(errc::bad_presentation,
                               "identifier g is reserved for the field generator");
            // hidden generator carries the field structure
            if (pp.p != 2)
              throw ring_error(errc::unsupported,
                               "GF(p^m) coefficients with variables support p = 2 only");
            std::vector<int64_t> red;
            switch (pp.m) {
              case 2: red = {1, 1}; break;
              case 3: red = {1, 1, 0}; break;
              case 4: red = {1, 1, 0, 0}; break;
              case 5: red = {1, 0, 1, 0, 0}; break;
              default:
                throw ring_error(errc::unsupported, "GF(2^m) supported for m <= 5");
            }
            rules.push_back({"g", pp.m, std::move(red)});
          }
        }
        break;
      }
    }
    if (!base) {
      Modulus m(mod);
      // one monic univariate relation per declared variable
      std::vector<RingSpecAST::Poly> assigned(n.vars.size());
      std::vector<bool> have(n.vars.size(), false);
      for (const auto& rel : n.relations) {
        if (rel.terms.empty())
          throw ring_error(errc::bad_presentation, "zero relation");
        const auto& lead = rel.terms.front();
        int var = -1;
        for (size_t v = 0; v < n.vars.size(); ++v)
          if (lead.exps[v] > 0) {
            if (var >= 0)
              throw ring_error(errc::non_monic_relation,
                               "leading term of " + poly_text(rel, n.vars) +
                                   " must be a power of one variable");
            var = int(v);
          }
        if (var < 0)
          throw ring_error(errc::non_monic_relation,
                           "relation " + poly_text(rel, n.vars) + " has no leading variable");
        if (mod_reduce(lead.coeff, m) != 1)
          throw ring_error(errc::non_monic_relation,
                           "leading coefficient of " + poly_text(rel, n.vars) + " is not 1");
        int degree = lead.exps[size_t(var)];
        std::vector<int64_t> reduction(size_t(degree), 0);
        for (size_t i = 1; i < rel.terms.size(); ++i) {
          const auto& t = rel.terms[i];
          for (size_t v = 0; v < n.vars.size(); ++v)
            if (int(v) != var && t.exps[v] > 0)
              throw ring_error(errc::bad_presentation,
                               "relation " + poly_text(rel, n.vars) + " mentions another variable");
          int e = t.exps[size_t(var)];
          if (e >= degree)
            throw ring_error(errc::non_monic_relation,
                             "relation " + poly_text(rel, n.vars) + " is not monic in its leading power");
          reduction[size_t(e)] = mod_reduce(reduction[size_t(e)] - t.coeff, m);
        }
        if (have[size_t(var)])
          throw ring_error(errc::bad_presentation,
                           "variable " + n.vars[size_t(var)] + " has two relations");
        have[size_t(var)] = true;
        rules.push_back({n.vars[size_t(var)], degree, std::move(reduction)});
      }
      for (size_t v = 0; v < n.vars.size(); ++v)
        if (!have[v])
          throw ring_error(errc::bad_presentation,
                           "variable " + n.vars[v] + " has no reduction relation");
      base = make_ring(m, std::move(rules));
    }
    // extra quotient generators
    if (!n.extra.empty()) {
      const auto* pres = dynamic_cast<const RingPresentation*>(base.get());
      if (!pres) throw ring_error(errc::internal, "quotient of a non-presentation");
      // map declared variable positions to presentation variable indices
      std::vector<size_t> var_index(n.vars.size());
      for (size_t v = 0; v < n.vars.size(); ++v) {
        bool found = false;
        for (size_t r = 0; r < pres->rules().size(); ++r)
          if (pres->rules()[r].name == n.vars[v]) {
            var_index[v] = r;
            found = true;
          }
        if (!found) throw ring_error(errc::internal, "lost variable " + n.vars[v]);
      }
      std::vector<RingElement> gens;
      for (const auto& g : n.extra) {
        RingElement acc = base->zero();
        for (const auto& t : g.terms) {
          RingElement term = base->from_int(t.coeff);
          for (size_t v = 0; v < n.vars.size(); ++v)
            for (int e = 0; e < t.exps[v]; ++e) term = term * pres->var(var_index[v]);
          acc = acc + term;
        }
        gens.push_back(acc);
      }
      base = quotient_ring(base, ideal_closure(base, gens));
    }
  }
  if (n.exponent == 1) return base;
  std::vector<RingPtr> copies(size_t(n.exponent), base);
  return product_ring(std::move(copies));
}

}  // namespace

RingSpecAST parse_ring_spec(const std::string& text) {
  Parser p{text};
  RingSpecAST ast;
  ast.root = p.term();
  p.skip_ws();
  if (p.pos != text.size()) throw parse_error(errc::syntax, p.pos, "trailing input");
  return ast;
}

std::string print_ring_spec(const RingSpecAST& ast) { return node_text(ast.root); }

RingPtr lower_ring_spec(const RingSpecAST& ast) { return lower_node(ast.root); }

RingPtr lower_ring_spec(const std::string& text) {
  return lower_ring_spec(parse_ring_spec(text));
}

}  // namespace deltaring
