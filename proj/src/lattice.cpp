#include "deltaring/lattice.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

namespace deltaring {

namespace {

// Pure-truncation presentations (every rule x^d -> 0) are local with maximal
// ideal {v : gcd(v[0], n) > 1}; extension candidates outside it would only
// rediscover the unit ideal.
bool pure_truncation(const RingPresentation& p) {
  for (const auto& r : p.rules())
    if (!std::all_of(r.reduction.begin(), r.reduction.end(), [](int64_t c) { return c == 0; }))
      return false;
  return true;
}

CanonicalBasis ring_zero_basis(const RingPtr& ring) {
  const RingPresentation* amb = ring->ambient();
  if (const auto* q = dynamic_cast<const QuotientRing*>(ring.get())) return q->ideal_basis();
  return howell_form(amb->modulus(), amb->dim(), {});
}

}  // namespace

LatticeReport enumerate_ideals(const RingPtr& ring, LatticeOptions opt) {
  const RingPresentation* amb = ring->ambient();
  if (!amb) throw ring_error(errc::unsupported, "ideal lattices of product rings are not supported");
  ring->size_checked(opt.cap);
  const Modulus m = amb->modulus();
  const size_t dim = amb->dim();
  const bool prune_units = pure_truncation(*amb);

  std::vector<CanonicalBasis> found;
  std::unordered_set<std::string> seen;
  std::deque<size_t> queue;
  auto discover = [&](CanonicalBasis b) {
    if (seen.insert(b.key()).second) {
      found.push_back(std::move(b));
      queue.push_back(found.size() - 1);
    }
  };
  discover(ring_zero_basis(ring));
  discover(CanonicalBasis::identity(m, dim));

  std::vector<int64_t> v(dim);
  while (!queue.empty()) {
    size_t at = queue.front();
    queue.pop_front();
    const std::vector<int64_t> radices = found[at].coset_radices();
    uint64_t reps = 1;
    for (int64_t r : radices) reps *= uint64_t(r);
    const std::vector<std::vector<int64_t>> base_rows = found[at].rows();
    for (uint64_t step = 1; step < reps; ++step) {
      uint64_t idx = opt.reverse_candidates ? reps - step : step;
      uint64_t rest = idx;
      for (size_t i = 0; i < dim; ++i) {
        v[i] = int64_t(rest % uint64_t(radices[i]));
        rest /= uint64_t(radices[i]);
      }
      if (prune_units && std::gcd(v[0], m.n) == 1) continue;
      std::vector<std::vector<int64_t>> rows = base_rows;
      for (size_t j = 0; j < dim; ++j) rows.push_back(amb->mul_by_monomial(v, j));
      discover(howell_form(m, dim, std::move(rows)));
    }
  }

  LatticeReport rep;
  rep.ring = ring;
  rep.ideals.reserve(found.size());
  std::sort(found.begin(), found.end(), [](const CanonicalBasis& a, const CanonicalBasis& b) {
    auto sa = a.span_size(), sb = b.span_size();
    if (sa != sb) return sa < sb;
    return a.rows() < b.rows();
  });
  for (auto& b : found) rep.ideals.emplace_back(ring, std::move(b));
  return rep;
}

const std::vector<std::pair<size_t, size_t>>& covering_relations(LatticeReport& rep) {
  if (rep.covers_computed) return rep.covers;
  const size_t n = rep.ideals.size();
  const size_t words = (n + 63) / 64;
  // sup[i] = bitset of j with ideals[i] contained in ideals[j]
  std::vector<std::vector<uint64_t>> sup(n, std::vector<uint64_t>(words, 0));
  std::vector<std::vector<uint64_t>> sub(n, std::vector<uint64_t>(words, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      bool inside = true;
      for (const auto& row : rep.ideals[i].basis().rows())
        if (!(inside = inside && rep.ideals[j].basis().contains(row))) break;
      if (inside) {
        sup[i][j / 64] |= uint64_t(1) << (j % 64);
        sub[j][i / 64] |= uint64_t(1) << (i % 64);
      }
    }
  rep.covers.clear();
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      if (!(sup[i][j / 64] >> (j % 64) & 1)) continue;  // need i strictly below j
      size_t between = 0;
      for (size_t w = 0; w < words; ++w) between += size_t(std::popcount(sup[i][w] & sub[j][w]));
      if (between == 2) rep.covers.emplace_back(j, i);
    }
  rep.covers_computed = true;
  return rep.covers;
}

namespace {

// Smallest generating subset of the ideal, ties broken by enumeration order.
std::string ideal_label(const RingPtr& ring, const Ideal& ideal) {
  if (ideal.basis().span_size() == ring_zero_basis(ring).span_size()) return "(0)";
  unsigned __int128 full = 1;
  for (int64_t r : ring->ambient()->radices()) full *= uint64_t(r);
  if (ideal.basis().span_size() == full) return "(1)";
  // Candidate generators: nonzero canonical ring elements inside the ideal.
  std::vector<RingElement> cands;
  const auto& rows = ideal.basis().rows();
  const Modulus m = ideal.basis().modulus();
  if (ideal.basis().span_size() <= 512) {
    std::set<std::vector<int64_t>> span_set;
    uint64_t combos = 1;
    for (size_t i = 0; i < rows.size(); ++i) combos *= uint64_t(m.n);
    for (uint64_t idx = 0; idx < combos; ++idx) {
      std::vector<int64_t> acc(ideal.basis().ambient_dim(), 0);
      uint64_t rest = idx;
      for (size_t i = 0; i < rows.size(); ++i) {
        int64_t c = int64_t(rest % uint64_t(m.n));
        rest /= uint64_t(m.n);
        for (size_t k = 0; k < acc.size(); ++k) acc[k] = mod_reduce(acc[k] + c * rows[i][k], m);
      }
      span_set.insert(ring->normalize_vec(acc));
    }
    for (const auto& vec : span_set) {
      auto e = ring->element(vec);
      if (!e.is_zero()) cands.push_back(e);
    }
    std::sort(cands.begin(), cands.end(), [&](const RingElement& a, const RingElement& b) {
      return ring->index_of(a) < ring->index_of(b);
    });
    for (size_t k = 1; k <= std::min<size_t>(cands.size(), 4); ++k) {
      std::vector<size_t> pick(k);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        std::vector<RingElement> gens;
        for (size_t p : pick) gens.push_back(cands[p]);
        if (ideal_closure(ring, gens) == ideal) {
          std::string s = "(";
          for (size_t i = 0; i < gens.size(); ++i) {
            if (i) s += ", ";
            s += gens[i].str();
          }
          return s + ")";
        }
        // next combination
        size_t i = k;
        while (i-- > 0) {
          if (++pick[i] <= cands.size() - (k - i)) {
            for (size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            break;
          }
          if (i == 0) goto next_size;
        }
      }
    next_size:;
    }
  }
  // Large span: fall back to the basis rows as generators.
  std::string s = "(";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ", ";
    s += ring->element(rows[i]).str();
  }
  return s + ")";
}

}  // namespace

std::string export_dot(LatticeReport& rep) {
  if (rep.ideals.empty())
    throw ring_error(errc::bad_presentation, "report must contain the zero and unit ideal");
  unsigned __int128 full = 1;
  for (int64_t r : rep.ring->ambient()->radices()) full *= uint64_t(r);
  if (rep.ideals.front().basis().span_size() != ring_zero_basis(rep.ring).span_size() ||
      rep.ideals.back().basis().span_size() != full)
    throw ring_error(errc::bad_presentation, "report must contain the zero and unit ideal");
  covering_relations(rep);
  std::string out = "digraph ideal_lattice {\n  rankdir=TB;\n";
  for (size_t i = 0; i < rep.ideals.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + ideal_label(rep.ring, rep.ideals[i]) +
           "\"];\n";
  for (const auto& [upper, lower] : rep.covers)
    out += "  n" + std::to_string(upper) + " -> n" + std::to_string(lower) + ";\n";
  out += "}\n";
  return out;
}

uint64_t count_antichains(int l) {
  if (l < 1) throw ring_error(errc::unsupported, "need at least one generator");
  if (l > 6)
    throw ring_error(errc::unsupported,
                     "l = " + std::to_string(l) +
                         " is out of desk scale (l = 7, 8 take specialized machinery)");
  const int nsub = 1 << l;
  std::vector<int> subs(static_cast<size_t>(nsub), 0);
  std::iota(subs.begin(), subs.end(), 0);
  // rank order: by popcount, then numeric value
  std::sort(subs.begin(), subs.end(), [](int a, int b) {
    int pa = std::popcount(unsigned(a)), pb = std::popcount(unsigned(b));
    if (pa != pb) return pa < pb;
    return a < b;
  });
  std::vector<uint64_t> follow(size_t(nsub), 0);
  for (int i = 0; i < nsub; ++i)
    for (int j = i + 1; j < nsub; ++j) {
      int a = subs[size_t(i)], b = subs[size_t(j)];
      bool comparable = (a & b) == a || (a & b) == b;
      if (!comparable) follow[size_t(i)] |= uint64_t(1) << j;
    }
  // count antichains by extending along the rank order
  uint64_t all = nsub == 64 ? ~uint64_t(0) : (uint64_t(1) << nsub) - 1;
  struct Counter {
    const std::vector<uint64_t>& follow;
    uint64_t run(uint64_t candidates) const {
      uint64_t total = 1;
      uint64_t m = candidates;
      while (m) {
        int i = std::countr_zero(m);
        m &= m - 1;
        total += run(candidates & follow[size_t(i)]);
      }
      return total;
    }
  } counter{follow};
  return counter.run(all);
}

uint64_t count_monomial_ideals_via_lattice(int l, uint64_t cap) {
  if (l < 1) throw ring_error(errc::unsupported, "need at least one generator");
  std::vector<VariableRule> rules;
  for (int i = 1; i <= l; ++i) rules.push_back({"x" + std::to_string(i), 2, {0}});
  RingPtr ring = make_ring(Modulus(2), std::move(rules));
  LatticeOptions opt;
  opt.cap = cap;
  auto rep = enumerate_ideals(ring, opt);
  const auto* pres = ring->ambient();
  uint64_t count = 0;
  for (const auto& ideal : rep.ideals) {
    std::vector<RingElement> mono_gens;
    for (size_t j = 0; j < pres->dim(); ++j) {
      std::vector<int64_t> e(pres->dim(), 0);
      e[j] = 1;
      if (ideal.basis().contains(e)) mono_gens.push_back(ring->element(e));
    }
    if (ideal_closure(ring, mono_gens) == ideal) ++count;
  }
  return count;
}

}  // namespace deltaring
