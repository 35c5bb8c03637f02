#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltaring/ring.hpp"

namespace deltaring {

bool is_prime(int64_t p);

// The scan templates work for any finite algebra exposing size128(),
// element_at(), one(), mul(), pow(), is_unit() and describe(); both CommRing
// and PathAlgebra qualify.  An algebra may publish a smaller candidate set
// for its units via unit_candidate_count()/unit_candidate_at().

template <class A, class Fn>
void for_each_algebra_element(const A& alg, uint64_t cap, Fn&& fn) {
  unsigned __int128 n = alg.size128();
  if (n > cap) throw cap_error(alg.describe(), u128_to_string(n), cap);
  for (uint64_t i = 0; i < uint64_t(n); ++i) fn(alg.element_at(i));
}

template <class A, class Fn>
void for_each_unit(const A& alg, uint64_t cap, Fn&& fn) {
  if constexpr (requires { alg.unit_candidate_count(); }) {
    unsigned __int128 n = alg.unit_candidate_count();
    if (n > cap) throw cap_error("unit scan of " + alg.describe(), u128_to_string(n), cap);
    for (uint64_t i = 0; i < uint64_t(n); ++i) {
      auto u = alg.unit_candidate_at(i);
      if (alg.is_unit(u)) fn(u);
    }
  } else {
    for_each_algebra_element(alg, cap, [&](const auto& e) {
      if (alg.is_unit(e)) fn(e);
    });
  }
}

template <class A>
struct DeltaVerdict {
  bool verdict = true;
  std::optional<typename A::element_type> witness;
  uint64_t unit_count = 0;
};

// True iff every unit satisfies u^p = 1; the witness is the first failing
// unit in enumeration order.
template <class A>
DeltaVerdict<A> is_delta_p(const A& alg, int64_t p, uint64_t cap = kDefaultElementCap) {
  if (!is_prime(p)) throw ring_error(errc::unsupported, std::to_string(p) + " is not prime");
  DeltaVerdict<A> out;
  auto e = alg.one();
  for_each_unit(alg, cap, [&](const auto& u) {
    ++out.unit_count;
    if (!out.witness && !(alg.pow(u, uint64_t(p)) == e)) out.witness = u;
  });
  if (out.witness) {
    out.verdict = false;
    if (!alg.is_unit(*out.witness) || alg.pow(*out.witness, uint64_t(p)) == e)
      throw ring_error(errc::internal, "witness failed re-verification");
  }
  return out;
}

template <class A>
int64_t multiplicative_order(const A& alg, const typename A::element_type& u) {
  auto e = alg.one();
  auto acc = u;
  int64_t k = 1;
  while (!(acc == e)) {
    acc = alg.mul(acc, u);
    if (++k > (1 << 24)) throw ring_error(errc::internal, "element order diverges");
  }
  return k;
}

template <class A>
int64_t unit_exponent(const A& alg, uint64_t cap = kDefaultElementCap) {
  int64_t l = 1;
  for_each_unit(alg, cap, [&](const auto& u) { l = std::lcm(l, multiplicative_order(alg, u)); });
  return l;
}

template <class A>
bool units_pairwise_commute(const A& alg, const std::vector<typename A::element_type>& units) {
  for (size_t i = 0; i < units.size(); ++i)
    for (size_t j = i + 1; j < units.size(); ++j)
      if (!(alg.mul(units[i], units[j]) == alg.mul(units[j], units[i]))) return false;
  return true;
}

// Rank t when the unit group is elementary abelian of order p^t, else nullopt.
// Commutativity is explicit for algebras flagged noncommutative and holds by
// construction otherwise.
template <class A>
std::optional<int> elementary_abelian_rank(const A& alg, int64_t p,
                                           uint64_t cap = kDefaultElementCap) {
  if (!is_prime(p)) throw ring_error(errc::unsupported, std::to_string(p) + " is not prime");
  auto e = alg.one();
  bool all_pth = true;
  std::vector<typename A::element_type> units;
  for_each_unit(alg, cap, [&](const auto& u) {
    units.push_back(u);
    all_pth &= alg.pow(u, uint64_t(p)) == e;
  });
  if (!all_pth) return std::nullopt;
  uint64_t n = units.size();
  int t = 0;
  while (n % uint64_t(p) == 0) {
    n /= uint64_t(p);
    ++t;
  }
  if (n != 1) return std::nullopt;
  constexpr bool noncommutative = requires { A::is_noncommutative; };
  if constexpr (noncommutative) {
    if (!units_pairwise_commute(alg, units)) return std::nullopt;
  }
  return t;
}

enum class UnitScan { automatic, full, one_plus_nil };

// The invertible elements, sorted by enumeration index.  In local rings with
// residue field F_2 the stream can be generated as 1 + nilradical, which
// skips the per-element invertibility test.
std::vector<RingElement> units(const RingPtr& ring, uint64_t cap = kDefaultElementCap,
                               UnitScan strategy = UnitScan::automatic);

struct UnitGroupReport {
  std::string ring_id;
  uint64_t order = 0;
  int64_t exponent = 1;
  bool abelian = true;
  std::vector<std::pair<int64_t, bool>> delta_p;
  std::optional<std::pair<int64_t, int>> ea_rank;
  std::optional<std::string> witness;
};

UnitGroupReport analyze_unit_group(const RingPtr& ring, const std::string& ring_id,
                                   const std::vector<int64_t>& primes,
                                   uint64_t cap = kDefaultElementCap);

std::string report_json(const UnitGroupReport& report);

}  // namespace deltaring
