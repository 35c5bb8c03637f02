#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "deltaring/ring.hpp"

namespace deltaring {

struct LatticeOptions {
  uint64_t cap = uint64_t(1) << 16;
  // Walk extension candidates in reverse; the result must not change.
  bool reverse_candidates = false;
};

struct LatticeReport {
  RingPtr ring;
  std::vector<Ideal> ideals;  // span size ascending, then basis rows lexicographic
  std::vector<std::pair<size_t, size_t>> covers;  // (upper, lower) indices
  bool covers_computed = false;
};

// Every ideal of the ring, found by breadth-first one-element extensions
// from the zero ideal, deduplicated by Howell basis.
LatticeReport enumerate_ideals(const RingPtr& ring, LatticeOptions opt = {});

// Transitive reduction of the containment order.
const std::vector<std::pair<size_t, size_t>>& covering_relations(LatticeReport& report);

// Hasse diagram in DOT form; nodes are labeled by a minimal generating set
// in canonical element order.
std::string export_dot(LatticeReport& report);

// Number of antichains of subsets of an l-element set; equals the number of
// monomial ideals of F_2[x_1..x_l]/(x_i^2).
uint64_t count_antichains(int l);

// Counts the monomial ideals inside the full lattice enumeration; must agree
// with count_antichains.
uint64_t count_monomial_ideals_via_lattice(int l, uint64_t cap = uint64_t(1) << 16);

}  // namespace deltaring
