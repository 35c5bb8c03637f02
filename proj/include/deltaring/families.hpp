#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaring/ring.hpp"

namespace deltaring {

struct GroupSpec {
  std::vector<int64_t> cyclic_orders;  // each >= 2
};

// F_2[x_1..x_l]/(x_i^2); l = 0 degenerates to F_2 itself.
PresPtr truncated_f2(int l);

// Z_n[s_1..s_r]/(s_i^{k_i} - 1), the group algebra of a product of cyclic
// groups.
PresPtr group_algebra(int64_t n, const GroupSpec& g);

// GF(p^m) with a fixed irreducible reduction per (p, m); construction
// verifies that every nonzero element is a unit.
PresPtr finite_field(int64_t p, int m);
PresPtr gf(int m);
PresPtr gf(int m, std::vector<int64_t> reduction);

// The unique maximal ideal (2, x_1-1, ..., x_l-1) of a Z_4/Z_8 group-algebra
// presentation; verified to have index 2.
Ideal maximal_ideal_P(const PresPtr& parent);

// The ideal generated by eta*(eta+2) over all eta in P, computed from the
// finite polarization set {b^2+2b} u {2*b_i*b_j} over P's module basis.
Ideal eta_ideal_J(const PresPtr& ring, const Ideal& p_ideal);

std::shared_ptr<const QuotientRing> z_family(int64_t characteristic, int l,
                                             uint64_t cap = kDefaultElementCap);

// True iff j_user contains eta_ideal_J; cross-checked on every call against
// the brute-force delta_2 verdict of the quotient.
bool delta2_quotient_criterion(const PresPtr& parent, const Ideal& j_user,
                               uint64_t cap = kDefaultElementCap);

bool is_mersenne(int64_t p);

struct FamilyDescriptor {
  enum class Tag { truncated_f2, f3, gf, group_algebra, z4_family, z8_family, product };
  Tag tag = Tag::f3;
  int64_t param = 0;  // l for truncated_f2 and z-families, m for gf, n for group_algebra
  GroupSpec group;
  std::vector<FamilyDescriptor> factors;
  int exponent = 1;

  static FamilyDescriptor parse(const std::string& text);
  std::string str() const;
  friend bool operator==(const FamilyDescriptor&, const FamilyDescriptor&);
};

RingPtr build_family(const FamilyDescriptor& d, uint64_t cap = kDefaultElementCap);

struct ClassifyResult {
  bool predicted = false;
  std::optional<bool> brute;  // nullopt when the concrete ring exceeds the cap
  std::optional<std::string> witness;
  std::string note;
  bool verified() const { return brute.has_value(); }
};

// Predicted verdict from the classification of finite commutative delta_2
// rings, cross-checked against the brute-force unit scan when it fits.
ClassifyResult classify_delta2(const FamilyDescriptor& d, uint64_t cap = kDefaultElementCap);

// Same for odd primes: delta_p holds exactly for products of F_2 and
// F_{p+1} with p Mersenne.
ClassifyResult odd_p_classifier(const FamilyDescriptor& d, int64_t p,
                                uint64_t cap = kDefaultElementCap);

}  // namespace deltaring
