#include "deltaring/unit_group.hpp"

#include <algorithm>

#include <json.hpp>

namespace deltaring {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<RingElement> units(const RingPtr& ring, uint64_t cap, UnitScan strategy) {
  uint64_t n = ring->size_checked(cap);
  std::vector<RingElement> out;
  bool via_nil = false;
  if (strategy != UnitScan::full && ring->ambient() != nullptr) {
    Ideal nil = nilpotents(ring, cap);
    unsigned __int128 nil_in_ring = nil.span_size();
    if (const auto* q = dynamic_cast<const QuotientRing*>(ring.get()))
      nil_in_ring /= q->ideal_basis().span_size();
    if (nil_in_ring * 2 == ring->size128()) {
      via_nil = true;
      auto one = ring->one();
      for (uint64_t i = 0; i < n; ++i) {
        auto e = ring->element_at(i);
        if (nil.contains(e)) out.push_back(one + e);
      }
    } else if (strategy == UnitScan::one_plus_nil) {
      throw ring_error(errc::unsupported, "residue field of " + ring->describe() + " is not F2");
    }
  }
  if (!via_nil) {
    if (strategy == UnitScan::one_plus_nil)
      throw ring_error(errc::unsupported, "1+nil unit stream needs a single-modulus ring");
    for (uint64_t i = 0; i < n; ++i) {
      auto e = ring->element_at(i);
      if (ring->is_unit(e)) out.push_back(e);
    }
  }
  std::sort(out.begin(), out.end(), [&](const RingElement& a, const RingElement& b) {
    return ring->index_of(a) < ring->index_of(b);
  });
  return out;
}

UnitGroupReport analyze_unit_group(const RingPtr& ring, const std::string& ring_id,
                                   const std::vector<int64_t>& primes, uint64_t cap) {
  UnitGroupReport rep;
  rep.ring_id = ring_id.empty() ? ring->describe() : ring_id;
  auto us = units(ring, cap);
  rep.order = us.size();
  for (const auto& u : us) rep.exponent = std::lcm(rep.exponent, multiplicative_order(*ring, u));
  rep.abelian = us.size() <= 256 ? units_pairwise_commute(*ring, us) : true;
  std::optional<RingElement> witness;
  for (int64_t p : primes) {
    auto v = is_delta_p(*ring, p, cap);
    rep.delta_p.emplace_back(p, v.verdict);
    if (!v.verdict && !witness) witness = v.witness;
  }
  if (witness) {
    rep.witness = ring->to_string(*witness);
    if (!ring->is_unit(*witness)) throw ring_error(errc::internal, "witness is not a unit");
  }
  if (rep.order > 1 && is_prime(rep.exponent)) {
    int64_t p = rep.exponent;
    uint64_t n = rep.order;
    int t = 0;
    while (n % uint64_t(p) == 0) {
      n /= uint64_t(p);
      ++t;
    }
    if (n == 1 && rep.abelian) rep.ea_rank = {p, t};
  }
  return rep;
}

std::string report_json(const UnitGroupReport& rep) {
  nlohmann::ordered_json j;
  j["ring"] = rep.ring_id;
  j["order"] = rep.order;
  j["exponent"] = rep.exponent;
  j["abelian"] = rep.abelian;
  nlohmann::ordered_json dp = nlohmann::ordered_json::object();
  for (const auto& [p, v] : rep.delta_p) dp[std::to_string(p)] = v;
  j["delta"] = dp;
  if (rep.ea_rank) {
    j["ea_rank"] = {{"p", rep.ea_rank->first}, {"t", rep.ea_rank->second}};
  } else {
    j["ea_rank"] = nullptr;
  }
  j["witness"] = rep.witness ? nlohmann::ordered_json(*rep.witness) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

}  // namespace deltaring
