#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "deltaring/unit_group.hpp"

using namespace deltaring;

namespace {

PresPtr zn(int64_t n) { return make_ring(Modulus(n), {}); }
PresPtr znc2(int64_t n) { return make_ring(Modulus(n), {{"s", 2, {1}}}); }

}  // namespace

TEST_CASE("unit streams") {
  // brute inverse search over Z24 finds 8 units
  auto z24 = zn(24);
  std::set<int64_t> brute;
  for (int64_t a = 0; a < 24; ++a)
    for (int64_t b = 0; b < 24; ++b)
      if (a * b % 24 == 1) brute.insert(a);
  CHECK(brute.size() == 8);
  auto us = units(z24);
  CHECK(us.size() == 8);
  for (const auto& u : us) CHECK(brute.count(u.c[0]) == 1);

  auto t = make_ring(Modulus(2), {{"t", 2, {0}}});
  std::set<std::string> names;
  for (const auto& u : units(t)) names.insert(u.str());
  CHECK(names == std::set<std::string>{"1", "1 + t"});

  // the eight order-<=2 units of Z4[s]/(s^2-1)
  auto r = znc2(4);
  names.clear();
  for (const auto& u : units(r)) names.insert(u.str());
  CHECK(names == std::set<std::string>{"1", "s", "3*s", "1 + 2*s", "2 + s", "2 + 3*s", "3",
                                       "3 + 2*s"});
}

TEST_CASE("one-plus-nilradical stream agrees with the full scan") {
  std::vector<RingPtr> locals = {znc2(4), znc2(8), make_ring(Modulus(2), {{"t", 2, {0}}}),
                                 make_ring(Modulus(2), {{"x", 2, {0}}, {"y", 2, {0}}})};
  for (const auto& r : locals) {
    auto fast = units(r, kDefaultElementCap, UnitScan::one_plus_nil);
    auto full = units(r, kDefaultElementCap, UnitScan::full);
    CHECK(fast == full);
  }
  CHECK_THROWS_AS(units(zn(5), kDefaultElementCap, UnitScan::one_plus_nil), ring_error);
}

TEST_CASE("delta_p verdicts") {
  CHECK(is_delta_p(*zn(24), 2).verdict);
  for (int64_t n = 2; n <= 30; ++n) CHECK(is_delta_p(*zn(n), 2).verdict == (24 % n == 0));

  auto z8c2 = znc2(8);
  auto v = is_delta_p(*z8c2, 2);
  CHECK(!v.verdict);
  REQUIRE(v.witness.has_value());
  // pinned witness identity, bit-exact
  auto u = z8c2->element({1, 2});
  CHECK(u * u == z8c2->element({5, 4}));
  CHECK(z8c2->is_unit(u));

  auto gf4 = make_ring(Modulus(2), {{"x", 2, {1, 1}}});
  CHECK(is_delta_p(*gf4, 3).verdict);

  auto z4c22 = make_ring(Modulus(4), {{"s1", 2, {1}}, {"s2", 2, {1}}});
  auto v2 = is_delta_p(*z4c22, 2);
  CHECK(!v2.verdict);
  REQUIRE(v2.witness.has_value());
  CHECK(v2.witness->c == std::vector<int64_t>{1, 1, 1, 0});  // 1 + s1 + s2 comes first
  auto w = z4c22->element({1, 1, 1, 0});
  CHECK(z4c22->is_unit(w));
  CHECK(w * w == z4c22->element({3, 2, 2, 2}));

  CHECK_THROWS_AS(is_delta_p(*zn(4), 4), ring_error);
  CHECK_THROWS_AS(is_delta_p(*zn(4), 15), ring_error);
}

TEST_CASE("witness soundness") {
  std::vector<RingPtr> rings = {znc2(8), zn(5), zn(16), make_ring(Modulus(2), {{"x", 3, {1, 1}}})};
  for (const auto& r : rings)
    for (int64_t p : {2, 3}) {
      auto v = is_delta_p(*r, p);
      if (!v.verdict) {
        REQUIRE(v.witness.has_value());
        CHECK(r->is_unit(*v.witness));
        CHECK(!(v.witness->pow(uint64_t(p)) == r->one()));
      }
    }
}

TEST_CASE("elementary abelian rank") {
  CHECK(elementary_abelian_rank(*zn(3), 2) == 1);
  auto tr2 = make_ring(Modulus(2), {{"t1", 2, {0}}, {"t2", 2, {0}}});
  CHECK(elementary_abelian_rank(*tr2, 2) == 3);
  CHECK(elementary_abelian_rank(*znc2(4), 2) == 3);
  CHECK(!elementary_abelian_rank(*zn(5), 2).has_value());
  CHECK(elementary_abelian_rank(*zn(5), 2) == std::nullopt);
  // trivial unit group has rank 0 at every prime
  CHECK(elementary_abelian_rank(*zn(2), 2) == 0);
  CHECK(elementary_abelian_rank(*zn(2), 7) == 0);
}

TEST_CASE("unit exponent") {
  CHECK(unit_exponent(*zn(8)) == 2);
  CHECK(unit_exponent(*make_ring(Modulus(2), {{"x", 2, {1, 1}}})) == 3);
  CHECK(unit_exponent(*zn(5)) == 4);
}

TEST_CASE("delta_p is multiplicative over products") {
  std::vector<RingPtr> factors = {zn(3), zn(8), make_ring(Modulus(2), {{"t", 2, {0}}}),
                                  make_ring(Modulus(2), {{"x", 2, {1, 1}}}), znc2(4)};
  for (const auto& a : factors)
    for (const auto& b : factors) {
      auto prod = product_ring({a, b});
      for (int64_t p : {2, 3}) {
        bool lhs = is_delta_p(*prod, p).verdict;
        bool rhs = is_delta_p(*a, p).verdict && is_delta_p(*b, p).verdict;
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("unit count plus zero divisors equals ring size") {
  std::vector<RingPtr> rings = {zn(24), znc2(4), znc2(8), zn(7),
                                product_ring({zn(3), make_ring(Modulus(2), {{"t", 2, {0}}})})};
  for (const auto& r : rings) {
    uint64_t nunits = units(r).size();
    uint64_t nonunits = 0;
    for_each_element(r, kDefaultElementCap,
                     [&](const RingElement& e) { nonunits += !r->is_unit(e); });
    CHECK(nunits + nonunits == uint64_t(r->size128()));
  }
}

TEST_CASE("delta2 rings have abelian unit groups") {
  std::vector<RingPtr> rings = {zn(24), znc2(4), znc2(6),
                                make_ring(Modulus(2), {{"x", 2, {0}}, {"y", 2, {0}}})};
  for (const auto& r : rings) {
    if (!is_delta_p(*r, 2).verdict) continue;
    auto us = units(r);
    REQUIRE(us.size() <= 256);
    CHECK(units_pairwise_commute(*r, us));
  }
}

TEST_CASE("unit group report serializes deterministically") {
  auto rep = analyze_unit_group(znc2(4), "Z4C2", {2, 3});
  CHECK(rep.order == 8);
  CHECK(rep.exponent == 2);
  CHECK(rep.abelian);
  REQUIRE(rep.ea_rank.has_value());
  CHECK(rep.ea_rank->first == 2);
  CHECK(rep.ea_rank->second == 3);
  CHECK(rep.witness.has_value());  // fails delta_3
  auto j1 = report_json(rep);
  auto j2 = report_json(analyze_unit_group(znc2(4), "Z4C2", {2, 3}));
  CHECK(j1 == j2);
  CHECK(j1.find("\"ring\":\"Z4C2\"") != std::string::npos);
}

TEST_CASE("cap errors carry the exact size") {
  auto big = make_ring(Modulus(8), {{"x", 2, {1}}, {"y", 2, {1}}});
  CHECK_THROWS_AS(units(big, 100), cap_error);
}
