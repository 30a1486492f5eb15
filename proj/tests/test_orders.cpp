#include "doctest.h"

#include "fixtures.hpp"
#include "varsemi/direct.hpp"
#include "varsemi/errors.hpp"
#include "varsemi/orders.hpp"
#include "varsemi/variants.hpp"

using namespace varsemi;
using namespace fixtures;

TEST_CASE("OrderRelation laws") {
  OrderRelation r(4, {0, 2, 3});
  CHECK(r.reflexivity_violation() == std::optional<element_type>(0));
  for (auto x : r.elements()) {
    r.set(x, x, true);
  }
  CHECK(r.is_partial_order());
  r.set(0, 2, true);
  r.set(2, 3, true);
  CHECK(r.transitivity_violation() == std::vector<element_type>{0, 2, 3});
  r.set(0, 3, true);
  CHECK(r.is_partial_order());
  r.set(3, 0, true);
  CHECK(r.antisymmetry_violation() == std::vector<element_type>{0, 3});
  CHECK_FALSE(r.contains(1));
  CHECK_THROWS_AS(r.leq(1, 0), ElementOutOfRange);
}

TEST_CASE("natural order on named semigroups") {
  auto const m = natural_leq(min3());
  CHECK(m.leq(0, 2));
  CHECK(m.leq(1, 2));
  CHECK_FALSE(m.leq(2, 1));
  auto const z = natural_leq(z2());
  CHECK_FALSE(z.leq(0, 1));
  CHECK(z.leq(1, 1));
  // null semigroup: 0 = 0·a = a·0 and 0·0 = 0, but nothing yields a
  auto const n = natural_leq(null2());
  CHECK(n.leq(0, 0));
  CHECK(n.leq(1, 1));
  CHECK(n.leq(0, 1));
  CHECK_FALSE(n.leq(1, 0));
}

TEST_CASE("idempotent_leq") {
  CHECK(idempotent_leq(min3(), 0, 1));
  CHECK_FALSE(idempotent_leq(min3(), 1, 0));
  CHECK_FALSE(idempotent_leq(left_zero(), 1, 0));
  CHECK_THROWS_AS(idempotent_leq(z2(), 1, 0), NotIdempotent);
}

TEST_CASE("orders on the idempotent variants of the left-zero semigroup") {
  auto const v = idempotent_variant(left_zero(), 0);
  auto const o = variant_idempotent_leq(v);
  CHECK(o.elements() == std::vector<element_type>{0, 1});
  CHECK_FALSE(o.leq(1, 0));
  CHECK_FALSE(o.leq(0, 1));
  CHECK(o.is_partial_order());
  CHECK_THROWS_AS(variant_idempotent_leq(variant(z2(), 1)), NotIdempotent);
  CHECK_THROWS_AS(variant_leq(variant(z2(), 1)), NotIdempotent);
}

TEST_CASE("natural order agrees with its definition and is a partial order") {
  for (auto const& s : corpus({1, 2, 3, 4})) {
    CAPTURE(s.rows());
    direct::Table const t(s);
    auto const          o = natural_leq(s);
    CHECK(o.is_partial_order());
    for (element_type a = 0; a < s.order(); ++a) {
      for (element_type b = 0; b < s.order(); ++b) {
        CHECK(o.leq(a, b) == direct::natural_leq(t, a, b));
      }
    }
    for (auto e : idempotents(s).members()) {
      for (auto f : idempotents(s).members()) {
        CHECK(o.leq(e, f) == idempotent_leq(s, e, f));
      }
    }
  }
}

TEST_CASE("variant orders agree with their definitions on orders 1-3") {
  for (auto const& s : corpus({1, 2, 3})) {
    for (auto e : idempotents(s).members()) {
      auto const          v  = idempotent_variant(s, e);
      direct::Table const tv(v.variant);
      auto const          vi = variant_idempotent_leq(v);
      auto const          vl = variant_leq(v);
      CHECK(vi.elements() == idempotents(v.variant).members());
      CHECK(vi.is_partial_order());
      CHECK(vl.is_partial_order());
      for (auto f : vi.elements()) {
        for (auto g : vi.elements()) {
          CHECK(vi.leq(f, g) == (tv.mul(f, g) == f && tv.mul(g, f) == f));
        }
      }
      for (element_type a = 0; a < s.order(); ++a) {
        for (element_type b = 0; b < s.order(); ++b) {
          CHECK(vl.leq(a, b) == direct::natural_leq(tv, a, b));
        }
      }
    }
  }
}
