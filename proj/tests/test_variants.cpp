#include "doctest.h"

#include "fixtures.hpp"
#include "varsemi/direct.hpp"
#include "varsemi/errors.hpp"
#include "varsemi/relations.hpp"
#include "varsemi/variants.hpp"

using namespace varsemi;
using namespace fixtures;

using Rows = std::vector<std::vector<element_type>>;

TEST_CASE("variant tables") {
  CHECK(variant(z2(), 0).variant == z2());
  auto const v = variant(z2(), 1);
  CHECK(v.variant.rows() == Rows{{1, 0}, {0, 1}});
  CHECK(v.variant.identity() == std::optional<element_type>(1));
  CHECK(v.sandwich == 1);
  CHECK(v.base == z2());
  CHECK(variant(left_zero(), 0).variant == left_zero());
  CHECK(variant(left_zero(), 1).variant == left_zero());
  CHECK_THROWS_AS(variant(z2(), 2), ElementOutOfRange);
}

TEST_CASE("idempotent_variant") {
  CHECK(idempotent_variant(z3(), 0).variant == z3());
  CHECK(idempotent_variant(left_zero(), 0).variant == left_zero());
  CHECK(idempotent_variant(min2(), 0).variant.rows() == Rows{{0, 0}, {0, 0}});
  CHECK_THROWS_AS(idempotent_variant(z2(), 1), NotIdempotent);
}

TEST_CASE("variant_star") {
  auto const vz = variant_star(variant(z2(), 1));
  CHECK(vz.R == Equivalence::universal(2));
  CHECK(vz.L == Equivalence::universal(2));

  auto const s = min3();
  auto const i = variant_star(variant(s, 2));  // 2 is the identity of min3
  auto const b = star(s);
  CHECK(i.L == b.L);
  CHECK(i.R == b.R);

  auto const m = variant_star(idempotent_variant(min2(), 0));
  CHECK(m.L == Equivalence::identity(2));
  CHECK(m.R == Equivalence::identity(2));
}

TEST_CASE("p_sets") {
  auto const z = p_sets(z2(), 1);
  CHECK(z.P1.members() == std::vector<element_type>{0, 1});
  CHECK(z.P2.members() == std::vector<element_type>{0, 1});
  CHECK(z.P.members() == std::vector<element_type>{0, 1});

  auto const m = p_sets(min3(), 2);
  CHECK(m.P == ElementSubset::full(3));

  auto const n = p_sets(null2(), 1);
  CHECK(n.P1.members() == std::vector<element_type>{0});
  CHECK(n.P == (n.P1 & n.P2));
}

TEST_CASE("variants and P-sets agree with direct evaluation on orders 1-3") {
  for (auto const& s : corpus({1, 2, 3})) {
    CAPTURE(s.rows());
    direct::Table const t(s);
    auto const          st = star(s);
    for (element_type a = 0; a < s.order(); ++a) {
      auto const v = variant(s, a);
      CHECK(direct::Table(v.variant).raw() == t.sandwich(a).raw());
      auto const P = p_sets(s, st, a);
      CHECK(P == p_sets(s, a));
      for (element_type x = 0; x < s.order(); ++x) {
        CHECK(P.P1.contains(x) == direct::R_star(t, t.mul(a, x), x));
        CHECK(P.P2.contains(x) == direct::L_star(t, t.mul(x, a), x));
      }
    }
  }
}
