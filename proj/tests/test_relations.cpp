#include "doctest.h"

#include "fixtures.hpp"
#include "varsemi/direct.hpp"
#include "varsemi/equivalence.hpp"
#include "varsemi/errors.hpp"
#include "varsemi/relations.hpp"

using namespace varsemi;
using namespace fixtures;

namespace {
  Equivalence ident(std::size_t n) {
    return Equivalence::identity(n);
  }
  Equivalence univ(std::size_t n) {
    return Equivalence::universal(n);
  }

  template <typename Pred>
  void check_against(Equivalence const& p, std::size_t n, Pred&& pred) {
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = 0; b < n; ++b) {
        INFO("a = " << a << ", b = " << b);
        CHECK(p.related(a, b) == pred(a, b));
      }
    }
  }

  std::vector<element_type> members_of(ElementSubset const& U) {
    return U.members();
  }
}  // namespace

TEST_CASE("Equivalence basics") {
  auto const p = Equivalence::from_labels({7, 3, 7});
  CHECK(p.class_indices() == std::vector<std::size_t>{0, 1, 0});
  CHECK(p.number_of_classes() == 2);
  CHECK(p.to_string() == "0 2|1");
  CHECK(p.related(0, 2));
  CHECK_FALSE(p.related(0, 1));
  CHECK(ident(3).refines(p));
  CHECK(p.refines(univ(3)));
  CHECK_FALSE(p.refines(ident(3)));

  auto const q = Equivalence::from_labels({0, 0, 1});
  CHECK(meet(p, q) == ident(3));
  CHECK(join(p, q) == univ(3));
  CHECK(Equivalence::from_pairs(4, {{0, 3}, {3, 2}}).to_string() == "0 2 3|1");
}

TEST_CASE("composition_mismatch detects non-transitive composites") {
  // p = {0 1|2}, q = {0|1 2}: p∘q relates 0 to 2 but not 2 to 0
  auto const p = Equivalence::from_labels({0, 0, 1});
  auto const q = Equivalence::from_labels({0, 1, 1});
  auto const m = composition_mismatch(p, q, join(p, q));
  REQUIRE(m.has_value());
  CHECK(*m == std::pair<element_type, element_type>{2, 0});
  CHECK_FALSE(composition_mismatch(p, p, p).has_value());
}

TEST_CASE("Green's relations on named semigroups") {
  SUBCASE("left zero") {
    auto const g = green(left_zero());
    CHECK(g.L == univ(2));
    CHECK(g.R == ident(2));
    CHECK(g.H == ident(2));
    CHECK(g.D == univ(2));
    CHECK(g.J == univ(2));
  }
  SUBCASE("Z2") {
    auto const g = green(z2());
    for (auto const* p : {&g.L, &g.R, &g.H, &g.D, &g.J}) {
      CHECK(*p == univ(2));
    }
  }
  SUBCASE("null semigroup") {
    auto const g = green(null2());
    for (auto const* p : {&g.L, &g.R, &g.H, &g.D, &g.J}) {
      CHECK(*p == ident(2));
    }
  }
}

TEST_CASE("starred relations on named semigroups") {
  auto const n = star(null2());
  CHECK(n.L == ident(2));
  CHECK(n.R == ident(2));
  auto const z = star(z2());
  CHECK(z.L == univ(2));
  CHECK(z.R == univ(2));
  CHECK(z.D == univ(2));
  auto const lz = star(left_zero());
  CHECK(lz.R == ident(2));
  CHECK(lz.L == univ(2));
  CHECK(lz.composition_is_join());
}

TEST_CASE("tilde relations on named semigroups") {
  CHECK(tilde(min2(), ElementSubset(2, std::vector<element_type>{1})).L == univ(2));
  CHECK(tilde(null2(), ElementSubset(2, std::vector<element_type>{0})).L == ident(2));
  auto const z = tilde(z2(), idempotents(z2()));
  CHECK(z.L == univ(2));
  CHECK(z.R == univ(2));
}

TEST_CASE("tilde validates U") {
  CHECK_THROWS_AS(tilde(min2(), ElementSubset(2)), EmptyU);
  CHECK_THROWS_AS(tilde(null2(), ElementSubset(2, std::vector<element_type>{1})),
                  NotIdempotentMember);
  CHECK_THROWS_AS(tilde(min2(), ElementSubset(3, std::vector<element_type>{0})), CarrierMismatch);
  try {
    tilde(z3(), ElementSubset(3, std::vector<element_type>{0, 1, 2}));
    FAIL("expected NotIdempotentMember");
  } catch (NotIdempotentMember const& e) {
    CHECK(e.element == 1);
  }
}

TEST_CASE("abundance") {
  CHECK(is_abundant(z2()));
  CHECK_FALSE(is_abundant(null2()));
  CHECK(is_abundant(left_zero()));

  CHECK_FALSE(is_weakly_u_abundant(null2(), ElementSubset(2, std::vector<element_type>{0})));
  CHECK(is_weakly_u_abundant(min2(), ElementSubset(2, std::vector<element_type>{1})));
  for (auto const& s : {z2(), left_zero(), right_zero(), min3(), z3()}) {
    CHECK(is_weakly_u_abundant(s, idempotents(s)));
    CHECK(is_weakly_u_abundant(s, idempotents(s), true));
  }
  // strict reading: the single class {0,1} of min2 under U = {1} holds 1
  CHECK(is_weakly_u_abundant(min2(), ElementSubset(2, std::vector<element_type>{1}), true));
  // left zero, U = {0}: the R~ class {1} has an idempotent but none in U
  auto const U0 = ElementSubset(2, std::vector<element_type>{0});
  CHECK(is_weakly_u_abundant(left_zero(), U0));
  CHECK_FALSE(is_weakly_u_abundant(left_zero(), U0, true));
}

TEST_CASE("relations agree with the brute-force definitions on orders 1-3") {
  for (auto const& s : corpus({1, 2, 3})) {
    CAPTURE(s.rows());
    direct::Table const t(s);
    auto const          n  = s.order();
    auto const          g  = green(s);
    auto const          st = star(s);
    check_against(g.L, n, [&](auto a, auto b) { return direct::L(t, a, b); });
    check_against(g.R, n, [&](auto a, auto b) { return direct::R(t, a, b); });
    check_against(st.L, n, [&](auto a, auto b) { return direct::L_star(t, a, b); });
    check_against(st.R, n, [&](auto a, auto b) { return direct::R_star(t, a, b); });
    CHECK(g.H == meet(g.L, g.R));
    CHECK(g.D == join(g.L, g.R));
    CHECK(g.D.refines(g.J));
    CHECK(st.H == meet(st.L, st.R));
    CHECK(st.D == join(st.L, st.R));
    CHECK(g.L.refines(st.L));
    CHECK(g.R.refines(st.R));

    auto const E = idempotents(s);
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
      ElementSubset const U(n, bits);
      if (!U.is_subset_of(E)) {
        continue;
      }
      auto const tb = tilde(s, U);
      auto const us = members_of(U);
      check_against(tb.L, n, [&](auto a, auto b) { return direct::L_tilde(t, us, a, b); });
      check_against(tb.R, n, [&](auto a, auto b) { return direct::R_tilde(t, us, a, b); });
      CHECK(st.L.refines(tb.L));
      CHECK(st.R.refines(tb.R));
    }
  }
}

TEST_CASE("regular semigroups: starred relations equal Green's relations") {
  std::size_t regular = 0;
  for (auto const& s : corpus({1, 2, 3, 4})) {
    if (!is_regular(s)) {
      continue;
    }
    ++regular;
    auto const g  = green(s);
    auto const st = star(s);
    CHECK(g.L == st.L);
    CHECK(g.R == st.R);
    auto const tb = tilde(s, idempotents(s));
    CHECK(tb.L == g.L);
    CHECK(tb.R == g.R);
    CHECK(is_abundant(s));
  }
  CHECK(regular > 0);
}
